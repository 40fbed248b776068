import contextlib
import io
import json
import subprocess
import sys

import pytest

from golden_cases import CASES, EXAMPLE_FIXTURES, FIXTURES, GOLDEN, HANDMADE, argv_for
from tpckit import kernels, weights
from tpckit.cli import run
from tpckit.errors import InvariantViolation, SchemaError, ValidationError
from tpckit.examples import make_cyclic, make_s3_double_coset
from tpckit.io import dumps, parse, parse_weight, serialize, system_to_dict


def capture(argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin
    if stdin is not None:
        sys.stdin = io.StringIO(stdin)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = run(argv)
    finally:
        sys.stdin = old
    return out.getvalue(), err.getvalue(), code


@pytest.fixture(params=["default", "python"])
def either_backend(request, monkeypatch):
    if request.param == "python":
        monkeypatch.setattr(kernels, "_compiled", None)
    return request.param


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, either_backend):
    argv, want = argv_for(name)
    out, _, code = capture(argv)
    assert code == want
    assert out == (GOLDEN / f"{name}.json").read_text(encoding="utf-8")


def test_every_subcommand_has_a_golden():
    commands = {argv[0] for argv, _ in CASES.values()}
    assert commands == {"validate", "weights", "tpc", "dims", "perturb", "spherical", "fuse", "cable", "example"}


@pytest.mark.parametrize("name", sorted(EXAMPLE_FIXTURES) + [h for h in HANDMADE if h not in ("dangling_dual", "unknown_field")])
def test_round_trip(name):
    text = (FIXTURES / f"{name}.json").read_text()
    doc = parse(text, check=False)
    again = serialize(doc.system, doc.dims, doc.bicategory)
    assert again == text
    assert parse(again, check=False) == doc


def test_round_trip_equal_system():
    s = make_cyclic(2)
    assert parse(serialize(s)).system == s


def test_double_coset_verdicts_survive_round_trip():
    b = make_s3_double_coset("12", "123")
    doc = parse(serialize(b.system, composition=b))
    assert weights.is_tpc(doc.system) == weights.is_tpc(b.system)
    assert doc.bicategory == b


def test_dangling_dual():
    with pytest.raises(SchemaError, match="g7") as e:
        parse((FIXTURES / "dangling_dual.json").read_text())
    assert "$.objects[1].dual" in str(e.value)


def test_unknown_field():
    with pytest.raises(SchemaError, match="unknown field") as e:
        parse((FIXTURES / "unknown_field.json").read_text())
    assert "colour" in str(e.value)
    doc = json.loads((FIXTURES / "zn2.json").read_text())
    doc["objects"][0]["colour"] = 1
    with pytest.raises(SchemaError, match=r"\$\.objects\[0\]"):
        parse(json.dumps(doc))


def test_syntax_error_location():
    with pytest.raises(SchemaError, match="line 2, column"):
        parse('{\n  "a": }')


def test_validation_error():
    with pytest.raises(ValidationError) as e:
        parse((FIXTURES / "broken_assoc.json").read_text())
    assert e.value.violations


def test_weight_document():
    assert parse_weight('{"s1": 1, "s2": 2.5}') == {"s1": 1.0, "s2": 2.5}
    with pytest.raises(SchemaError):
        parse_weight('{"s1": 0}')
    with pytest.raises(SchemaError):
        parse_weight("{}")


def test_canonical_floats():
    assert dumps({"b": 0.1 + 0.2, "a": 1 / 3, "c": -0.0}) == (
        '{\n  "a": 0.333333333333333,\n  "b": 0.3,\n  "c": 0.0\n}\n'
    )
    with pytest.raises(ValueError):
        dumps({"x": float("nan")})


def test_support_only_multiplicity():
    doc = system_to_dict(make_s3_double_coset().system)
    mults = {c["mult"] for t in doc["tensor"] for c in t["contains"]}
    assert mults == {"?"}


def test_determinism():
    argv, _ = argv_for("fuse_dc_12_123")
    assert capture(argv)[0] == capture(argv)[0]


def test_stdin_pipelines():
    zn2, _, _ = capture(["example", "zn", "--n", "2"])
    out, _, code = capture(["tpc", "-"], stdin=zn2)
    assert code == 0 and json.loads(out)["result"]["tpc"] is True
    integer, _, _ = capture(["example", "integer", "--range", "3"])
    out, _, code = capture(["tpc", "-"], stdin=integer)
    witness = json.loads(out)["result"]["witness"]
    assert code == 3 and [witness[f"a^{n}"] for n in (-1, 1)] == [-1, 1] and witness["1"] == 0


def test_example_output_file(tmp_path):
    target = tmp_path / "s3.json"
    out, _, code = capture(["example", "s3", "-o", str(target)])
    assert code == 0 and out == ""
    assert target.read_text() == (FIXTURES / "s3.json").read_text()


EXIT_TABLE = [
    (["tpc", "{f}/zn2.json"], 0),
    (["bogus"], 1),
    ([], 1),
    (["tpc"], 1),
    (["cable", "{f}/zn3.json", "-k", "0"], 1),
    (["perturb", "{f}/modulus32.json"], 1),
    (["perturb", "{f}/modulus32.json", "--scalar", "2", "--weight", "{f}/sph14_weight.json"], 1),
    (["perturb", "{f}/modulus32.json", "--scalar", "-1"], 1),
    (["weights", "{f}/tl4.json", "--even-only", "Z"], 1),
    (["example", "integer", "--range", "100000"], 1),
    (["tpc", "{f}/dangling_dual.json"], 2),
    (["tpc", "{f}/unknown_field.json"], 2),
    (["tpc", "{f}/broken_assoc.json"], 2),
    (["validate", "{f}/broken_assoc.json"], 2),
    (["tpc", "{f}/does_not_exist.json"], 2),
    (["spherical", "{f}/zn2.json"], 2),
    (["fuse", "{f}/zn2.json"], 2),
    (["tpc", "{f}/integer3.json"], 3),
    (["cable", "{f}/integer3.json", "-k", "3"], 3),
    (["tpc", "{f}/integer3_uncertified.json"], 4),
]


@pytest.mark.parametrize("argv, code", EXIT_TABLE)
def test_exit_codes(argv, code):
    argv = [a.replace("{f}", str(FIXTURES)) for a in argv]
    out, err, got = capture(argv)
    assert got == code
    if code in (1, 2) and argv[:1] != ["validate"]:
        # validate reports violations on stdout; every other failure is stderr only
        assert out == "" and err.startswith("tpckit:")


def test_exit_invariant(monkeypatch):
    def boom(system, *a, **k):
        raise InvariantViolation("even algebras disagree")

    monkeypatch.setattr(weights, "is_tpc", boom)
    _, err, code = capture(["tpc", str(FIXTURES / "zn2.json")])
    assert code == 5 and "invariant" in err


def test_console_script():
    p = subprocess.run(
        [sys.executable, "-m", "tpckit", "tpc", str(FIXTURES / "zn2.json")],
        capture_output=True,
        text=True,
    )
    assert p.returncode == 0
    assert p.stdout == (GOLDEN / "tpc_zn2.json").read_text()
