"""Acceptance criteria 1-9, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` or as a script.
"""
import math
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tpckit.composition import cable, generated_subsystem, verify_tpc_closure  # noqa: E402
from tpckit.errors import TruncationExhausted  # noqa: E402
from tpckit.examples import (  # noqa: E402
    make_cyclic,
    make_free_monoid_fusion,
    make_glued_cyclic,
    make_glued_integer,
    make_integer_fusion,
    make_s3,
    make_s3_double_coset,
    make_tl_path,
)
from tpckit.fusion import pf_dimensions  # noqa: E402
from tpckit.io import parse, serialize  # noqa: E402
from tpckit.perturbation import (  # noqa: E402
    ConstituentDims,
    DimensionData,
    Modulus,
    is_spherical,
    min_index,
    modulus_of,
    normalize,
    perturb_dims,
    scalar_perturb,
    sphericalizing_weight,
)
from tpckit.weights import (  # noqa: E402
    FULL,
    WeightFunction,
    central_element_coeffs,
    even_only,
    is_tpc,
    solve_weight_space,
)

S3_SUBGROUPS = ("e", "12", "123", "S3")


def _timed(fn, limit):
    t0 = time.perf_counter()
    out = fn()
    dt = time.perf_counter() - t0
    assert dt < limit, f"took {dt:.2f}s, limit {limit}s"
    return out


def _sector_subsystems():
    """Connected two-algebra fixtures with a nonempty odd sector."""
    out = {f"tl{n}": make_tl_path(n)[1] for n in range(2, 7)}
    for h in S3_SUBGROUPS:
        for k in S3_SUBGROUPS:
            b = make_s3_double_coset(h, k)
            out[f"dc({h},{k}).ab"] = generated_subsystem(b.system, dict(b.gen_ab))
            out[f"dc({h},{k}).bc"] = generated_subsystem(b.system, dict(b.gen_bc))
    for n1, n2 in ((2, 2), (2, 3), (3, 3)):
        b = make_glued_cyclic(n1, n2)
        out[f"glued({n1},{n2}).ab"] = generated_subsystem(b.system, dict(b.gen_ab))
        out[f"glued({n1},{n2}).bc"] = generated_subsystem(b.system, dict(b.gen_bc))
    b = make_glued_integer(3)
    out["glued-integer.ab"] = generated_subsystem(b.system, dict(b.gen_ab))
    return out


# -- criteria ---------------------------------------------------------------


def criterion_1():
    def dim(s):
        return _timed(lambda: solve_weight_space(s), 1.0)

    assert dim(make_integer_fusion(3)).dimension == 1
    for n in (2, 3):
        s = make_free_monoid_fusion(n)
        space = dim(s)
        assert space.dimension == 1
        want = {v: v.count("a") - v.count("b") for v in s.by_id}
        assert space.vector(0) == want, f"free monoid L={n} basis {space.vector(0)}"
    zero = [make_cyclic(n) for n in range(2, 7)] + [make_s3()]
    # the A_n systems have a one-dimensional odd scale; TPC is about the even part
    zero += [make_tl_path(n)[1] for n in range(2, 7)]
    for s in zero:
        scope = even_only(s.algebras[0]) if len(s.algebras) > 1 else FULL
        assert _timed(lambda: solve_weight_space(s, scope), 1.0).dimension == 0
    return "Z 1, free monoid L=2,3 1 with #a-#b, Z/n S3 A_n 0"


def _fixtures_with_weights():
    out = {"integer3": make_integer_fusion(3)}
    for n in (2, 3, 4):
        out[f"free-monoid{n}"] = make_free_monoid_fusion(n)
    out.update(_sector_subsystems())
    return out


def criterion_2():
    checked = 0
    for name, s in _fixtures_with_weights().items():
        space = solve_weight_space(s)
        for i in range(space.dimension):
            exps = {v: (space.vector(i)[v],) for v in space.objects}
            w = WeightFunction.from_exponents(exps, [2.0])
            for v in space.objects:
                assert w.exact_log[v][0] + w.exact_log[s.dual(v)][0] == 0, f"{name}: dual at {v}"
            for u in s.units.values():
                assert w.exact_log[u][0] == 0 and w.values[u] == 1.0, f"{name}: unit {u}"
            for sign in "+-":
                for k in range(5):
                    try:
                        central_element_coeffs(s, w, sign, k)
                    except TruncationExhausted:
                        assert s.is_truncated, f"{name}: complete system ran out at depth {k}"
                        break
                    checked += 1
    return f"{checked} levels exact over {len(_fixtures_with_weights())} fixtures"


def criterion_3():
    for name, s in _sector_subsystems().items():
        full = solve_weight_space(s).dimension
        a, b = s.algebras
        da = solve_weight_space(s, even_only(a)).dimension
        db = solve_weight_space(s, even_only(b)).dimension
        assert full == da + 1 == db + 1, f"{name}: full {full}, even {da}/{db}"
    return f"{len(_sector_subsystems())} two-algebra fixtures"


def criterion_4():
    m = Modulus(3, 2)
    for lam in (0.5, 2.0, math.sqrt(2)):
        p = scalar_perturb(m, lam)
        assert abs(p.delta_minus - 3 / lam) <= 1e-12 and abs(p.delta_plus - 2 * lam) <= 1e-12
        assert abs(p.index - 6) <= 1e-12
    _, n = normalize(m)
    assert abs(n.delta_minus - math.sqrt(6)) <= 1e-12 and abs(n.delta_plus - math.sqrt(6)) <= 1e-12
    return "(3,2) scaled by 1/2, 2, sqrt2; index 6; normalize sqrt6"


def _normalized_spherical(d):
    lam, _ = normalize(modulus_of(d))
    return is_spherical(perturb_dims(d, {s: lam for s in d}))


def criterion_5():
    d = DimensionData.from_pairs([(1, 1), (4, 1)])
    w = sphericalizing_weight(d)
    assert abs(w.values["s1"] - 1) <= 1e-9 and abs(w.values["s2"] - 2) <= 1e-9
    m = modulus_of(perturb_dims(d, w))
    assert abs(m.delta_minus - 3) <= 1e-9 and abs(m.delta_plus - 3) <= 1e-9
    assert abs(min_index(d) - 9) <= 1e-9 and min_index(d) < modulus_of(d).index == 10
    grid = [2 ** (k / 16) for k in range(-64, 65)]
    best = min(modulus_of(perturb_dims(d, {"s1": 1.0, "s2": t})).index for t in grid)
    assert best >= min_index(d) - 1e-9 and abs(best - min_index(d)) <= 1e-9
    rng = random.Random(20240601)
    equal = 0
    for trial in range(200):
        dims = DimensionData.from_pairs(
            [(rng.uniform(0.1, 10), rng.uniform(0.1, 10), rng.randint(1, 3)) for _ in range(rng.randint(1, 4))]
        )
        if trial % 2:
            wt = {s: rng.uniform(0.2, 5) for s in dims}
        else:
            # a sphericalizing weight times a constant lands on the minimum
            c = rng.uniform(0.2, 5)
            wt = {s: c * v for s, v in sphericalizing_weight(dims).values.items()}
        p = perturb_dims(dims, wt)
        idx, low = modulus_of(p).index, min_index(dims)
        assert idx >= low - 1e-9, f"trial {trial}: {idx} < {low}"
        at_min = abs(idx - low) <= 1e-9 * max(1.0, low)
        assert at_min == _normalized_spherical(p), f"trial {trial}"
        equal += at_min
    return f"weight (1,2), index 9 < 10, grid of 129 agrees, 200 trials ({equal} at the minimum)"


def criterion_6():
    def run():
        for h, k in (("12", "123"), ("e", "e"), ("S3", "S3")):
            r = verify_tpc_closure(make_s3_double_coset(h, k))
            assert r.status == "PASS" and r.hypothesis, f"double coset ({h},{k}): {r.status}"
        for n1, n2 in ((2, 2), (2, 3), (3, 3), (1, 4)):
            r = verify_tpc_closure(make_glued_cyclic(n1, n2))
            assert r.status == "PASS" and r.hypothesis, f"glued ({n1},{n2}): {r.status}"
        tpc = [make_cyclic(n) for n in range(2, 7)] + [make_s3()] + [make_tl_path(n)[1] for n in range(2, 7)]
        for s in tpc:
            for k in range(1, 5):
                assert is_tpc(cable(s, k)).tpc, f"cable k={k} of {s.metadata}"
        for k in range(1, 5):
            v = is_tpc(cable(make_integer_fusion(4), k))
            assert not v.tpc and v.definitive, f"integer cable k={k}"

    _timed(run, 10.0)
    return "double cosets and glued cyclic PASS; cables k<=4; integer cable non-TPC"


def criterion_7():
    worst = 0.0
    for n in range(2, 9):
        graphs, _, dims = make_tl_path(n)
        norm = pf_dimensions(graphs, "plus").norm
        want = 2 * math.cos(math.pi / (n + 1))
        assert abs(norm - want) <= 1e-10, f"A_{n}: {norm} vs {want}"
        assert abs(modulus_of(dims).index - want**2) <= 1e-9
        worst = max(worst, abs(norm - want))
    return f"A_2..A_8 norms, max error {worst:.1e}"


def _mixed_fixtures():
    out = {f"z{n}": make_cyclic(n) for n in range(2, 7)}
    out["s3"] = make_s3()
    out.update(_sector_subsystems())
    return out


def criterion_8():
    fixtures = {**_mixed_fixtures(), "integer3": make_integer_fusion(3)}
    fixtures.update({f"free-monoid{n}": make_free_monoid_fusion(n) for n in (2, 3)})
    counts = {True: 0, False: 0}
    for name, s in fixtures.items():
        v = is_tpc(s)
        counts[v.tpc] += 1
        if v.tpc:
            assert all(d == 0 for d in v.dimensions.values()), name
            constituents = [c for c, _ in s.generator]
            dims = DimensionData({c: ConstituentDims(2.0, 2.0) for c in constituents})
            space = solve_weight_space(s)
            for i in range(space.dimension):
                w = WeightFunction.from_exponents({x: (space.vector(i)[x],) for x in space.objects}, [3.0])
                assert _normalized_spherical(perturb_dims(dims, w)), f"{name}: basis weight {i}"
        else:
            w = WeightFunction.from_exponents({x: (e,) for x, e in v.witness.items()}, [2.0])
            moved = [x for x, e in v.witness.items() if e]
            dims = DimensionData({x: ConstituentDims(1.5, 1.5) for x in v.witness})
            assert is_spherical(dims) and moved
            assert not is_spherical(perturb_dims(dims, w)), name
    return f"{counts[True]} TPC fixtures stay spherical, {counts[False]} witnesses break sphericality"


def criterion_9():
    from golden_cases import CASES, EXAMPLE_FIXTURES, FIXTURES, GOLDEN, argv_for
    from test_io_cli import EXIT_TABLE, capture

    for name in CASES:
        argv, want = argv_for(name)
        out, _, code = capture(argv)
        assert code == want, f"{name}: exit {code}"
        assert out == (GOLDEN / f"{name}.json").read_text(encoding="utf-8"), f"{name}: output differs"
    for name in EXAMPLE_FIXTURES:
        text = (FIXTURES / f"{name}.json").read_text()
        doc = parse(text)
        assert serialize(doc.system, doc.dims, doc.bicategory) == text, f"{name}: round trip"
    for argv, want in EXIT_TABLE:
        _, _, code = capture([a.replace("{f}", str(FIXTURES)) for a in argv])
        assert code == want, f"{argv}: exit {code}, expected {want}"
    return f"{len(CASES)} goldens byte-identical, {len(EXAMPLE_FIXTURES)} round trips, {len(EXIT_TABLE)} exit codes"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


def _run(i):
    fn = CRITERIA[i - 1]
    try:
        detail = fn()
    except AssertionError as e:
        return False, f"criterion {i}: FAIL  {e}"
    return True, f"criterion {i}: PASS  {detail}"


@pytest.mark.parametrize("i", range(1, 10))
def test_criterion(i, capsys):
    ok, line = _run(i)
    with capsys.disabled():
        print(f"\n{line}")
    assert ok, line


if __name__ == "__main__":
    results = [_run(i) for i in range(1, 10)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
