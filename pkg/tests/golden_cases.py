"""Shipped CLI fixtures and the golden cases run against them.

Both the golden test and ``regen_golden.py`` read this table, so a new case
only needs one line here plus a regeneration run.
"""
from pathlib import Path

HERE = Path(__file__).parent
FIXTURES = HERE / "fixtures"
GOLDEN = HERE / "golden"

# fixture name -> `tpckit example` arguments
EXAMPLE_FIXTURES = {
    "zn2": ["zn", "--n", "2"],
    "zn3": ["zn", "--n", "3"],
    "s3": ["s3"],
    "integer3": ["integer", "--range", "3"],
    "free_monoid2": ["free-monoid", "--max-len", "2"],
    "tl4": ["tl-path", "--n", "4"],
    "tl5": ["tl-path", "--n", "5"],
    "dc_12_123": ["double-coset", "--h", "12", "--k", "123"],
    "dc_e_e": ["double-coset", "--h", "e", "--k", "e"],
    "glued_cyclic_2_3": ["glued-cyclic", "--n1", "2", "--n2", "3"],
    "glued_integer2": ["glued-integer", "--range", "2"],
}

# hand-written fixtures, built by regen_golden.make_handmade
HANDMADE = ("modulus32", "sph14", "integer3_uncertified", "dangling_dual", "unknown_field", "broken_assoc")

# golden name -> (argv with {f} = fixture dir, expected exit code)
CASES = {
    "validate_zn2": (["validate", "{f}/zn2.json"], 0),
    "validate_dc": (["validate", "{f}/dc_12_123.json"], 0),
    "validate_broken": (["validate", "{f}/broken_assoc.json"], 2),
    "weights_integer3": (["weights", "{f}/integer3.json"], 0),
    "weights_free_monoid2": (["weights", "{f}/free_monoid2.json"], 0),
    "weights_tl4_even_a": (["weights", "{f}/tl4.json", "--even-only", "A"], 0),
    "weights_tl4": (["weights", "{f}/tl4.json"], 0),
    "tpc_zn2": (["tpc", "{f}/zn2.json"], 0),
    "tpc_s3": (["tpc", "{f}/s3.json"], 0),
    "tpc_integer3": (["tpc", "{f}/integer3.json"], 3),
    "tpc_free_monoid2": (["tpc", "{f}/free_monoid2.json"], 3),
    "tpc_integer3_uncertified": (["tpc", "{f}/integer3_uncertified.json"], 4),
    "dims_tl4": (["dims", "{f}/tl4.json"], 0),
    "dims_tl5_graph": (["dims", "{f}/tl5.json", "--graph"], 0),
    "dims_modulus32": (["dims", "{f}/modulus32.json"], 0),
    "perturb_scalar2": (["perturb", "{f}/modulus32.json", "--scalar", "2"], 0),
    "perturb_weight": (["perturb", "{f}/sph14.json", "--weight", "{f}/sph14_weight.json"], 0),
    "spherical_sph14": (["spherical", "{f}/sph14.json"], 0),
    "spherical_tl4": (["spherical", "{f}/tl4.json"], 0),
    "fuse_dc_12_123": (["fuse", "{f}/dc_12_123.json"], 0),
    "fuse_dc_e_e": (["fuse", "{f}/dc_e_e.json"], 0),
    "fuse_glued_cyclic": (["fuse", "{f}/glued_cyclic_2_3.json"], 0),
    "fuse_glued_integer": (["fuse", "{f}/glued_integer2.json"], 0),
    "cable_zn3_k2": (["cable", "{f}/zn3.json", "-k", "2"], 0),
    "cable_tl5_k2": (["cable", "{f}/tl5.json", "-k", "2"], 0),
    "cable_integer3_k2": (["cable", "{f}/integer3.json", "-k", "2"], 3),
    "example_zn2": (["example", "zn", "--n", "2"], 0),
    "example_tl4": (["example", "tl-path", "--n", "4"], 0),
    "example_dc": (["example", "double-coset", "--h", "12", "--k", "123"], 0),
}


def argv_for(name):
    argv, code = CASES[name]
    return [a.replace("{f}", str(FIXTURES)) for a in argv], code
