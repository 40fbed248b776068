import math
from itertools import permutations, product

import pytest

from tpckit.errors import NotAGroup, NotASubgroup
from tpckit.examples import (
    KINDS,
    ExampleDescriptor,
    cyclic_table,
    free_monoid_products,
    make_cyclic,
    make_double_coset,
    make_example,
    make_free_monoid_fusion,
    make_group_fusion,
    make_integer_fusion,
    make_s3,
    make_s3_double_coset,
    make_tl_path,
    symmetric_group,
    tl_fusion_rule,
)
from tpckit.composition import Bicategory3, validate_bicategory
from tpckit.fusion import validate
from tpckit.perturbation import modulus_of


def _compose(p, q):
    return tuple(p[q[x]] for x in range(len(p)))


def perm_double_cosets(h, k):
    """H\\S3/K computed on raw permutations."""
    g = list(permutations(range(3)))
    out = []
    for x in g:
        c = frozenset(_compose(_compose(a, x), b) for a in h for b in k)
        if c not in out:
            out.append(c)
    return out


S3_PERMS = {
    "e": [(0, 1, 2)],
    "12": [(0, 1, 2), (1, 0, 2)],
    "123": [(0, 1, 2), (1, 2, 0), (2, 0, 1)],
    "S3": list(permutations(range(3))),
}


def test_group_axioms_checked():
    table, names = symmetric_group(3)
    assert len(table) == 6 and names[0] == "e"
    for x, y, z in product(range(6), repeat=3):
        assert table[table[x][y]][z] == table[x][table[y][z]]
    with pytest.raises(NotAGroup, match="associativity"):
        make_group_fusion([[0, 1, 2], [1, 0, 0], [2, 2, 0]])
    with pytest.raises(NotAGroup, match="identity"):
        make_group_fusion([[1, 1], [1, 1]])
    with pytest.raises(NotAGroup, match="inverses"):
        make_group_fusion([[0, 1], [1, 1]])
    with pytest.raises(NotAGroup):
        make_group_fusion([[0, 5], [1, 0]])


def test_not_a_subgroup():
    table, names = symmetric_group(3)
    with pytest.raises(NotASubgroup):
        make_double_coset(table, names, [names.index("(12)")], [0])
    with pytest.raises(NotASubgroup):
        make_double_coset(table, names, [0, names.index("(12)"), names.index("(13)")], [0])


@pytest.mark.parametrize("h, k", list(product(S3_PERMS, repeat=2)))
def test_double_cosets_brute_force(h, k):
    b = make_s3_double_coset(h, k)
    s = b.system
    ab = [v for v in s.by_id if s.sector(v) == ("A", "B")]
    assert len(ab) == len(perm_double_cosets(S3_PERMS[h], S3_PERMS[k]))
    ba = [v for v in s.by_id if s.sector(v) == ("B", "A")]
    assert len(ba) == len(ab)
    assert validate_bicategory(b) == []


def test_double_coset_products_support():
    # HeK (x) KeH = HKH as a set; its double cosets are the constituents
    b = make_s3_double_coset("12", "123")
    s = b.system
    cons = {c for c, _ in s.tensor[("AB[e]", "BA[e]")].constituents}
    hkh = perm_double_cosets(S3_PERMS["12"], S3_PERMS["12"])
    hk = {_compose(a, c) for a in S3_PERMS["12"] for c in S3_PERMS["123"]}
    hkh_set = {_compose(x, a) for x in hk for a in S3_PERMS["12"]}
    assert len(cons) == sum(1 for c in hkh if c <= hkh_set)
    assert all(m is None for _, m in s.tensor[("AB[e]", "BA[e]")].constituents)


def test_integer_fusion():
    s = make_integer_fusion(3)
    assert len(s.objects) == 7 and validate(s) == []
    assert s.tensor[("a^1", "a^2")].constituents == (("a^3", 1),)
    assert s.tensor[("a^2", "a^2")].truncated
    assert dict(s.generator) == {"1": 1, "a^1": 1}
    assert s.certified_weight["a^-2"] == -2


def test_cyclic():
    s = make_cyclic(5)
    assert [o.id for o in s.objects] == ["e", "g1", "g2", "g3", "g4"]
    assert s.by_id["g2"].dual == "g3"
    assert make_cyclic(1).generator is None
    assert cyclic_table(3) == [[0, 1, 2], [1, 2, 0], [2, 0, 1]]


def test_free_monoid_products():
    assert free_monoid_products("a", "b") == ["ab", ""]
    assert free_monoid_products("a", "a") == ["aa"]
    # ab is self-dual: cancel nothing, one letter, or both
    assert free_monoid_products("ab", "ab") == ["abab", "ab", ""]
    assert free_monoid_products("ab", "ba") == ["abba"]


def test_free_monoid_size():
    for n in (1, 2, 3):
        s = make_free_monoid_fusion(n)
        assert len(s.objects) == 2 ** (n + 1) - 1
        assert validate(s) == []


@pytest.mark.parametrize("n", range(2, 12))
def test_tl_dims_recursion(n):
    graphs, s, dims = make_tl_path(n)
    delta = 2 * math.cos(math.pi / (n + 1))
    (d,) = dims.entries.values()
    assert d.left == pytest.approx(delta, abs=1e-10) and d.right == pytest.approx(delta, abs=1e-10)
    # quantum dimensions d_{k+1} = delta d_k - d_{k-1} match the sines
    dk = [1.0, delta]
    for _ in range(n - 2):
        dk.append(delta * dk[-1] - dk[-2])
    for j, x in enumerate(dk):
        assert x == pytest.approx(math.sin((j + 1) * math.pi / (n + 1)) / math.sin(math.pi / (n + 1)), abs=1e-9)
    assert modulus_of(dims).index == pytest.approx(delta**2, abs=1e-10)
    assert validate(s) == []


def test_tl_rule():
    assert tl_fusion_rule(1, 1, 3) == [0, 2]
    assert tl_fusion_rule(1, 1, 1) == [0]
    assert tl_fusion_rule(2, 2, 3) == [0, 2]
    assert tl_fusion_rule(2, 2, 2) == [0]
    assert tl_fusion_rule(1, 2, 3) == [1, 3]
    assert tl_fusion_rule(1, 3, 3) == [2]


@pytest.mark.parametrize("kind", KINDS)
def test_every_kind_validates(kind):
    x = make_example(ExampleDescriptor(kind))
    if isinstance(x, Bicategory3):
        assert validate_bicategory(x) == []
    else:
        assert validate(x) == []


def test_limits_and_unknown():
    with pytest.raises(ValueError):
        make_example(ExampleDescriptor("integer", {"range": 10**6}))
    with pytest.raises(ValueError):
        make_example(ExampleDescriptor("nope"))
    with pytest.raises(ValueError):
        make_integer_fusion(0)


def test_s3_generator():
    assert dict(make_s3().generator) == {"(12)": 1, "(123)": 1}
