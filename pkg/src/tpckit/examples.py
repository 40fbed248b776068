"""Deterministic example systems.

Every constructor returns a system that passes :func:`tpckit.fusion.validate`
and records its parameters in ``metadata``.  Truncated examples carry a
certified weight when one is known for the untruncated system.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Mapping, Optional, Sequence

from .composition import Bicategory3
from .errors import NotAGroup, NotASubgroup
from .fusion import (
    COMPLETE,
    FusionObject,
    FusionSystem,
    PrincipalGraphPair,
    TensorEntry,
    truncated,
)
from .perturbation import DimensionData, dims_from_graph

# desk-scale bounds on example parameters
LIMITS = {
    "integer": 500,
    "zn": 200,
    "free-monoid": 10,
    "tl-path": 200,
    "group-order": 200,
}


def _check_limit(kind: str, value: int) -> None:
    if value > LIMITS[kind]:
        raise ValueError(f"{kind} parameter {value} exceeds the limit {LIMITS[kind]}")


# ---------------------------------------------------------------------------
# integers


def _power(n: int) -> str:
    return "1" if n == 0 else f"a^{n}"


def make_integer_fusion(range_: int) -> FusionSystem:
    """Truncation of the group Z at |n| <= range_, generated by 1 + a.

    The unit summand keeps every alternating cable of the generator
    nontrivial.  The certified weight is n at a^n.
    """
    if range_ < 1:
        raise ValueError("range must be at least 1")
    _check_limit("integer", range_)
    ns = [0] + [s * k for k in range(1, range_ + 1) for s in (1, -1)]
    objs = tuple(FusionObject(_power(n), "A", "A", _power(-n), n == 0) for n in ns)
    table = {}
    for m, n in product(ns, ns):
        if m == 0 or n == 0:
            continue
        if abs(m + n) <= range_:
            table[(_power(m), _power(n))] = TensorEntry(((_power(m + n), 1),))
        else:
            table[(_power(m), _power(n))] = TensorEntry((), truncated=True)
    return FusionSystem(
        algebras=("A",),
        objects=objs,
        tensor=table,
        generator=(("1", 1), ("a^1", 1)),
        completeness=truncated(range_),
        certified_weight={_power(n): n for n in ns},
        metadata={"kind": "integer", "range": range_},
    )


# ---------------------------------------------------------------------------
# finite groups


def _check_group(table: Sequence[Sequence[int]]) -> int:
    n = len(table)
    if n == 0:
        raise NotAGroup("closure: empty table")
    if any(len(row) != n for row in table) or any(not 0 <= x < n for row in table for x in row):
        raise NotAGroup("closure: table must be square with entries in range")
    ids = [e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))]
    if not ids:
        raise NotAGroup("identity: no two-sided identity")
    e = ids[0]
    for x in range(n):
        if not any(table[x][y] == e and table[y][x] == e for y in range(n)):
            raise NotAGroup(f"inverses: element {x} has no inverse")
    for x, y, z in product(range(n), repeat=3):
        if table[table[x][y]][z] != table[x][table[y][z]]:
            raise NotAGroup(f"associativity: fails on ({x}, {y}, {z})")
    return e


def _inverse(table: Sequence[Sequence[int]], e: int, x: int) -> int:
    return next(y for y in range(len(table)) if table[x][y] == e)


def make_group_fusion(
    table: Sequence[Sequence[int]],
    names: Optional[Sequence[str]] = None,
    generator: Optional[Mapping[str, int]] = None,
    kind: str = "group",
) -> FusionSystem:
    """Pointed fusion system of a finite group given by its multiplication table.

    ``table[i][j]`` is the index of the product of elements i and j.  The
    default generator is the sum of all non-identity elements.
    """
    _check_limit("group-order", len(table))
    e = _check_group(table)
    n = len(table)
    names = list(names) if names is not None else [f"g{i}" for i in range(n)]
    if len(set(names)) != n:
        raise ValueError("element names must be distinct")
    objs = tuple(FusionObject(names[x], "A", "A", names[_inverse(table, e, x)], x == e) for x in range(n))
    tab = {
        (names[x], names[y]): TensorEntry(((names[table[x][y]], 1),))
        for x, y in product(range(n), repeat=2)
        if x != e and y != e
    }
    if generator is None:
        generator = {names[x]: 1 for x in range(n) if x != e} or None
    meta = {"kind": kind, "order": n}
    gen = None if generator is None else tuple(generator.items())
    return FusionSystem(("A",), objs, tab, gen, COMPLETE, None, meta)


def cyclic_table(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def make_cyclic(n: int) -> FusionSystem:
    """Z/n with elements e, g1, ..., g(n-1), generated by g1 (no generator when n = 1)."""
    if n < 1:
        raise ValueError("order must be at least 1")
    _check_limit("zn", n)
    names = ["e"] + [f"g{i}" for i in range(1, n)]
    sys_ = make_group_fusion(cyclic_table(n), names, {names[1 % n]: 1} if n > 1 else None, kind="zn")
    sys_.metadata["n"] = n
    return sys_


def _cycle_name(perm: tuple[int, ...]) -> str:
    seen, parts = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = perm[x]
        parts.append("(" + "".join(cyc) + ")")
    return "".join(parts) or "e"


def symmetric_group(k: int = 3) -> tuple[list[list[int]], list[str]]:
    """Multiplication table of S_k; ``(p q)(x) = p(q(x))``, names in cycle notation."""
    perms = sorted(permutations(range(k)), key=lambda p: (sum(a != b for a, b in zip(p, range(k))), p))
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[tuple(p[q[x]] for x in range(k))] for q in perms] for p in perms]
    return table, [_cycle_name(p) for p in perms]


def make_s3() -> FusionSystem:
    table, names = symmetric_group(3)
    sys_ = make_group_fusion(table, names, {"(12)": 1, "(123)": 1}, kind="s3")
    return sys_


# ---------------------------------------------------------------------------
# free monoid on two letters


def _word_dual(w: str) -> str:
    return w[::-1].translate(str.maketrans("ab", "ba"))


def free_monoid_products(w1: str, w2: str) -> list[str]:
    """Words c = x y with w1 = x d and w2 = dual(d) y, over every split d."""
    out = []
    for k in range(min(len(w1), len(w2)) + 1):
        x, d = w1[: len(w1) - k], w1[len(w1) - k:]
        if w2[:k] == _word_dual(d):
            out.append(x + w2[k:])
    return out


def make_free_monoid_fusion(max_len: int) -> FusionSystem:
    """Words in letters a, b (for alpha, beta) of length <= max_len; b is the dual of a.

    The unit is the empty word, written "1".  Entries whose products
    exceed ``max_len`` are truncated.  The certified weight is #a - #b.
    """
    if max_len < 1:
        raise ValueError("max word length must be at least 1")
    _check_limit("free-monoid", max_len)
    words = [""]
    for n in range(1, max_len + 1):
        words += ["".join(t) for t in product("ab", repeat=n)]

    def wid(w):
        return w or "1"

    objs = tuple(FusionObject(wid(w), "A", "A", wid(_word_dual(w)), w == "") for w in words)
    table = {}
    for w1, w2 in product(words[1:], repeat=2):
        got = free_monoid_products(w1, w2)
        kept = tuple((wid(c), 1) for c in got if len(c) <= max_len)
        table[(wid(w1), wid(w2))] = TensorEntry(kept, len(kept) < len(got))
    return FusionSystem(
        algebras=("A",),
        objects=objs,
        tensor=table,
        generator=(("a", 1),),
        completeness=truncated(max_len),
        certified_weight={wid(w): w.count("a") - w.count("b") for w in words},
        metadata={"kind": "free-monoid", "max_len": max_len},
    )


# ---------------------------------------------------------------------------
# Temperley-Lieb path A_n


def _tl_id(j: int, left: str, right: str) -> str:
    return f"{left}{j}" if left == right else f"{left}{right}{j}"


def tl_fusion_rule(j1: int, j2: int, k: int) -> list[int]:
    """Truncated SU(2) rule at level k, labels are twice the spin."""
    return list(range(abs(j1 - j2), min(j1 + j2, 2 * k - j1 - j2) + 1, 2))


def make_tl_path(n: int) -> tuple[PrincipalGraphPair, FusionSystem, DimensionData]:
    """The A_n system: graph pair, complete two-algebra table and PF dimensions.

    Vertices are labelled j = 0..n-1; even j give A-A objects A{j} and B-B
    objects B{j}, odd j give AB{j} and BA{j}.  The generator is AB1.
    """
    if n < 2:
        raise ValueError("path length must be at least 2")
    _check_limit("tl-path", n)
    k = n - 1
    js = range(n)
    objs = []
    for left, right in (("A", "A"), ("A", "B"), ("B", "A"), ("B", "B")):
        parity = 0 if left == right else 1
        for j in js:
            if j % 2 == parity:
                objs.append(FusionObject(_tl_id(j, left, right), left, right, _tl_id(j, right, left), j == 0))
    objs.sort(key=lambda o: (["A", "B"].index(o.left), ["A", "B"].index(o.right), int(o.id.lstrip("AB"))))
    table = {}
    for x, y in product(objs, repeat=2):
        if x.right != y.left or x.is_unit or y.is_unit:
            continue
        jx, jy = int(x.id.lstrip("AB")), int(y.id.lstrip("AB"))
        cons = tuple((_tl_id(j, x.left, y.right), 1) for j in tl_fusion_rule(jx, jy, k))
        table[(x.id, y.id)] = TensorEntry(cons)
    system = FusionSystem(
        algebras=("A", "B"),
        objects=tuple(objs),
        tensor=table,
        generator=(("AB1", 1),),
        completeness=COMPLETE,
        metadata={"kind": "tl-path", "n": n},
    )
    even = [j for j in js if j % 2 == 0]
    odd = [j for j in js if j % 2 == 1]
    edges_p = {(f"A{j}", f"AB{i}"): 1 for j in even for i in odd if abs(i - j) == 1}
    edges_m = {(f"B{j}", f"AB{i}"): 1 for j in even for i in odd if abs(i - j) == 1}
    graphs = PrincipalGraphPair(
        even_plus=tuple(f"A{j}" for j in even),
        even_minus=tuple(f"B{j}" for j in even),
        odd=tuple(f"AB{i}" for i in odd),
        edges_plus=edges_p,
        edges_minus=edges_m,
        base="A0",
        base_minus="B0",
        duals={f"AB{i}": f"BA{i}" for i in odd},
    )
    return graphs, system, dims_from_graph(graphs)


# ---------------------------------------------------------------------------
# double cosets and glued groups


def _subgroup(table, e, sub: Sequence[int], name: str) -> frozenset:
    s = frozenset(sub)
    if e not in s:
        raise NotASubgroup(f"{name} does not contain the identity")
    for x, y in product(s, s):
        if table[x][y] not in s:
            raise NotASubgroup(f"{name} is not closed under products")
    for x in s:
        if _inverse(table, e, x) not in s:
            raise NotASubgroup(f"{name} is not closed under inverses")
    return s


def _group_bicategory(
    table: Sequence[Sequence[int]],
    names: Sequence[str],
    subgroups: Mapping[str, frozenset],
    metadata: Mapping[str, object],
) -> FusionSystem:
    """Double-coset system: sector (X, Y) holds the cosets S_X g S_Y."""
    n = len(table)
    e = _check_group(table)
    labels = tuple(subgroups)

    def setmul(xs, ys):
        return frozenset(table[x][y] for x in xs for y in ys)

    cosets: dict[tuple[str, str], list[frozenset]] = {}
    for x_lab, y_lab in product(labels, repeat=2):
        found: list[frozenset] = []
        for g in range(n):
            if any(g in c for c in found):
                continue
            found.append(setmul(setmul(subgroups[x_lab], [g]), subgroups[y_lab]))
        cosets[(x_lab, y_lab)] = found
    ident: dict[frozenset, str] = {}
    objs = []
    where = {}
    for (x_lab, y_lab), found in cosets.items():
        for c in found:
            rep = min(c)
            oid = f"{x_lab}{y_lab}[{names[rep]}]"
            where[oid] = (x_lab, y_lab, c)
            ident[(x_lab, y_lab, c)] = oid
    for oid, (x_lab, y_lab, c) in where.items():
        inv = frozenset(_inverse(table, e, g) for g in c)
        objs.append(FusionObject(oid, x_lab, y_lab, ident[(y_lab, x_lab, inv)], x_lab == y_lab and e in c))
    tab = {}
    for a, b in product(objs, repeat=2):
        if a.right != b.left or a.is_unit or b.is_unit:
            continue
        prod_set = setmul(where[a.id][2], where[b.id][2])
        cons = tuple(
            (ident[(a.left, b.right, c)], None)
            for c in cosets[(a.left, b.right)]
            if c <= prod_set
        )
        tab[(a.id, b.id)] = TensorEntry(cons)
    return FusionSystem(labels, tuple(objs), tab, None, COMPLETE, None, dict(metadata))


def make_double_coset(
    table: Sequence[Sequence[int]],
    names: Sequence[str],
    h: Sequence[int],
    k: Sequence[int],
    l: Optional[Sequence[int]] = None,
) -> Bicategory3:
    """Bicategory over subgroups H, K, L (default L = H) of a finite group.

    Containments are support-only; the generators are the identity
    double cosets H e K and K e L.
    """
    e = _check_group(table)
    subs = {
        "A": _subgroup(table, e, h, "H"),
        "B": _subgroup(table, e, k, "K"),
        "C": _subgroup(table, e, h if l is None else l, "L"),
    }
    meta = {
        "kind": "double-coset",
        "H": sorted(names[x] for x in subs["A"]),
        "K": sorted(names[x] for x in subs["B"]),
        "L": sorted(names[x] for x in subs["C"]),
    }
    system = _group_bicategory(table, names, subs, meta)
    en = names[e]
    return Bicategory3(system, ((f"AB[{en}]", None),), ((f"BC[{en}]", None),))


def s3_subgroup(name: str) -> list[int]:
    """Element indices of a named subgroup of S3: e, 12, 123 or S3."""
    table, names = symmetric_group(3)
    gens = {"e": [], "12": ["(12)"], "123": ["(123)"], "S3": list(names)}[name]
    e = names.index("e")
    sub = {e} | {names.index(g) for g in gens}
    while True:
        nxt = sub | {table[x][y] for x in sub for y in sub}
        if nxt == sub:
            return sorted(sub)
        sub = nxt


def make_s3_double_coset(h: str = "12", k: str = "123") -> Bicategory3:
    table, names = symmetric_group(3)
    b = make_double_coset(table, names, s3_subgroup(h), s3_subgroup(k))
    b.system.metadata["subgroups"] = [h, k]
    return b


def make_glued_cyclic(n1: int, n2: int) -> Bicategory3:
    """Z/n1 x Z/n2 on three algebras, glued along B.

    Sector generators are e + (1,0) from A to B and e + (0,1) from B to C.
    """
    if n1 < 1 or n2 < 1:
        raise ValueError("orders must be positive")
    _check_limit("group-order", n1 * n2)
    elems = [(i, j) for i in range(n1) for j in range(n2)]
    pos = {g: x for x, g in enumerate(elems)}
    table = [[pos[((a + c) % n1, (b + d) % n2)] for (c, d) in elems] for (a, b) in elems]
    names = [f"{i},{j}" for i, j in elems]
    trivial = frozenset([0])
    meta = {"kind": "glued-cyclic", "n1": n1, "n2": n2}
    system = _group_bicategory(table, names, {"A": trivial, "B": trivial, "C": trivial}, meta)
    e = names[0]
    gen_ab = {f"AB[{e}]": 1, f"AB[{names[pos[(1 % n1, 0)]]}]": 1}
    gen_bc = {f"BC[{e}]": 1, f"BC[{names[pos[(0, 1 % n2)]]}]": 1}
    return Bicategory3(system, gen_ab, gen_bc)


def make_glued_integer(range_: int) -> Bicategory3:
    """Truncated Z on three algebras; A to B generated by e + a, B to C by e + a."""
    if range_ < 1:
        raise ValueError("range must be at least 1")
    _check_limit("integer", range_)
    labels = ("A", "B", "C")
    ns = [0] + [s * k for k in range(1, range_ + 1) for s in (1, -1)]

    def oid(x, y, n):
        return f"{x}{y}[{_power(n)}]"

    exps = {oid(x, y, n): n for x, y in product(labels, repeat=2) for n in ns}
    objs = tuple(
        FusionObject(oid(x, y, n), x, y, oid(y, x, -n), x == y and n == 0)
        for x, y in product(labels, repeat=2)
        for n in ns
    )
    table = {}
    for a, b in product(objs, repeat=2):
        if a.right != b.left or a.is_unit or b.is_unit:
            continue
        total = exps[a.id] + exps[b.id]
        if abs(total) <= range_:
            table[(a.id, b.id)] = TensorEntry(((oid(a.left, b.right, total), 1),))
        else:
            table[(a.id, b.id)] = TensorEntry((), truncated=True)

    system = FusionSystem(
        labels,
        objs,
        table,
        None,
        truncated(range_),
        exps,
        {"kind": "glued-integer", "range": range_},
    )
    gen_ab = {oid("A", "B", 0): 1, oid("A", "B", 1): 1}
    gen_bc = {oid("B", "C", 0): 1, oid("B", "C", 1): 1}
    return Bicategory3(system, gen_ab, gen_bc)


# ---------------------------------------------------------------------------
# descriptor dispatch


@dataclass(frozen=True)
class ExampleDescriptor:
    kind: str
    params: Mapping[str, object] = field(default_factory=dict)


KINDS = (
    "integer",
    "zn",
    "s3",
    "free-monoid",
    "tl-path",
    "double-coset",
    "glued-cyclic",
    "glued-integer",
)


def make_example(desc: ExampleDescriptor):
    """FusionSystem, or Bicategory3 for the three-algebra kinds."""
    p = dict(desc.params)
    if desc.kind == "integer":
        return make_integer_fusion(int(p.get("range", 3)))
    if desc.kind == "zn":
        return make_cyclic(int(p.get("n", 2)))
    if desc.kind == "s3":
        return make_s3()
    if desc.kind == "free-monoid":
        return make_free_monoid_fusion(int(p.get("max_len", 2)))
    if desc.kind == "tl-path":
        return make_tl_path(int(p.get("n", 3)))[1]
    if desc.kind == "double-coset":
        return make_s3_double_coset(str(p.get("h", "12")), str(p.get("k", "123")))
    if desc.kind == "glued-cyclic":
        return make_glued_cyclic(int(p.get("n1", 2)), int(p.get("n2", 3)))
    if desc.kind == "glued-integer":
        return make_glued_integer(int(p.get("range", 3)))
    raise ValueError(f"unknown example kind {desc.kind!r}; choose from {', '.join(KINDS)}")
