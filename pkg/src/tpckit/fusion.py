"""Fusion systems, principal graphs and Perron-Frobenius dimensions.

A :class:`FusionSystem` is the combinatorial skeleton of a semisimple
bicategory: simple objects carrying a (left, right) algebra label, an
involutive dual, one unit per algebra, and a table of tensor containments.
Objects are depth-independent isomorphism classes, so an id is reused
wherever its class recurs.

Multiplicities are positive integers or ``None`` (support-only, serialized
as ``"?"``).  Generators are formal direct sums of simple objects, written
as ``((id, mult), ...)``; a simple generator is the one-term sum.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from . import kernels
from .errors import DepthZero, GraphError, IncomposableWord, NoConvergence

Mult = Optional[int]
Sum = dict  # object id -> Mult, a formal direct sum of simple objects

MAX_OBJECTS = 10_000


def add_mult(x: Mult, y: Mult) -> Mult:
    if x is None or y is None:
        return None
    return x + y


def mul_mult(x: Mult, y: Mult) -> Mult:
    if x is None or y is None:
        return None
    return x * y


@dataclass(frozen=True)
class FusionObject:
    id: str
    left: str
    right: str
    dual: str
    is_unit: bool = False


@dataclass(frozen=True)
class TensorEntry:
    """Constituents of ``a (x) b``; ``truncated`` means some lie outside the object set."""

    constituents: tuple[tuple[str, Mult], ...]
    truncated: bool = False


@dataclass(frozen=True)
class Completeness:
    depth: Optional[int] = None  # None: the table is complete

    @property
    def complete(self) -> bool:
        return self.depth is None

    def __str__(self) -> str:
        return "complete" if self.depth is None else f"truncated({self.depth})"


COMPLETE = Completeness()


def truncated(depth: int) -> Completeness:
    return Completeness(depth)


@dataclass(frozen=True, eq=True)
class FusionSystem:
    algebras: tuple[str, ...]
    objects: tuple[FusionObject, ...]
    tensor: Mapping[tuple[str, str], TensorEntry]
    generator: Optional[tuple[tuple[str, Mult], ...]] = None
    completeness: Completeness = COMPLETE
    # log-weight (integer exponents) known to satisfy every containment of
    # the untruncated system; lets truncations certify non-triviality
    certified_weight: Optional[Mapping[str, int]] = None
    metadata: Mapping[str, object] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        set_ = object.__setattr__
        set_(self, "algebras", tuple(self.algebras))
        set_(self, "objects", tuple(self.objects))
        index = {o.id: i for i, o in enumerate(self.objects)}
        big = len(index)

        def key(c):
            return (index.get(c, big), c)

        table = {}
        for (a, b) in sorted(self.tensor, key=lambda ab: (key(ab[0]), key(ab[1]))):
            e = self.tensor[(a, b)]
            table[(a, b)] = TensorEntry(
                tuple(sorted(((c, m) for c, m in e.constituents), key=lambda cm: key(cm[0]))),
                bool(e.truncated),
            )
        set_(self, "tensor", table)
        if self.generator is not None:
            gen = self.generator
            if isinstance(gen, str):
                gen = ((gen, 1),)
            elif isinstance(gen, Mapping):
                gen = tuple(gen.items())
            set_(self, "generator", tuple(sorted(((c, m) for c, m in gen), key=lambda cm: key(cm[0]))))
        if self.certified_weight is not None:
            set_(self, "certified_weight", {k: int(v) for k, v in self.certified_weight.items()})

    # lookups -------------------------------------------------------------
    @cached_property
    def by_id(self) -> dict[str, FusionObject]:
        return {o.id: o for o in self.objects}

    @cached_property
    def index(self) -> dict[str, int]:
        return {o.id: i for i, o in enumerate(self.objects)}

    @cached_property
    def units(self) -> dict[str, str]:
        return {o.left: o.id for o in self.objects if o.is_unit}

    def dual(self, v: str) -> str:
        return self.by_id[v].dual

    def sector(self, v: str) -> tuple[str, str]:
        o = self.by_id[v]
        return (o.left, o.right)

    def is_unit(self, v: str) -> bool:
        return self.by_id[v].is_unit

    def composable(self, a: str, b: str) -> bool:
        return self.by_id[a].right == self.by_id[b].left

    def in_sector(self, left: str, right: str) -> list[str]:
        return [o.id for o in self.objects if o.left == left and o.right == right]

    @property
    def is_truncated(self) -> bool:
        return not self.completeness.complete

    # generator -----------------------------------------------------------
    def generator_sum(self) -> Sum:
        if self.generator is None:
            raise ValueError("system has no generator")
        return dict(self.generator)

    def generator_sector(self) -> tuple[str, str]:
        return self.sector(self.generator[0][0])

    def dual_sum(self, x: Mapping[str, Mult]) -> Sum:
        return {self.dual(c): m for c, m in x.items()}

    def unknown_entries(self, ids: Optional[Iterable[str]] = None) -> list[tuple[str, str]]:
        """Composable non-unit pairs whose products are not fully known: truncated or absent.

        Products with a unit are implied by unit absorption and never unknown.
        """
        pool = [v for v in (self.by_id if ids is None else ids) if not self.is_unit(v)]
        by_left: dict[str, list[str]] = {}
        for v in pool:
            by_left.setdefault(self.by_id[v].left, []).append(v)
        out = []
        for a in pool:
            for b in by_left.get(self.by_id[a].right, ()):
                e = self.tensor.get((a, b))
                if e is None or e.truncated:
                    out.append((a, b))
        return out


# ---------------------------------------------------------------------------
# tensoring formal sums and words


def fuse(system: FusionSystem, x: Mapping[str, Mult], y: Mapping[str, Mult]) -> tuple[Sum, bool]:
    """Tensor product of two formal sums; the flag is False if any needed entry is unknown."""
    out: Sum = {}
    known = True
    for a, ma in x.items():
        for b, mb in y.items():
            e = system.tensor.get((a, b))
            if e is None:
                if system.is_unit(a) or system.is_unit(b):
                    c = b if system.is_unit(a) else a
                    out[c] = add_mult(out.get(c, 0), mul_mult(ma, mb))
                    continue
                known = False
                continue
            if e.truncated:
                known = False
            for c, mc in e.constituents:
                out[c] = add_mult(out.get(c, 0), mul_mult(mul_mult(ma, mb), mc))
    return out, known


def check_word(system: FusionSystem, word: Sequence[str]) -> None:
    if not word:
        raise IncomposableWord("empty word")
    for v in word:
        if v not in system.by_id:
            raise IncomposableWord(f"unknown object {v!r}")
    for a, b in zip(word, word[1:]):
        if not system.composable(a, b):
            raise IncomposableWord(
                f"cannot tensor {a!r} (right label {system.by_id[a].right}) "
                f"with {b!r} (left label {system.by_id[b].left})"
            )


def expand_word(system: FusionSystem, word: Sequence[str]) -> tuple[Sum, bool]:
    """Constituents (with multiplicity) of the tensor product of a composable word."""
    check_word(system, word)
    acc: Sum = {word[0]: 1}
    known = True
    for v in word[1:]:
        acc, ok = fuse(system, acc, {v: 1})
        known = known and ok
    return acc, known


def expand_sum_word(system: FusionSystem, factors: Sequence[Mapping[str, Mult]]) -> tuple[Sum, bool]:
    acc: Sum = dict(factors[0])
    known = True
    for f in factors[1:]:
        acc, ok = fuse(system, acc, f)
        known = known and ok
    return acc, known


class HomAnswer(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown-truncated"


def hom_nonzero(system: FusionSystem, word1: Sequence[str], word2: Sequence[str]) -> HomAnswer:
    """Whether the tensor words share an irreducible constituent."""
    check_word(system, word1)
    check_word(system, word2)
    s1 = (system.by_id[word1[0]].left, system.by_id[word1[-1]].right)
    s2 = (system.by_id[word2[0]].left, system.by_id[word2[-1]].right)
    if s1 != s2:
        raise IncomposableWord(f"words live in different sectors {s1} and {s2}")
    c1, k1 = expand_word(system, word1)
    c2, k2 = expand_word(system, word2)
    if set(c1) & set(c2):
        return HomAnswer.YES
    if k1 and k2:
        return HomAnswer.NO
    return HomAnswer.UNKNOWN


# ---------------------------------------------------------------------------
# validation


def _reachable(system: FusionSystem) -> set[str]:
    steps = list(system.generator_sum()) + list(system.dual_sum(system.generator_sum()))
    seen = set(system.units.values())
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for s in steps:
            for x, y in ((v, s), (s, v)):
                if not system.composable(x, y):
                    continue
                got, _ = fuse(system, {x: 1}, {y: 1})
                for c in got:
                    if c in system.by_id and c not in seen:
                        seen.add(c)
                        queue.append(c)
    return seen


def _check_associativity(system: FusionSystem) -> list[str]:
    """Associativity on every triple whose products are all known.

    Multiplicities are compared when every entry involved has them;
    otherwise only supports are, which is still exact since
    multiplicities are positive.
    """
    out = []
    n = {}
    for (a, b), e in system.tensor.items():
        if not e.truncated:
            n[(a, b)] = dict(e.constituents)

    def get(x, y):
        if (x, y) in n:
            return n[(x, y)]
        if system.is_unit(x) and system.composable(x, y):
            return {y: 1}
        if system.is_unit(y) and system.composable(x, y):
            return {x: 1}
        return None

    def expand(outer, inner_of):
        total: dict = {}
        for e, m in outer.items():
            inner = inner_of(e)
            if inner is None:
                return None
            for d, k in inner.items():
                total[d] = None if m is None or k is None or total.get(d, 0) is None else total.get(d, 0) + m * k
        return total

    right_of: dict[str, list[str]] = {}
    for (x, y) in n:
        right_of.setdefault(x, []).append(y)
    for (a, b), ab in n.items():
        for c in right_of.get(b, ()):
            left = expand(ab, lambda e: get(e, c))
            right = expand(n[(b, c)], lambda f: get(a, f))
            if left is None or right is None:
                continue
            if None in left.values() or None in right.values():
                bad = set(left) != set(right)
            else:
                bad = left != right
            if bad:
                out.append(f"associativity fails on ({a}, {b}, {c})")
    return out


def validate(system: FusionSystem) -> list[str]:
    """All invariant violations of ``system``; an empty list means valid."""
    v: list[str] = []
    if len(set(system.algebras)) != len(system.algebras):
        v.append("algebra labels must be distinct")
    labels = set(system.algebras)
    ids = [o.id for o in system.objects]
    if len(set(ids)) != len(ids):
        v.append("object ids must be distinct")
    if len(ids) > MAX_OBJECTS:
        v.append(f"object count {len(ids)} exceeds the limit {MAX_OBJECTS}")
    by_id = system.by_id
    for o in system.objects:
        if o.left not in labels or o.right not in labels:
            v.append(f"object {o.id} uses an undeclared algebra label")
        if o.dual not in by_id:
            v.append(f"object {o.id} has dangling dual {o.dual!r}")
            continue
        d = by_id[o.dual]
        if d.dual != o.id:
            v.append(f"dual is not an involution at {o.id}")
        if d.left != o.right or d.right != o.left:
            v.append(f"dual must swap algebra labels ({o.id} -> {o.dual})")
        if o.is_unit:
            if o.left != o.right:
                v.append(f"unit {o.id} must have left = right")
            if o.dual != o.id:
                v.append(f"unit {o.id} must be self-dual")
    for lab in system.algebras:
        n_units = sum(1 for o in system.objects if o.is_unit and o.left == lab)
        if n_units != 1:
            v.append(f"algebra {lab} has {n_units} unit objects, expected exactly one")
    if v:
        return v  # the remaining checks need a sane object set

    for (a, b), e in system.tensor.items():
        if a not in by_id or b not in by_id:
            v.append(f"tensor entry ({a}, {b}) references an unknown object")
            continue
        if not system.composable(a, b):
            v.append(f"tensor entry ({a}, {b}) is not composable")
            continue
        for c, m in e.constituents:
            if c not in by_id:
                v.append(f"tensor entry ({a}, {b}) lists unknown constituent {c!r}")
                continue
            if system.sector(c) != (by_id[a].left, by_id[b].right):
                v.append(f"constituent {c} of ({a}, {b}) is in the wrong sector")
            if m is not None and (not isinstance(m, int) or m < 1):
                v.append(f"multiplicity of {c} in ({a}, {b}) must be a positive integer")
        consts = dict(e.constituents)
        if by_id[a].is_unit and not e.truncated and (set(consts) != {b} or consts[b] not in (1, None)):
            v.append(f"unit absorption fails: {a} (x) {b} must be exactly {b}")
        if by_id[b].is_unit and not e.truncated and (set(consts) != {a} or consts[a] not in (1, None)):
            v.append(f"unit absorption fails: {a} (x) {b} must be exactly {a}")
        if b == by_id[a].dual and system.units[by_id[a].left] not in consts:
            v.append(f"duality witness missing: {a} (x) {b} must contain the unit")
    if system.completeness.complete:
        missing = [ab for ab in system.unknown_entries() if ab not in system.tensor]
        for a, b in missing:
            v.append(f"complete system lacks tensor entry ({a}, {b})")
        for (a, b), e in system.tensor.items():
            if e.truncated:
                v.append(f"complete system has truncated entry ({a}, {b})")
    elif system.completeness.depth < 0:
        v.append("truncation depth must be non-negative")
    if system.generator is not None:
        gen = system.generator
        if any(c not in by_id for c, _ in gen):
            v.append("generator references an unknown object")
            return v
        if all(by_id[c].is_unit for c, _ in gen):
            v.append("generator must not be a unit")
        if len({system.sector(c) for c, _ in gen}) != 1:
            v.append("generator constituents must share one sector")
        if any(m is not None and m < 1 for _, m in gen):
            v.append("generator multiplicities must be positive")
        unreached = [i for i in ids if i not in _reachable(system)]
        if unreached:
            v.append("objects not reachable from the units via the generator: " + ", ".join(unreached))
    if system.certified_weight is not None:
        cw = system.certified_weight
        for c in cw:
            if c not in by_id:
                v.append(f"certified weight names unknown object {c!r}")
        for o in system.objects:
            if cw.get(o.id, 0) + cw.get(o.dual, 0) != 0:
                v.append(f"certified weight is not dual-antisymmetric at {o.id}")
                break
        for (a, b), e in system.tensor.items():
            for c, _ in e.constituents:
                if cw.get(a, 0) + cw.get(b, 0) != cw.get(c, 0):
                    v.append(f"certified weight violates containment {c} <= {a} (x) {b}")
                    break
    v.extend(_check_associativity(system))
    return v


# ---------------------------------------------------------------------------
# principal graphs


@dataclass(frozen=True)
class PrincipalGraphPair:
    """Principal graph (even_plus -- odd) and dual principal graph (even_minus -- odd).

    Odd vertices are the A-B classes for both graphs; ``edges_minus[(v, u)]``
    is the multiplicity of the dual of ``u`` in ``v (x) dual(generator)``.
    ``duals`` optionally names duals: even vertices default to self-dual, odd
    ones to ``u + "*"``.
    """

    even_plus: tuple[str, ...]
    even_minus: tuple[str, ...]
    odd: tuple[str, ...]
    edges_plus: Mapping[tuple[str, str], int]
    edges_minus: Mapping[tuple[str, str], int]
    base: str
    base_minus: Optional[str] = None
    duals: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "even_plus", tuple(self.even_plus))
        object.__setattr__(self, "even_minus", tuple(self.even_minus))
        object.__setattr__(self, "odd", tuple(self.odd))
        if self.base_minus is None and self.even_minus:
            object.__setattr__(self, "base_minus", self.even_minus[0])

    def dual_of(self, v: str) -> str:
        if v in self.duals:
            return self.duals[v]
        return v + "*" if v in self.odd else v

    def side(self, side: str) -> tuple[list[str], dict[tuple[str, str], int], str]:
        if side == "plus":
            return list(self.even_plus) + list(self.odd), dict(self.edges_plus), self.base
        if side == "minus":
            return list(self.even_minus) + list(self.odd), dict(self.edges_minus), self.base_minus
        raise ValueError(f"side must be 'plus' or 'minus', not {side!r}")

    def distances(self, side: str) -> dict[str, int]:
        verts, edges, base = self.side(side)
        adj: dict[str, set] = {x: set() for x in verts}
        for (v, u), m in edges.items():
            if m:
                adj[v].add(u)
                adj[u].add(v)
        dist = {base: 0}
        queue = deque([base])
        while queue:
            x = queue.popleft()
            for y in sorted(adj[x]):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist


@dataclass(frozen=True)
class DimensionVector:
    values: Mapping[str, float]
    norm: float

    @property
    def index(self) -> float:
        return self.norm**2


def generate_from_graph(graphs: PrincipalGraphPair, depth: int) -> FusionSystem:
    """Truncated fusion system holding the generator entries read off the edges.

    Objects are the vertices within ``depth`` of the bases plus duals of the
    odd ones.  The generator is ``m * u`` for the single odd neighbour ``u``
    of the base joined by ``m`` edges; every entry ``(x, u)`` or
    ``(x, dual u)`` carries edge multiplicity divided by ``m``.
    """
    if depth < 1:
        raise DepthZero("depth must be at least 1")
    if graphs.base not in graphs.even_plus or graphs.base_minus not in graphs.even_minus:
        raise GraphError("base vertices must be even vertices of their graphs")
    dplus = graphs.distances("plus")
    dminus = graphs.distances("minus")
    for side, verts, dist in (("plus", graphs.even_plus, dplus), ("minus", graphs.even_minus, dminus)):
        missing = [x for x in list(verts) + list(graphs.odd) if x not in dist]
        if missing:
            raise GraphError(f"{side} graph is disconnected at {', '.join(missing)}")
    nbrs = {u: m for (v, u), m in graphs.edges_plus.items() if v == graphs.base and m}
    if len(nbrs) != 1:
        raise GraphError("the base must have exactly one odd neighbour to read off a generator")
    (gen, gmult), = nbrs.items()

    def within(x, dist):
        return dist[x] <= depth

    odd = [u for u in graphs.odd if min(dplus[u], dminus[u]) <= depth]
    ev_p = [v for v in graphs.even_plus if within(v, dplus)]
    ev_m = [v for v in graphs.even_minus if within(v, dminus)]
    dual = graphs.dual_of
    objs = [FusionObject(v, "A", "A", dual(v), v == graphs.base) for v in ev_p]
    objs += [FusionObject(u, "A", "B", dual(u)) for u in odd]
    objs += [FusionObject(dual(u), "B", "A", u) for u in odd]
    objs += [FusionObject(v, "B", "B", dual(v), v == graphs.base_minus) for v in ev_m]
    ids = [o.id for o in objs]
    if len(set(ids)) != len(ids):
        raise GraphError("vertex names collide after adding odd duals")
    present = set(ids)

    def mult(m, where):
        if m % gmult:
            raise GraphError(f"edge multiplicity {m} at {where} is not divisible by {gmult}")
        return m // gmult

    table: dict[tuple[str, str], TensorEntry] = {}

    def put(a, b, cons):
        kept = tuple((c, m) for c, m in cons if c in present)
        table[(a, b)] = TensorEntry(kept, len(kept) < len(cons))

    # (A,A) (x) gen and (A,B) (x) dual gen
    for v in ev_p:
        put(v, gen, [(u, mult(m, (v, u))) for (x, u), m in sorted(graphs.edges_plus.items()) if x == v and m])
    for u in odd:
        put(u, dual(gen), [(v, mult(m, (v, u))) for (v, x), m in sorted(graphs.edges_plus.items()) if x == u and m])
    # (B,B) (x) dual gen and (B,A) (x) gen
    for v in ev_m:
        put(v, dual(gen), [(dual(u), mult(m, (v, u))) for (x, u), m in sorted(graphs.edges_minus.items()) if x == v and m])
    for u in odd:
        put(dual(u), gen, [(v, mult(m, (v, u))) for (v, x), m in sorted(graphs.edges_minus.items()) if x == u and m])
    return FusionSystem(
        algebras=("A", "B"),
        objects=tuple(objs),
        tensor=table,
        generator=((gen, gmult),),
        completeness=truncated(depth),
    )


def principal_graphs(system: FusionSystem, depth: int) -> PrincipalGraphPair:
    """Principal graph pair of the system's generator, explored ``depth`` layers deep.

    Inverse of :func:`generate_from_graph` on the vertices it reaches.
    """
    gen = system.generator_sum()
    left, right = system.generator_sector()
    if left == right:
        raise GraphError("principal graphs need a generator between two distinct algebras")
    if any(m is None for m in gen.values()):
        raise GraphError("support-only generator multiplicities do not determine edges")
    dgen = system.dual_sum(gen)

    def layers(start, first, second):
        out = [[start]]
        for j in range(depth):
            step = first if j % 2 == 0 else second
            nxt, _ = fuse(system, {x: 1 for x in out[-1]}, step)
            out.append(sorted(nxt, key=system.index.__getitem__))
        return out

    plus = layers(system.units[left], gen, dgen)
    minus = layers(system.units[right], dgen, gen)

    def collect(ls, parity):
        seen: list[str] = []
        for j, layer in enumerate(ls):
            if j % 2 == parity:
                seen.extend(x for x in layer if x not in seen)
        return seen

    even_plus = collect(plus, 0)
    odd = collect(plus, 1)
    for x in collect(minus, 1):
        if system.dual(x) not in odd:
            odd.append(system.dual(x))
    even_minus = collect(minus, 0)

    def edges(evens, step, flip):
        out = {}
        for v in evens:
            prod_, _ = fuse(system, {v: 1}, step)
            for c, m in prod_.items():
                u = system.dual(c) if flip else c
                if m is None:
                    raise GraphError("support-only multiplicities do not determine edges")
                if u in odd:
                    out[(v, u)] = m
        return out

    duals = {x: system.dual(x) for x in even_plus + even_minus + odd}
    return PrincipalGraphPair(
        even_plus=tuple(even_plus),
        even_minus=tuple(even_minus),
        odd=tuple(odd),
        edges_plus=edges(even_plus, gen, False),
        edges_minus=edges(even_minus, dgen, True),
        base=system.units[left],
        base_minus=system.units[right],
        duals=duals,
    )


def pf_dimensions(
    graphs: PrincipalGraphPair,
    side: str = "plus",
    tolerance: float = 1e-12,
    max_iter: int = 1_000_000,
) -> DimensionVector:
    """Perron-Frobenius eigenvector (normalized to 1 at the base) and graph norm."""
    verts, edges, base = graphs.side(side)
    dist = graphs.distances(side)
    if len(dist) != len(verts):
        raise NoConvergence(f"{side} graph is disconnected; no positive eigenvector")
    pos = {x: i for i, x in enumerate(verts)}
    n = len(verts)
    adj = [dict() for _ in range(n)]
    for (v, u), m in edges.items():
        if not m:
            continue
        i, j = pos[v], pos[u]
        adj[i][j] = adj[i].get(j, 0) + m
        adj[j][i] = adj[j].get(i, 0) + m
    indptr, indices, weights = [0], [], []
    for row in adj:
        for j in sorted(row):
            indices.append(j)
            weights.append(float(row[j]))
        indptr.append(len(indices))
    delta, vec, _ = kernels.power_iterate(
        np.asarray(indptr, dtype=np.int64),
        np.asarray(indices, dtype=np.int64),
        np.asarray(weights, dtype=float),
        n,
        tolerance,
        max_iter,
    )
    delta, vec = _polish(indptr, indices, weights, n, float(delta), np.asarray(vec, dtype=float))
    vec = vec / vec[pos[base]]
    return DimensionVector({x: float(vec[pos[x]]) for x in verts}, float(delta))


def _polish(indptr, indices, weights, n: int, delta: float, vec: np.ndarray) -> tuple[float, np.ndarray]:
    """Inverse iteration at the Rayleigh quotient, so the result no longer
    depends on where the power iteration stopped."""
    a = np.zeros((n, n))
    for i in range(n):
        for k in range(indptr[i], indptr[i + 1]):
            a[i, indices[k]] += weights[k]
    x = vec / np.linalg.norm(vec)
    lam = float(x @ a @ x)
    for _ in range(2):
        try:
            y = np.linalg.solve(a - lam * np.eye(n), x)
        except np.linalg.LinAlgError:
            break
        if not np.all(np.isfinite(y)):
            break
        y = np.abs(y)
        x = y / np.linalg.norm(y)
        lam = float(x @ a @ x)
    if abs(lam - delta) > 1e-6 * max(1.0, delta):
        return delta, vec
    return lam, x
