"""Weight functions: exact solution of the tensor homomorphism constraints.

A weight function assigns ``w(v) > 0`` to every simple object with
``w(c) = w(a) w(b)`` whenever ``a (x) b`` contains ``c``.  In log
coordinates ``x = log w`` every containment is the integer row
``x_a + x_b - x_c = 0`` with units pinned to 0, so the weight functions are
exactly the exponentials of the real points of an integer kernel.  Kernels
are computed over the rationals; no verdict in this module depends on a
floating-point tolerance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

import numpy as np

from . import exact
from .errors import (
    AmbiguousTruncation,
    CapacityError,
    InconsistentWeight,
    InvariantViolation,
    MissingWeight,
    NoExtension,
    TruncationExhausted,
)
from .fusion import FusionSystem, expand_sum_word, fuse

MAX_ROWS = 200_000


@dataclass(frozen=True)
class Scope:
    """Which objects take part: everything, or the L-L objects of one algebra."""

    even: Optional[str] = None

    def __str__(self) -> str:
        return "full" if self.even is None else f"even({self.even})"


FULL = Scope()


def even_only(algebra: str) -> Scope:
    return Scope(algebra)


def scope_objects(system: FusionSystem, scope: Scope = FULL) -> list[str]:
    if scope.even is None:
        return [o.id for o in system.objects]
    return [o.id for o in system.objects if o.left == scope.even and o.right == scope.even]


@dataclass(frozen=True)
class LogConstraintSystem:
    scope: Scope
    variables: tuple[str, ...]  # non-unit objects in scope; units are pinned to 0
    rows: tuple[dict[str, int], ...]  # distinct nonzero rows
    sources: tuple[tuple[tuple[str, str, str], ...], ...]  # containments (a, b, c) behind each row
    skipped: tuple[tuple[str, str], ...]  # products within scope that are not fully known


def assemble_constraints(system: FusionSystem, scope: Scope = FULL) -> LogConstraintSystem:
    objs = scope_objects(system, scope)
    inside = set(objs)
    variables = tuple(v for v in objs if not system.is_unit(v))
    rows: dict[tuple, int] = {}
    sources: list[list] = []
    row_list: list[dict[str, int]] = []
    for (a, b), entry in system.tensor.items():
        if a not in inside or b not in inside:
            continue
        for c, _ in entry.constituents:
            if c not in inside:
                continue
            row: dict[str, int] = {}
            for v, coef in ((a, 1), (b, 1), (c, -1)):
                if not system.is_unit(v):
                    row[v] = row.get(v, 0) + coef
            row = {v: k for v, k in row.items() if k}
            if not row:
                continue
            key = tuple(sorted(row.items()))
            if key in rows:
                sources[rows[key]].append((a, b, c))
                continue
            rows[key] = len(row_list)
            row_list.append(row)
            sources.append([(a, b, c)])
            if len(row_list) > MAX_ROWS:
                raise CapacityError(f"more than {MAX_ROWS} constraint rows")
    skipped = tuple(system.unknown_entries(objs))
    return LogConstraintSystem(
        scope=scope,
        variables=variables,
        rows=tuple(row_list),
        sources=tuple(tuple(s) for s in sources),
        skipped=skipped,
    )


@dataclass(frozen=True)
class WeightSpaceBasis:
    """Exact integer basis of the log-solution space.

    ``basis[i][j]`` is the exponent of the i-th free parameter at
    ``objects[j]``; units appear with exponent 0.
    """

    scope: Scope
    objects: tuple[str, ...]
    basis: tuple[tuple[int, ...], ...]
    skipped: tuple[tuple[str, str], ...] = ()

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def vector(self, i: int) -> dict[str, int]:
        return dict(zip(self.objects, self.basis[i]))

    def exponents(self, v: str) -> tuple[int, ...]:
        j = self.objects.index(v)
        return tuple(b[j] for b in self.basis)


def solve_weight_space(system: FusionSystem, scope: Scope = FULL) -> WeightSpaceBasis:
    cons = assemble_constraints(system, scope)
    col = {v: j for j, v in enumerate(cons.variables)}
    rows = [{col[v]: k for v, k in r.items()} for r in cons.rows]
    kernel = exact.nullspace(rows, len(cons.variables))
    objs = tuple(scope_objects(system, scope))
    basis = tuple(
        tuple(0 if v not in col else vec[col[v]] for v in objs) for vec in kernel
    )
    return WeightSpaceBasis(scope=scope, objects=objs, basis=basis, skipped=cons.skipped)


# ---------------------------------------------------------------------------
# weight functions

Exponents = tuple  # tuple[Fraction, ...], one entry per parameter


@dataclass(frozen=True)
class WeightFunction:
    """Positive weights per object, optionally with exact log data.

    With ``exact_log`` present, ``values[v] == prod(parameters[i] ** exact_log[v][i])``
    and all identities are checked on the rational exponents.
    """

    values: Mapping[str, float]
    exact_log: Optional[Mapping[str, Exponents]] = None
    parameters: tuple[float, ...] = ()

    def __getitem__(self, v: str) -> float:
        return self.values[v]

    def __contains__(self, v: str) -> bool:
        return v in self.values

    @classmethod
    def trivial(cls, ids) -> "WeightFunction":
        ids = list(ids)
        return cls({v: 1.0 for v in ids}, {v: () for v in ids}, ())

    @classmethod
    def from_exponents(cls, exps: Mapping[str, Sequence], parameters: Sequence[float]) -> "WeightFunction":
        params = tuple(float(p) for p in parameters)
        if any(p <= 0 for p in params):
            raise ValueError("weight parameters must be positive")
        logs = [math.log(p) for p in params]
        ex = {v: tuple(Fraction(x) for x in e) for v, e in exps.items()}
        values = {v: math.exp(sum(float(x) * lg for x, lg in zip(e, logs))) for v, e in ex.items()}
        return cls(values, ex, params)

    @classmethod
    def from_basis(cls, space: WeightSpaceBasis, parameters: Sequence[float]) -> "WeightFunction":
        if len(parameters) != space.dimension:
            raise ValueError(f"need {space.dimension} parameters, got {len(parameters)}")
        exps = {v: tuple(b[j] for b in space.basis) for j, v in enumerate(space.objects)}
        return cls.from_exponents(exps, parameters)


def check_weight_function(
    system: FusionSystem, w: WeightFunction, scope: Scope = FULL, tolerance: float = 1e-9
) -> list[str]:
    """Violations of unit, duality and containment identities (exact when possible)."""
    objs = scope_objects(system, scope)
    missing = [v for v in objs if v not in w.values]
    if missing:
        return [f"weight undefined at {', '.join(missing)}"]
    out = []
    ex = w.exact_log
    if ex is not None:
        nparam = len(w.parameters)

        def lg(v):
            e = ex[v]
            return tuple(e) + (Fraction(0),) * (nparam - len(e))

        def same(x, y):
            return x == y

        def plus(x, y):
            return tuple(p + q for p, q in zip(x, y))

        one = tuple(Fraction(0) for _ in range(nparam))
    else:
        def lg(v):
            return math.log(w.values[v])

        def same(x, y):
            return abs(x - y) <= tolerance * max(1.0, abs(x), abs(y))

        def plus(x, y):
            return x + y

        one = 0.0
    inside = set(objs)
    for v in objs:
        if w.values[v] <= 0:
            out.append(f"weight at {v} is not positive")
        if system.is_unit(v) and not same(lg(v), one):
            out.append(f"weight at unit {v} is not 1")
        d = system.dual(v)
        if d in inside and not same(plus(lg(v), lg(d)), one):
            out.append(f"w({v}) * w({d}) != 1")
    for (a, b), e in system.tensor.items():
        if a not in inside or b not in inside:
            continue
        for c, _ in e.constituents:
            if c in inside and not same(lg(c), plus(lg(a), lg(b))):
                out.append(f"w({c}) != w({a}) w({b})")
    return out


# ---------------------------------------------------------------------------
# trivial perturbation class


@dataclass(frozen=True)
class TpcVerdict:
    tpc: bool
    dimensions: Mapping[str, int]  # even-scope weight-space dimension per algebra
    witness: Optional[Mapping[str, int]] = None  # nontrivial even log-weight when not TPC
    witness_algebra: Optional[str] = None
    depth_conditional: bool = False  # decided on a truncation
    definitive: bool = True  # provably the verdict of the untruncated system
    skipped: tuple = ()
    notes: tuple[str, ...] = field(default=())


def even_algebras(system: FusionSystem) -> list[str]:
    if system.generator is not None:
        left, right = system.generator_sector()
        labs = [left] if left == right else [left, right]
    else:
        labs = list(system.algebras)
    return [lab for lab in labs if lab in system.units]


def even_generator(system: FusionSystem, algebra: str) -> Optional[dict]:
    """Constituents generating the L-L part: the generator itself or ``g (x) dual g``.

    None when there is no generator or the product is not fully known.
    """
    if system.generator is None:
        return None
    gen = system.generator_sum()
    left, right = system.generator_sector()
    if left == right:
        return gen if left == algebra else None
    dgen = system.dual_sum(gen)
    if algebra == left:
        got, known = fuse(system, gen, dgen)
    elif algebra == right:
        got, known = fuse(system, dgen, gen)
    else:
        return None
    return got if known else None


def _scope_generated(system: FusionSystem, algebra: str) -> bool:
    # every even object is a constituent of a power of the even generator, so a
    # scope containing it and closed under products is the whole even part
    eg = even_generator(system, algebra)
    return eg is not None and all(c in system.by_id for c in eg)


def is_tpc(system: FusionSystem) -> TpcVerdict:
    """Decide whether every weight function on the even part is trivial.

    Both even parts are solved and must agree.  On truncations a nonzero
    space is only decisive when no constraint was skipped or the system's
    certified weight is nonzero on the even part; otherwise
    :class:`AmbiguousTruncation` is raised.  A zero space on a truncation
    is definitive when the even generator lies inside it.
    """
    labs = even_algebras(system)
    if not labs:
        raise ValueError("system has no even sector")
    dims: dict[str, int] = {}
    trivial, nontrivial, ambiguous = [], [], []
    witness = None
    sure: dict[str, bool] = {}
    all_skipped: list = []
    for lab in labs:
        space = solve_weight_space(system, even_only(lab))
        dims[lab] = space.dimension
        all_skipped.extend(space.skipped)
        generated = not system.is_truncated or _scope_generated(system, lab)
        if space.dimension == 0:
            trivial.append(lab)
            sure[lab] = generated
            continue
        if not space.skipped:
            nontrivial.append(lab)
            sure[lab] = generated
            if witness is None:
                witness = (lab, space.vector(0), False)
            continue
        cw = system.certified_weight or {}
        restricted = {v: cw.get(v, 0) for v in space.objects}
        if any(restricted.values()):
            nontrivial.append(lab)
            sure[lab] = True
            if witness is None or not witness[2]:
                witness = (lab, restricted, True)
        else:
            ambiguous.append(lab)
    notes = []
    if trivial and nontrivial:
        if not system.is_truncated:
            raise InvariantViolation(
                f"even parts disagree: trivial on {trivial}, nontrivial on {nontrivial}"
            )
        notes.append(f"even parts disagree at this depth: trivial on {trivial}")
    if nontrivial:
        lab, vec, cert = witness
        if cert:
            notes.append("witness is the certified weight of the untruncated system")
        return TpcVerdict(
            tpc=False,
            dimensions=dims,
            witness=vec,
            witness_algebra=lab,
            depth_conditional=system.is_truncated,
            definitive=any(sure[lab] for lab in nontrivial),
            skipped=tuple(all_skipped),
            notes=tuple(notes),
        )
    if trivial:
        if ambiguous:
            notes.append(f"weight space on {ambiguous} undecided at this depth")
        return TpcVerdict(
            tpc=True,
            dimensions=dims,
            depth_conditional=system.is_truncated,
            definitive=any(sure[lab] for lab in trivial),
            skipped=tuple(all_skipped),
            notes=tuple(notes),
        )
    raise AmbiguousTruncation(
        "nonzero weight space with skipped constraints; verdict depends on the truncation",
        dimension=max(dims.values()),
        skipped=all_skipped,
    )


# ---------------------------------------------------------------------------
# extension of even weights


def _distinguished_odd(system: FusionSystem, algebra: str) -> Optional[str]:
    if system.generator is None:
        return None
    for c, _ in system.generator:
        left, right = system.sector(c)
        if left == algebra and right != algebra:
            return c
        if right == algebra and left != algebra:
            return system.dual(c)
    return None


def extend_even_weight(
    system: FusionSystem,
    even_weight: WeightFunction,
    odd_scale: float = 1.0,
    algebra: Optional[str] = None,
) -> WeightFunction:
    """Extend a weight function on the L-L objects to the whole bicategory.

    The extension takes the value ``odd_scale`` on the distinguished odd
    object (the generator constituent leaving L) and is otherwise forced.
    """
    if odd_scale <= 0:
        raise ValueError("odd_scale must be positive")
    if algebra is None:
        algebra = even_algebras(system)[0]
    evens = scope_objects(system, even_only(algebra))
    bad = check_weight_function(system, even_weight, even_only(algebra))
    if bad:
        raise NoExtension("input is not an even weight function: " + "; ".join(bad[:3]))
    s0 = _distinguished_odd(system, algebra)
    full = solve_weight_space(system, FULL)
    if s0 is None:
        if len(evens) != len(system.objects):
            raise NoExtension("no generator leaving the even algebra to anchor the odd scale")
        return WeightFunction(
            {v: even_weight.values[v] for v in evens}, even_weight.exact_log, even_weight.parameters
        )
    pos = {v: j for j, v in enumerate(full.objects)}
    anchor_rows = evens + [s0]
    mat = [[Fraction(b[pos[v]]) for b in full.basis] for v in anchor_rows]

    if even_weight.exact_log is not None:
        npar = len(even_weight.parameters)
        cols = []
        for p in range(npar):
            rhs = [Fraction(even_weight.exact_log[v][p]) if p < len(even_weight.exact_log[v]) else Fraction(0)
                   for v in evens] + [Fraction(0)]
            cols.append(rhs)
        params = list(even_weight.parameters)
        if odd_scale != 1.0:
            cols.append([Fraction(0)] * len(evens) + [Fraction(1)])
            params.append(odd_scale)
        coeffs = []
        for rhs in cols:
            sol = exact.solve(mat, rhs) if full.dimension else (
                [] if all(x == 0 for x in rhs) else None
            )
            if sol is None:
                raise NoExtension("even weight admits no consistent extension")
            coeffs.append(sol)
        exps = {
            v: tuple(sum((c * b[pos[v]] for c, b in zip(sol, full.basis)), Fraction(0)) for sol in coeffs)
            for v in full.objects
        }
        return WeightFunction.from_exponents(exps, params)

    rhs = np.array([math.log(even_weight.values[v]) for v in evens] + [math.log(odd_scale)])
    a = np.array([[float(x) for x in row] for row in mat]).reshape(len(anchor_rows), full.dimension)
    if full.dimension:
        coef, *_ = np.linalg.lstsq(a, rhs, rcond=None)
        resid = np.abs(a @ coef - rhs).max()
    else:
        coef = np.zeros(0)
        resid = np.abs(rhs).max()
    if resid > 1e-9 * max(1.0, np.abs(rhs).max()):
        raise NoExtension(f"even weight admits no consistent extension (residual {resid:.3g})")
    logs = np.array(full.basis, dtype=float).T @ coef if full.dimension else np.zeros(len(full.objects))
    return WeightFunction({v: float(math.exp(x)) for v, x in zip(full.objects, logs)})


# ---------------------------------------------------------------------------
# alternating words and central elements


def _sign(start_sign: Union[str, int]) -> int:
    if start_sign in ("+", 1, +1):
        return 1
    if start_sign in ("-", -1):
        return -1
    raise ValueError(f"sign must be '+' or '-', not {start_sign!r}")


def _word_exponent(sign: int, i: int) -> int:
    # i counts from 1: exponent (-1)**(i-1) for '+', (-1)**i for '-'
    return (-1) ** (i - 1) if sign > 0 else (-1) ** i


def weight_of_word(w: Union[WeightFunction, Mapping[str, float]], start_sign, word: Sequence[str]) -> float:
    """Alternating product of depth-1 weights: w(s1) w(s2)^-1 w(s3) ... for '+'."""
    sign = _sign(start_sign)
    values = w.values if isinstance(w, WeightFunction) else w
    out = 1.0
    for i, s in enumerate(word, start=1):
        out *= values[s] ** _word_exponent(sign, i)
    return out


def log_weight_of_word(w: WeightFunction, start_sign, word: Sequence[str]) -> Exponents:
    """Exact log version of :func:`weight_of_word` (requires ``exact_log``)."""
    if w.exact_log is None:
        raise ValueError("weight function carries no exact log data")
    sign = _sign(start_sign)
    acc = [Fraction(0)] * len(w.parameters)
    for i, s in enumerate(word, start=1):
        k = _word_exponent(sign, i)
        for j, x in enumerate(w.exact_log[s]):
            acc[j] += k * x
    return tuple(acc)


@dataclass(frozen=True)
class CentralElementCoefficients:
    level: tuple[str, int]
    coeffs: Mapping[str, float]
    exact_log: Optional[Mapping[str, Exponents]] = None


def level_factors(system: FusionSystem, start_sign, depth: int) -> list[dict]:
    """The alternating factors H, dual H, H, ... (or starting from dual H)."""
    gen = system.generator_sum()
    dgen = system.dual_sum(gen)
    first, second = (gen, dgen) if _sign(start_sign) > 0 else (dgen, gen)
    return [first if i % 2 == 0 else second for i in range(depth)]


def level_objects(system: FusionSystem, start_sign, depth: int) -> list[str]:
    """Simple constituents of the alternating tensor word of the given length."""
    if depth == 0:
        left, right = system.generator_sector()
        unit = system.units[left if _sign(start_sign) > 0 else right]
        return [unit]
    got, known = expand_sum_word(system, level_factors(system, start_sign, depth))
    if not known:
        raise TruncationExhausted(f"level {depth} needs tensor entries beyond the truncation")
    return sorted(got, key=system.index.__getitem__)


def central_element_coeffs(
    system: FusionSystem, w: WeightFunction, sign, depth: int, tolerance: float = 1e-9
) -> CentralElementCoefficients:
    """Coefficients of the central element at level (sign, depth), verified inductively.

    For every containment ``v3 <= v1 (x) v2`` with ``v1`` at the previous
    level and ``v2`` a constituent of the last factor, checks
    ``coeff(v3) == coeff(v1) * w(v2)``; exactly when ``w`` has exact logs.
    """
    s = "+" if _sign(sign) > 0 else "-"
    objs = level_objects(system, s, depth)
    missing = [v for v in objs if v not in w.values]
    if missing:
        raise MissingWeight(f"weight undefined at {', '.join(missing)}")
    coeffs = {v: w.values[v] for v in objs}
    if any(c <= 0 for c in coeffs.values()):
        raise InconsistentWeight("central element coefficients must be positive")
    ex = w.exact_log
    if depth >= 1:
        prev = level_objects(system, s, depth - 1)
        last = level_factors(system, s, depth)[-1]
        absent = [v for v in list(prev) + list(last) if v not in w.values]
        if absent:
            raise MissingWeight(f"weight undefined at {', '.join(absent)}")
        for v1 in prev:
            for v2 in last:
                got, _ = fuse(system, {v1: 1}, {v2: 1})
                for v3 in got:
                    if ex is not None:
                        ok = tuple(ex[v3]) == tuple(a + b for a, b in zip(ex[v1], ex[v2]))
                    else:
                        want = w.values[v1] * w.values[v2]
                        ok = abs(coeffs[v3] - want) <= tolerance * max(coeffs[v3], want)
                    if not ok:
                        raise InconsistentWeight(
                            f"coefficient of {v3} differs from coeff({v1}) * w({v2}) at level ({s}, {depth})"
                        )
    exact_coeffs = {v: tuple(ex[v]) for v in objs} if ex is not None else None
    return CentralElementCoefficients((s, depth), coeffs, exact_coeffs)
