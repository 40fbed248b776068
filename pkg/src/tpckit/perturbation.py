"""Dimensions, moduli and the effect of perturbing by a weight.

Perturbing by ``w`` multiplies the right dimension of each depth-1
constituent by ``w(s)`` and the left dimension by ``w(s)**-1``; a constant
weight ``lam`` therefore sends the modulus ``(d_minus, d_plus)`` to
``(d_minus / lam, lam * d_plus)``.  :data:`RIGHT_EXPONENT` fixes this
direction in one place.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Union

import numpy as np

from .errors import MissingWeight, NonPositiveScalar, NotAWeight
from .fusion import FusionSystem, PrincipalGraphPair, pf_dimensions
from .weights import FULL, WeightFunction, check_weight_function, solve_weight_space

RIGHT_EXPONENT = 1  # right dims scale by w**RIGHT_EXPONENT, left dims by w**-RIGHT_EXPONENT
SPHERICAL_TOL = 1e-9

Weight = Union[WeightFunction, Mapping[str, float]]


def _values(w: Weight) -> Mapping[str, float]:
    return w.values if isinstance(w, WeightFunction) else w


@dataclass(frozen=True)
class ConstituentDims:
    left: float
    right: float
    mult: int = 1


@dataclass(frozen=True)
class DimensionData:
    """Left/right dimensions and multiplicity of each depth-1 constituent."""

    entries: Mapping[str, ConstituentDims]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("dimension data needs at least one constituent")
        for s, e in self.entries.items():
            if not (e.left > 0 and e.right > 0):
                raise ValueError(f"dimensions of {s} must be positive")
            if not (isinstance(e.mult, int) and e.mult >= 1):
                raise ValueError(f"multiplicity of {s} must be a positive integer")
        object.__setattr__(self, "entries", dict(self.entries))

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple], names: Optional[Sequence[str]] = None) -> "DimensionData":
        """Build from ``(left, right)`` or ``(left, right, mult)`` tuples named s1, s2, ..."""
        names = list(names) if names is not None else [f"s{i}" for i in range(1, len(pairs) + 1)]
        return cls({n: ConstituentDims(float(p[0]), float(p[1]), int(p[2]) if len(p) > 2 else 1)
                    for n, p in zip(names, pairs)})

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, s: str) -> ConstituentDims:
        return self.entries[s]


@dataclass(frozen=True)
class Modulus:
    delta_minus: float
    delta_plus: float

    def __post_init__(self):
        if not (self.delta_minus > 0 and self.delta_plus > 0):
            raise ValueError("modulus entries must be positive")

    @property
    def index(self) -> float:
        return self.delta_minus * self.delta_plus


def modulus_of(dims: DimensionData) -> Modulus:
    minus = math.fsum(e.mult * e.left for e in dims.entries.values())
    plus = math.fsum(e.mult * e.right for e in dims.entries.values())
    return Modulus(minus, plus)


def perturb_dims(dims: DimensionData, w: Weight) -> DimensionData:
    vals = _values(w)
    missing = [s for s in dims if s not in vals]
    if missing:
        raise MissingWeight(f"weight undefined at {', '.join(missing)}")
    out = {}
    for s, e in dims.entries.items():
        f = vals[s] ** RIGHT_EXPONENT
        out[s] = ConstituentDims(e.left / f, e.right * f, e.mult)
    return DimensionData(out)


def scalar_perturb(m: Modulus, lam: float) -> Modulus:
    if not lam > 0:
        raise NonPositiveScalar(f"scalar must be positive, got {lam}")
    f = lam**RIGHT_EXPONENT
    return Modulus(m.delta_minus / f, m.delta_plus * f)


def normalize(m: Modulus) -> tuple[float, Modulus]:
    """Scalar making the modulus unimodular, and the resulting modulus."""
    lam = math.sqrt(m.delta_minus / m.delta_plus)
    d = math.sqrt(m.delta_minus * m.delta_plus)
    return lam, Modulus(d, d)


def is_spherical(dims: DimensionData, tolerance: float = SPHERICAL_TOL) -> bool:
    return all(abs(e.left - e.right) <= tolerance * max(e.left, e.right) for e in dims.entries.values())


def sphericalizing_weight(
    dims: DimensionData,
    system: Optional[FusionSystem] = None,
    tolerance: float = SPHERICAL_TOL,
) -> WeightFunction:
    """The weight ``sqrt(left / right)`` on each constituent, verified against the system.

    With a system attached the candidate is solved inside its weight space
    and extended to every object; :class:`NotAWeight` is raised when no
    weight function takes the candidate values.
    """
    cand = {s: math.sqrt(e.left / e.right) for s, e in dims.entries.items()}
    if system is None:
        return WeightFunction(cand)
    unknown = [s for s in cand if s not in system.by_id]
    if unknown:
        raise MissingWeight(f"constituents not in the system: {', '.join(unknown)}")
    space = solve_weight_space(system, FULL)
    pos = {v: j for j, v in enumerate(space.objects)}
    names = list(cand)
    rhs = np.array([math.log(cand[s]) for s in names])
    if space.dimension == 0:
        resid = float(np.abs(rhs).max())
        logs = np.zeros(len(space.objects))
    else:
        a = np.array([[b[pos[s]] for b in space.basis] for s in names], dtype=float)
        coef, *_ = np.linalg.lstsq(a, rhs, rcond=None)
        resid = float(np.abs(a @ coef - rhs).max())
        logs = np.array(space.basis, dtype=float).T @ coef
    if resid > tolerance * max(1.0, float(np.abs(rhs).max())):
        raise NotAWeight(
            f"no weight function takes the values sqrt(left/right) (log residual {resid:.3g})"
        )
    w = WeightFunction({v: float(math.exp(x)) for v, x in zip(space.objects, logs)})
    bad = check_weight_function(system, w, FULL, tolerance)
    if bad:
        raise NotAWeight("; ".join(bad[:3]))
    return w


def min_index(dims: DimensionData) -> float:
    """Lowest index over the perturbation class: ``(sum mult * sqrt(left * right))**2``."""
    return math.fsum(e.mult * math.sqrt(e.left * e.right) for e in dims.entries.values()) ** 2


@dataclass(frozen=True)
class PerturbationReport:
    perturbed: DimensionData
    modulus: Modulus
    index: float
    spherical: bool
    sphericalizing: Optional[WeightFunction]
    min_index: float


def perturbation_report(
    dims: DimensionData,
    w: Optional[Weight] = None,
    system: Optional[FusionSystem] = None,
) -> PerturbationReport:
    """Perturb by ``w`` (identity when omitted) and summarize the result."""
    perturbed = perturb_dims(dims, w) if w is not None else dims
    m = modulus_of(perturbed)
    try:
        sph = sphericalizing_weight(perturbed, system)
    except NotAWeight:
        sph = None
    return PerturbationReport(
        perturbed=perturbed,
        modulus=m,
        index=m.index,
        spherical=is_spherical(perturbed),
        sphericalizing=sph,
        min_index=min_index(dims),
    )


def dims_from_graph(graphs: PrincipalGraphPair, name: Optional[str] = None) -> DimensionData:
    """Left/right dimensions of the generator read off the two graphs' PF vectors."""
    plus = pf_dimensions(graphs, "plus")
    minus = pf_dimensions(graphs, "minus")
    (u, m), = [(u, m) for (v, u), m in graphs.edges_plus.items() if v == graphs.base and m]
    left = plus.values[u]
    right = minus.values[u]
    return DimensionData({name or u: ConstituentDims(left, right, m)})
