"""Generated subsystems, composition over a middle algebra, and cabling.

Composition is combinatorial: the composite generator is ``g_AB (x) g_BC``
read from a three-algebra table, and the composite system is whatever it
generates there.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Union

from .errors import AmbiguousTruncation, TheoremViolation, TruncationExhausted
from .fusion import (
    COMPLETE,
    FusionSystem,
    Mult,
    TensorEntry,
    expand_sum_word,
    fuse,
    truncated,
    validate,
)
from .weights import TpcVerdict, is_tpc

DEFAULT_DEPTH = 6

Generator = Union[str, Mapping[str, Mult], tuple]


def _as_sum(gen: Generator) -> dict:
    if isinstance(gen, str):
        return {gen: 1}
    if isinstance(gen, Mapping):
        return dict(gen)
    return dict(gen)


@dataclass(frozen=True)
class Bicategory3:
    """A three-algebra system with generators A -> B and B -> C."""

    system: FusionSystem
    gen_ab: tuple
    gen_bc: tuple
    labels: tuple[str, str, str] = ("A", "B", "C")

    def __post_init__(self):
        object.__setattr__(self, "gen_ab", tuple(sorted(_as_sum(self.gen_ab).items())))
        object.__setattr__(self, "gen_bc", tuple(sorted(_as_sum(self.gen_bc).items())))
        object.__setattr__(self, "labels", tuple(self.labels))


def validate_bicategory(b: Bicategory3) -> list[str]:
    out = list(validate(b.system))
    if out:
        return out
    a, m, c = b.labels
    for name, gen, want in (("gen_ab", b.gen_ab, (a, m)), ("gen_bc", b.gen_bc, (m, c))):
        for v, _ in gen:
            if v not in b.system.by_id:
                out.append(f"{name} references unknown object {v!r}")
            elif b.system.sector(v) != want:
                out.append(f"{name} constituent {v} is not in sector {want}")
        if gen and all(v in b.system.by_id and b.system.is_unit(v) for v, _ in gen):
            out.append(f"{name} must not be a unit")
    return out


def generated_subsystem(system: FusionSystem, gen: Generator, depth: int = DEFAULT_DEPTH) -> FusionSystem:
    """Sub-system of constituents of words in ``gen`` and its dual of length <= ``depth``.

    Words are grown by tensoring on the right with whichever of the
    generator and its dual composes, starting from the units of the
    generator's sector.  The result is complete when one more step adds
    nothing and every product among its objects is known.
    """
    g = _as_sum(gen)
    dg = system.dual_sum(g)
    left = system.by_id[next(iter(g))].left
    right = system.by_id[next(iter(g))].right
    steps = [g, dg]
    starts = [system.units[left]] + ([system.units[right]] if right != left else [])
    seen = list(dict.fromkeys(starts))
    seen_set = set(seen)
    unknown = False
    frontier = list(seen)
    grew_past = False
    for level in range(depth + 1):
        nxt = []
        for v in frontier:
            for step in steps:
                if not system.composable(v, next(iter(step))):
                    continue
                got, known = fuse(system, {v: 1}, step)
                if not known:
                    unknown = unknown or level < depth
                for c in got:
                    if c not in seen_set:
                        if level == depth:
                            grew_past = True
                            continue
                        seen_set.add(c)
                        seen.append(c)
                        nxt.append(c)
        frontier = nxt
        if not frontier and level < depth:
            break
    order = sorted(seen, key=system.index.__getitem__)
    keep = set(order)
    labels = tuple(lab for lab in system.algebras if any(system.by_id[v].left == lab for v in order))
    objs = tuple(system.by_id[v] for v in order)
    table = {}
    dropped = False
    for (a, b), e in system.tensor.items():
        if a in keep and b in keep:
            cons = tuple((c, m) for c, m in e.constituents if c in keep)
            lost = len(cons) < len(e.constituents)
            dropped = dropped or lost
            table[(a, b)] = TensorEntry(cons, e.truncated or lost)
    sub = FusionSystem(labels, objs, table, tuple(g.items()), COMPLETE, None, dict(system.metadata))
    complete = not (unknown or grew_past or dropped) and not sub.unknown_entries()
    if complete:
        completeness = COMPLETE
    else:
        completeness = system.completeness if system.is_truncated else truncated(depth)
    cw = None
    if system.certified_weight is not None:
        cw = {v: system.certified_weight.get(v, 0) for v in order}
    return FusionSystem(labels, objs, table, tuple(g.items()), completeness, cw, dict(system.metadata))


def compose(b: Bicategory3, depth: int = DEFAULT_DEPTH) -> FusionSystem:
    """The A-C system generated by ``gen_ab (x) gen_bc``."""
    g, known = fuse(b.system, dict(b.gen_ab), dict(b.gen_bc))
    if not known or not g:
        raise TruncationExhausted("the composite generator needs tensor entries beyond the truncation")
    if all(b.system.is_unit(v) for v in g):
        raise TruncationExhausted("the composite generator is a unit")
    sub = generated_subsystem(b.system, g, depth)
    if not b.system.is_truncated and sub.is_truncated and depth >= 1:
        # a complete source closes within depth unless the depth is too small
        missing = sub.unknown_entries()
        if missing:
            raise TruncationExhausted(f"composite products missing from the table, e.g. {missing[0]}")
    return sub


def cable(system: FusionSystem, k: int, depth: int = DEFAULT_DEPTH) -> FusionSystem:
    """System generated by the alternating word g, dual g, g, ... of length ``k``."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    g = system.generator_sum()
    dg = system.dual_sum(g)
    factors = [g if i % 2 == 0 else dg for i in range(k)]
    word, known = expand_sum_word(system, factors)
    if not known:
        raise TruncationExhausted(f"the length-{k} word needs tensor entries beyond the truncation")
    return generated_subsystem(system, word, depth)


@dataclass(frozen=True)
class TheoremReport:
    status: str  # PASS, FAIL or PROVISIONAL
    hypothesis: Optional[bool]
    conclusion: Optional[bool]
    verdicts: Mapping[str, Optional[TpcVerdict]]
    notes: tuple[str, ...] = field(default=())


def _decide(system: FusionSystem) -> tuple[Optional[bool], Optional[TpcVerdict]]:
    try:
        v = is_tpc(system)
    except AmbiguousTruncation:
        return None, None
    return v.tpc, v


def verify_tpc_closure(b: Bicategory3, depth: int = DEFAULT_DEPTH) -> TheoremReport:
    """Check the implication: both factors TPC implies the composite is TPC.

    Raises :class:`TheoremViolation` carrying the report when the
    implication fails; that can only mean corrupt input or a bug.
    """
    parts = {
        "ab": generated_subsystem(b.system, dict(b.gen_ab), depth),
        "bc": generated_subsystem(b.system, dict(b.gen_bc), depth),
        "composite": compose(b, depth),
    }
    res = {k: _decide(s) for k, s in parts.items()}
    verdicts = {k: v for k, (_, v) in res.items()}
    ab, bc, conc = res["ab"][0], res["bc"][0], res["composite"][0]
    sure = {k: v is not None and v.definitive for k, v in verdicts.items()}
    notes = []
    if ab is False or bc is False:
        hyp: Optional[bool] = False
    elif ab is None or bc is None:
        hyp = None
    else:
        hyp = True
    for k, v in verdicts.items():
        if v is None:
            notes.append(f"{k}: verdict undecided at this depth")
        elif not v.definitive:
            notes.append(f"{k}: verdict holds at this depth only")
    if hyp is False:
        falsified = [k for k in ("ab", "bc") if res[k][0] is False]
        if any(sure[k] for k in falsified):
            status = "PASS"
            notes.append("hypothesis not satisfied")
        else:
            status = "PROVISIONAL"
    elif conc is True:
        status = "PASS" if sure["composite"] else "PROVISIONAL"
    elif hyp is True and conc is False:
        if sure["ab"] and sure["bc"] and sure["composite"]:
            report = TheoremReport("FAIL", hyp, conc, verdicts, tuple(notes))
            raise TheoremViolation("both factors have TPC but the composite does not", report=report)
        status = "PROVISIONAL"
    else:
        status = "PROVISIONAL"
    return TheoremReport(status, hyp, conc, verdicts, tuple(notes))
