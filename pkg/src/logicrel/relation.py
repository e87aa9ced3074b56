"""The implication relation proper.

An implication between two formulas holds exactly when their conjunction is
logically equivalent to the first formula.  This module exposes that relation
directly (implies_rel), the three equivalent criteria for it, the disjoint /
joint / inclusion classifier, an auditor that contrasts the material and
relational fate of the classic implication paradox schemas, and a brute-force
verifier that the relation orders truth-table classes into a bounded lattice.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .equivalence import default_universe, equivalent, is_contradiction, is_tautology
from .errors import LimitError
from .formula import And, Formula, Imp, Not, Or, Universe
from .semantics import Interpretation, Mode, truth_table


@dataclass(frozen=True)
class CriteriaReport:
    """The three equivalent ways of stating the relation, computed independently.

    and_absorb:  first & second  =  first
    conj_bottom: first & ~second is a contradiction
    disj_top:    ~first | second is a tautology
    """

    and_absorb: bool
    conj_bottom: bool
    disj_top: bool
    agree: bool

    @property
    def holds(self) -> bool:
        return self.and_absorb


class RelationKind(Enum):
    DISJOINT = "disjoint"
    JOINT = "joint"
    INCLUSION_FORWARD = "inclusion_forward"
    INCLUSION_BACKWARD = "inclusion_backward"
    EQUIVALENT = "equivalent"


FIRST_IS_BOTTOM = "first_is_bottom"
FIRST_IS_TOP = "first_is_top"
SECOND_IS_BOTTOM = "second_is_bottom"
SECOND_IS_TOP = "second_is_top"


@dataclass(frozen=True)
class RelationClass:
    kind: RelationKind
    degenerate: frozenset[str] = field(default_factory=frozenset)


@dataclass(frozen=True)
class ParadoxReport:
    """One paradox schema instantiated and judged under both modes."""

    schema: str
    formula: Formula
    material_tautology: bool
    relational_tautology: bool
    relational_status: str  # tautology | contradiction | contingent
    relational_witness: Optional[Interpretation]  # lowest false row when not a tautology


@dataclass(frozen=True)
class LatticeReport:
    universe_size: int
    class_count: int
    failures: tuple[tuple[str, tuple[int, ...]], ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def implies_rel(a: Formula, b: Formula, u: Optional[Universe] = None) -> bool:
    """Does the implication relation hold from a to b over u?"""
    if u is None:
        u = default_universe(a, b)
    return equivalent(And(a, b), a, Mode.RELATIONAL, u).holds


def criteria_report(a: Formula, b: Formula, u: Optional[Universe] = None) -> CriteriaReport:
    """Evaluate all three criteria separately and report whether they agree."""
    if u is None:
        u = default_universe(a, b)
    and_absorb = equivalent(And(a, b), a, Mode.RELATIONAL, u).holds
    conj_bottom = is_contradiction(And(a, Not(b)), Mode.RELATIONAL, u).holds
    disj_top = is_tautology(Or(Not(a), b), Mode.RELATIONAL, u).holds
    agree = and_absorb == conj_bottom == disj_top
    return CriteriaReport(and_absorb, conj_bottom, disj_top, agree)


def classify_relation(a: Formula, b: Formula, u: Optional[Universe] = None) -> RelationClass:
    """Disjoint / joint / inclusion / equivalent, with degeneracy made visible.

    The kinds coincide in the trivial circumstances where an operand is itself
    a contradiction or a tautology; the degenerate flags record that, and the
    kind is then picked so that inclusion-forward still means exactly
    "the relation holds and the operands are not equivalent".
    """
    if u is None:
        u = default_universe(a, b)
    ta = truth_table(a, u, Mode.RELATIONAL)
    tb = truth_table(b, u, Mode.RELATIONAL)
    meet = ta.bits & tb.bits

    flags = set()
    if ta.is_all_false:
        flags.add(FIRST_IS_BOTTOM)
    if ta.is_all_true:
        flags.add(FIRST_IS_TOP)
    if tb.is_all_false:
        flags.add(SECOND_IS_BOTTOM)
    if tb.is_all_true:
        flags.add(SECOND_IS_TOP)
    degenerate = frozenset(flags)

    if ta.bits == tb.bits:
        kind = RelationKind.EQUIVALENT
    elif meet == ta.bits:
        kind = RelationKind.INCLUSION_FORWARD
    elif meet == tb.bits:
        kind = RelationKind.INCLUSION_BACKWARD
    elif meet == 0:
        kind = RelationKind.DISJOINT
    else:
        kind = RelationKind.JOINT
    return RelationClass(kind, degenerate)


_SCHEMAS = ("P1", "P2", "P3")


def paradox_formula(schema: str, a: Formula, b: Formula) -> Formula:
    """Instantiate one of the three classic paradox schemas with first=a, second=b."""
    if schema == "P1":  # a false proposition implies any proposition
        return Imp(Not(a), Imp(a, b))
    if schema == "P2":  # a true proposition is implied by any proposition
        return Imp(a, Imp(b, a))
    if schema == "P3":  # of any two propositions, one implies the other
        return Or(Imp(a, b), Imp(b, a))
    raise ValueError(f"unknown schema {schema!r}")


def audit_paradoxes(a: Formula, b: Formula, u: Optional[Universe] = None) -> list[ParadoxReport]:
    """Judge all three schemas, instantiated with a and b, under both modes."""
    if u is None:
        u = default_universe(a, b)
    reports = []
    for schema in _SCHEMAS:
        f = paradox_formula(schema, a, b)
        material = is_tautology(f, Mode.MATERIAL, u)
        relational = is_tautology(f, Mode.RELATIONAL, u)
        if relational.holds:
            status = "tautology"
        elif is_contradiction(f, Mode.RELATIONAL, u).holds:
            status = "contradiction"
        else:
            status = "contingent"
        reports.append(
            ParadoxReport(
                schema=schema,
                formula=f,
                material_tautology=material.holds,
                relational_tautology=relational.holds,
                relational_status=status,
                relational_witness=relational.witness,
            )
        )
    return reports


_SAMPLED_CHECKS = 100_000
_SAMPLE_SEED = 20_240_601


def verify_lattice(n: int, sample_seed: int = _SAMPLE_SEED) -> LatticeReport:
    """Check that the relation partially orders all 2^(2^n) truth-table classes
    into a bounded lattice with & as meet and | as join.

    Classes are the truth tables themselves, encoded as row bit vectors; the
    relation between classes x and y is x & y == x.  For n <= 3 every law is
    checked exhaustively: per-class down-sets and up-sets are built as bitmasks,
    which covers all class triples (transitivity, greatest lower bound, least
    upper bound) without enumerating them one by one.  For n = 4 the pair and
    triple laws are checked on seeded random samples instead.
    """
    if not 1 <= n <= 4:
        raise LimitError(f"lattice verification supports 1 <= n <= 4, got {n}")

    count = 1 << (1 << n)  # 2^(2^n) classes
    top = count - 1
    failures: list[tuple[str, tuple[int, ...]]] = []

    def le(x: int, y: int) -> bool:
        return x & y == x

    for x in range(count):
        if not le(x, x):
            failures.append(("reflexivity", (x,)))
        if not le(0, x):
            failures.append(("bottom", (x,)))
        if not le(x, top):
            failures.append(("top", (x,)))

    if n <= 3:
        down = [0] * count
        up = [0] * count
        for x in range(count):
            for y in range(count):
                if le(y, x):
                    down[x] |= 1 << y
                if le(x, y):
                    up[x] |= 1 << y

        for x in range(count):
            for y in range(count):
                if le(x, y) and le(y, x) and x != y:
                    failures.append(("anti-symmetry", (x, y)))
                if le(x, y):
                    stray = down[x] & ~down[y]
                    if stray:
                        w = (stray & -stray).bit_length() - 1
                        failures.append(("transitivity", (w, x, y)))
                if down[x & y] != down[x] & down[y]:
                    failures.append(("meet", (x, y)))
                if up[x | y] != up[x] & up[y]:
                    failures.append(("join", (x, y)))
    else:
        rng = random.Random(sample_seed)
        for _ in range(_SAMPLED_CHECKS):
            x = rng.randrange(count)
            y = rng.randrange(count)
            z = rng.randrange(count)
            if le(x, y) and le(y, x) and x != y:
                failures.append(("anti-symmetry", (x, y)))
            if le(x, y) and le(y, z) and not le(x, z):
                failures.append(("transitivity", (x, y, z)))
            if not (le(x & y, x) and le(x & y, y)):
                failures.append(("meet", (x, y)))
            if le(z, x) and le(z, y) and not le(z, x & y):
                failures.append(("meet", (z, x, y)))
            if not (le(x, x | y) and le(y, x | y)):
                failures.append(("join", (x, y)))
            if le(x, z) and le(y, z) and not le(x | y, z):
                failures.append(("join", (x, y, z)))

    return LatticeReport(universe_size=n, class_count=count, failures=tuple(failures))


def hasse_edges(n: int) -> list[tuple[int, int]]:
    """Covering pairs (lower, upper) of the class order, for DOT export; n <= 2."""
    if not 1 <= n <= 2:
        raise LimitError(f"Hasse export supports 1 <= n <= 2, got {n}")
    count = 1 << (1 << n)

    def le(x: int, y: int) -> bool:
        return x & y == x

    edges = []
    for x in range(count):
        for y in range(count):
            if x == y or not le(x, y):
                continue
            if any(z not in (x, y) and le(x, z) and le(z, y) for z in range(count)):
                continue
            edges.append((x, y))
    return edges


def proof_case_preconditions(a: Formula, b: Formula, u: Optional[Universe] = None) -> bool:
    """The side conditions under which all three paradox schemas demonstrably fail:
    neither operand is a contradiction or tautology, and their conjunction is one.
    """
    if u is None:
        u = default_universe(a, b)
    ta = truth_table(a, u, Mode.RELATIONAL)
    tb = truth_table(b, u, Mode.RELATIONAL)
    nontrivial = not (ta.is_all_false or ta.is_all_true or tb.is_all_false or tb.is_all_true)
    return nontrivial and (ta.bits & tb.bits) == 0
