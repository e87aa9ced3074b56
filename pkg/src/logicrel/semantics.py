"""Dual-mode evaluation and truth tables.

Material mode is classical: an implication node is valued as not-antecedent or
consequent, pointwise per interpretation.  Relational mode instead treats an
implication as a claim about the whole universe: it holds iff
antecedent & consequent is logically equivalent to the antecedent.  That makes
its value global (the same at every interpretation), so nested implications
are handled by rewriting each innermost one to the constant T or F before the
enclosing one is judged; see eliminate_implications.

Truth tables are stored as int bit vectors: bit i is the value at row i, and
row i assigns letter k true iff bit k of i is set.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .errors import LimitError, UniverseMismatch
from .formula import (
    BOTTOM,
    TOP,
    And,
    Bottom,
    Formula,
    Imp,
    Letter,
    Not,
    Or,
    Top,
    Universe,
    letters,
)
from .limits import max_letters


class Mode(Enum):
    MATERIAL = "material"
    RELATIONAL = "relational"


@dataclass(frozen=True)
class Interpretation:
    """One truth assignment: values[k] belongs to the k-th universe letter."""

    universe: Universe
    values: tuple[bool, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(self.universe):
            raise ValueError(
                f"{len(self.values)} values for {len(self.universe)} letters"
            )

    @classmethod
    def from_index(cls, universe: Universe, row: int) -> "Interpretation":
        return cls(universe, tuple(bool((row >> k) & 1) for k in range(len(universe))))

    @property
    def index(self) -> int:
        return sum(1 << k for k, v in enumerate(self.values) if v)

    def value(self, name: str) -> bool:
        if name not in self.universe:
            raise UniverseMismatch(f"letter {name!r} not in universe {self.universe.letters}")
        return self.values[self.universe.position(name)]

    def as_dict(self) -> dict[str, bool]:
        return dict(zip(self.universe.letters, self.values))


@dataclass(frozen=True)
class TruthTable:
    """Bit vector of a formula's value at every interpretation of the universe."""

    universe: Universe
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits <= self.mask:
            raise ValueError("bit vector out of range for universe size")

    @property
    def rows(self) -> int:
        return 1 << len(self.universe)

    @property
    def mask(self) -> int:
        return (1 << (1 << len(self.universe))) - 1

    def value_at(self, row: int) -> bool:
        return bool((self.bits >> row) & 1)

    @property
    def is_all_true(self) -> bool:
        return self.bits == self.mask

    @property
    def is_all_false(self) -> bool:
        return self.bits == 0

    def bits_hex(self) -> str:
        """Lowercase hex encoding of the bit vector, LSB = row 0."""
        width = max(1, (self.rows + 3) // 4)
        return format(self.bits, f"0{width}x")

    def row_bits(self, row: int) -> str:
        """Row assignment as one 0/1 character per letter, universe order."""
        return "".join("1" if (row >> k) & 1 else "0" for k in range(len(self.universe)))

    def render_text(self) -> str:
        """Header of letters, then one `bits(row) : value` line per row."""
        lines = [" ".join(self.universe.letters)]
        for row in range(self.rows):
            lines.append(f"{self.row_bits(row)} : {1 if self.value_at(row) else 0}")
        return "\n".join(lines)


def _check_universe(f: Formula, u: Universe) -> None:
    missing = letters(f) - set(u.letters)
    if missing:
        raise UniverseMismatch(
            f"letters {sorted(missing)} not in universe {u.letters}"
        )
    if len(u) > max_letters():
        raise LimitError(f"universe has {len(u)} letters, limit is {max_letters()}")


def eval_material(f: Formula, i: Interpretation) -> bool:
    """Classical truth value of f at i; implication is not-antecedent-or-consequent."""
    if isinstance(f, Letter):
        return i.value(f.name)
    if isinstance(f, Top):
        return True
    if isinstance(f, Bottom):
        return False
    if isinstance(f, Not):
        return not eval_material(f.child, i)
    if isinstance(f, And):
        return eval_material(f.left, i) and eval_material(f.right, i)
    if isinstance(f, Or):
        return eval_material(f.left, i) or eval_material(f.right, i)
    if isinstance(f, Imp):
        return (not eval_material(f.antecedent, i)) or eval_material(f.consequent, i)
    raise TypeError(f"not a formula: {f!r}")


def _letter_pattern(k: int, n_rows: int) -> int:
    # Rows where bit k is set: blocks of 2^k ones starting at 2^k, period 2^(k+1).
    block = ((1 << (1 << k)) - 1) << (1 << k)
    period = 1 << (k + 1)
    replicate = ((1 << n_rows) - 1) // ((1 << period) - 1)
    return block * replicate


def _material_bits(f: Formula, u: Universe) -> int:
    """Whole material truth table in one bottom-up pass of int bit operations."""
    n_rows = 1 << len(u)
    mask = (1 << n_rows) - 1

    def walk(g: Formula) -> int:
        if isinstance(g, Letter):
            return _letter_pattern(u.position(g.name), n_rows)
        if isinstance(g, Top):
            return mask
        if isinstance(g, Bottom):
            return 0
        if isinstance(g, Not):
            return mask ^ walk(g.child)
        if isinstance(g, And):
            return walk(g.left) & walk(g.right)
        if isinstance(g, Or):
            return walk(g.left) | walk(g.right)
        if isinstance(g, Imp):
            return (mask ^ walk(g.antecedent)) | walk(g.consequent)
        raise TypeError(f"not a formula: {g!r}")

    return walk(f)


def eliminate_implications(f: Formula, u: Universe) -> Formula:
    """Rewrite every implication to the constant T or F, innermost first.

    An implication whose operands are already implication-free becomes T when
    antecedent & consequent is logically equivalent to the antecedent over u
    (checked on material truth tables, sound because no implication remains in
    the operands), F otherwise.  Terminates because the maximum implication
    nesting depth strictly decreases with each layer.
    """
    _check_universe(f, u)

    def walk(g: Formula) -> Formula:
        if isinstance(g, Not):
            return Not(walk(g.child))
        if isinstance(g, And):
            return And(walk(g.left), walk(g.right))
        if isinstance(g, Or):
            return Or(walk(g.left), walk(g.right))
        if isinstance(g, Imp):
            a = walk(g.antecedent)
            b = walk(g.consequent)
            ta = _material_bits(a, u)
            tb = _material_bits(b, u)
            return TOP if ta & tb == ta else BOTTOM
        return g

    return walk(f)


def eval_relational(f: Formula, i: Interpretation) -> bool:
    """Truth value under the relational reading of implication.

    For an implication node the result does not depend on i: it is the same at
    every interpretation of the universe.
    """
    return eval_material(eliminate_implications(f, i.universe), i)


def truth_table(f: Formula, u: Universe, m: Mode) -> TruthTable:
    _check_universe(f, u)
    if m is Mode.RELATIONAL:
        f = eliminate_implications(f, u)
    return TruthTable(u, _material_bits(f, u))


_LEAF_SHARE = 0.25  # chance of cutting a branch short of the depth budget

def gen_random_formula(depth: int, u: Universe, seed: int) -> Formula:
    """Seeded random formula of node depth at most `depth` over u's letters.

    Internal nodes pick uniformly among ~, &, |, ->; leaves pick uniformly
    among the letters plus T and F.  Same (depth, u, seed) gives the same tree.
    """
    if len(u) < 1:
        raise ValueError("need at least one letter to generate formulas")
    rng = random.Random(seed)
    leaves: list[Formula] = [Letter(name) for name in u] + [TOP, BOTTOM]

    def gen(budget: int) -> Formula:
        if budget == 0 or rng.random() < _LEAF_SHARE:
            return rng.choice(leaves)
        op = rng.randrange(4)
        if op == 0:
            return Not(gen(budget - 1))
        if op == 1:
            return And(gen(budget - 1), gen(budget - 1))
        if op == 2:
            return Or(gen(budget - 1), gen(budget - 1))
        return Imp(gen(budget - 1), gen(budget - 1))

    return gen(depth)
