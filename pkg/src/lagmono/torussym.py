"""Monomial torus automorphisms, their torsion fixed points, and admissibility.

A rank 1 local system with root-of-unity coordinates is stored additively as
a point of (Q/Z)^n.  A monodromy matrix g acts on these coordinates by
v -> g^T v mod 1; the transpose convention is pinned by unit tests against
the worked order-3 action (x, y) -> (y, 1/(xy)).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NonUnimodularError, ParseError
from .groups import MatrixGroup
from .intlat import IntMat, rational_rank, smith_normal_form

Coord = Fraction


def _mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True, order=True)
class TorsionPoint:
    """Point of (Q/Z)^n with every coordinate reduced into [0, 1)."""

    coords: tuple[Fraction, ...]

    @classmethod
    def make(cls, coords: Iterable[Fraction | int]) -> "TorsionPoint":
        return cls(tuple(_mod1(Fraction(c)) for c in coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def order(self) -> int:
        out = 1
        for c in self.coords:
            out = math.lcm(out, c.denominator)
        return out

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def act(g: IntMat, p: TorsionPoint) -> TorsionPoint:
    """Induced action of g on local-system coordinates: v -> g^T v mod 1."""
    return TorsionPoint.make(g.transpose().apply(p.coords))


@dataclass(frozen=True)
class FixedPointSet:
    """Common fixed locus of a family of monomial automorphisms.

    Finite loci carry the sorted point list.  Positive-dimensional loci carry
    integer directions spanning the identity component together with torsion
    representatives of its finitely many cosets.
    """

    dim: int
    points: tuple[TorsionPoint, ...] | None
    free_directions: tuple[tuple[int, ...], ...] = ()
    torsion_reps: tuple[TorsionPoint, ...] = ()

    @property
    def is_finite(self) -> bool:
        return self.points is not None

    def finite_points(self) -> tuple[TorsionPoint, ...]:
        if self.points is None:
            raise ValueError("fixed locus is infinite")
        return self.points


def monomial_fixed_points(gs: Sequence[IntMat]) -> FixedPointSet:
    """All v in (Q/Z)^n with g^T v = v mod 1 for every g in gs.

    Solved exactly by a Smith normal form of the stacked matrices g^T - I.
    """
    if not gs:
        raise ValueError("need at least one matrix")
    n = gs[0].nrows
    for g in gs:
        if g.nrows != n or g.ncols != n:
            raise ValueError("dimension mismatch")
        if abs(g.det()) != 1:
            raise NonUnimodularError(f"matrix {g} is not unimodular")
    ident = IntMat.identity(n)
    stacked = []
    for g in gs:
        gt = g.transpose()
        stacked.extend(tuple(a - b for a, b in zip(row, irow)) for row, irow in zip(gt.rows, ident.rows))
    m = IntMat.from_rows(stacked)
    _, d, v = smith_normal_form(m)
    divisors = [d.rows[i][i] if i < d.nrows else 0 for i in range(n)]
    free = [i for i, di in enumerate(divisors) if di == 0]
    torsion_axes = [
        [Fraction(k, di) for k in range(di)] if di != 0 else [Fraction(0)]
        for di in divisors
    ]
    reps = []
    for combo in itertools.product(*torsion_axes):
        point = TorsionPoint.make(v.apply(combo))
        reps.append(point)
    reps.sort()
    if free:
        directions = tuple(v.column(i) for i in free)
        return FixedPointSet(n, None, free_directions=directions, torsion_reps=tuple(reps))
    return FixedPointSet(n, tuple(reps))


def forced_critical_points(group: MatrixGroup) -> FixedPointSet:
    """Points every admissible monodromy element must fix.

    Union, over subsets S of the group with no common fixed vector
    (intersection of the 1-eigenspaces trivial, tested by rank over Q), of
    the common fixed loci of the induced torus automorphisms.  Subsets of
    size at most dim suffice, and each qualifying locus is finite.
    """
    n = group.dim
    ident = IntMat.identity(n)
    candidates = group.nonidentity()
    deltas = {g: [tuple(a - b for a, b in zip(row, irow)) for row, irow in zip(g.rows, ident.rows)] for g in candidates}
    found: set[TorsionPoint] = set()

    def extend(start: int, chosen: list[IntMat], stacked_rows: list, rank: int):
        for idx in range(start, len(candidates)):
            g = candidates[idx]
            rows = stacked_rows + deltas[g]
            new_rank = rational_rank(rows)
            if new_rank == rank:
                continue
            subset = chosen + [g]
            if new_rank == n:
                fixed = monomial_fixed_points(subset)
                assert fixed.is_finite, "finite-order stack with trivial common 1-eigenspace"
                found.update(fixed.finite_points())
            elif len(subset) < n:
                extend(idx + 1, subset, rows, new_rank)

    extend(0, [], [], 0)
    return FixedPointSet(n, tuple(sorted(found)))


def admissible_group(group: MatrixGroup) -> tuple[bool, tuple[IntMat, TorsionPoint] | None]:
    """Check that every element fixes every forced critical point.

    Returns (True, None) or (False, (element, moved point)) with the first
    witness in canonical element and point order.
    """
    forced = forced_critical_points(group).finite_points()
    for g in group.nonidentity():
        for p in forced:
            if act(g, p) != p:
                return False, (g, p)
    return True, None


# ---------------------------------------------------------------------------
# Group text format


def parse_group(text: str, cap: int = 10_000) -> MatrixGroup:
    """Parse the group text format and close the generators.

    Line 1 is ``dim <n>``; each generator is a ``gen`` line followed by n rows
    of n integers.  ``#`` starts a comment.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((lineno, stripped))
    if not lines:
        raise ParseError("empty group file")
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "dim":
        raise ParseError(f"line {lineno}: expected 'dim <n>'")
    try:
        dim = int(parts[1])
    except ValueError as exc:
        raise ParseError(f"line {lineno}: bad dimension {parts[1]!r}") from exc
    if dim < 1:
        raise ParseError(f"line {lineno}: dimension must be positive")
    gens = []
    i = 1
    while i < len(lines):
        lineno, tok = lines[i]
        if tok != "gen":
            raise ParseError(f"line {lineno}: expected 'gen', got {tok!r}")
        if len(lines) - (i + 1) < dim:
            raise ParseError(f"line {lineno}: generator needs {dim} rows")
        rows = []
        for k in range(dim):
            rlineno, rline = lines[i + 1 + k]
            entries = rline.split()
            if len(entries) != dim:
                raise ParseError(f"line {rlineno}: expected {dim} integers")
            try:
                rows.append(tuple(int(x) for x in entries))
            except ValueError as exc:
                raise ParseError(f"line {rlineno}: bad integer entry") from exc
        gens.append(IntMat.from_rows(rows))
        i += 1 + dim
    return MatrixGroup.from_generators(dim, gens, cap=cap)
