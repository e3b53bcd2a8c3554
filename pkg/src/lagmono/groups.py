"""Finite permutation groups and integer matrix groups as explicit element lists.

Desk-scale orders make explicit lists practical and keep closure checks,
subgroup tests and isomorphism searches trivial.  Element lists are stored in
a canonical sorted order so all reports are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import NonUnimodularError, NotFiniteError
from .intlat import IntMat

Perm = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """(p o q)(i) = p[q[i]]."""
    return tuple(p[q[i]] for i in range(len(p)))


def invert(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def permute_vector(p: Perm, v: Sequence) -> tuple:
    """Move the entry at position i to position p(i)."""
    out = [None] * len(v)
    for i, x in enumerate(v):
        out[p[i]] = x
    return tuple(out)


def cycle_notation(p: Perm) -> str:
    """One-indexed cycle notation, 'id' for the identity."""
    seen = set()
    cycles = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cycle = [i]
        j = p[i]
        while j != i:
            seen.add(j)
            cycle.append(j)
            j = p[j]
        cycles.append("(" + " ".join(str(k + 1) for k in cycle) + ")")
    return "".join(cycles) if cycles else "id"


@dataclass(frozen=True)
class PermutationGroup:
    degree: int
    elements: tuple[Perm, ...]

    @classmethod
    def from_elements(cls, degree: int, elements: Iterable[Perm]) -> "PermutationGroup":
        return cls(degree, tuple(sorted(set(elements))))

    @classmethod
    def from_generators(cls, degree: int, gens: Iterable[Perm], cap: int = 10_000_000) -> "PermutationGroup":
        elems = {identity_perm(degree)}
        frontier = [g for g in gens]
        elems.update(frontier)
        while frontier:
            fresh = []
            for g in frontier:
                for h in list(elems):
                    for prod in (compose(g, h), compose(h, g)):
                        if prod not in elems:
                            elems.add(prod)
                            fresh.append(prod)
                            if len(elems) > cap:
                                raise NotFiniteError("permutation closure exceeded cap")
            frontier = fresh
        return cls(degree, tuple(sorted(elems)))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p in set(self.elements)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def generators(self) -> tuple[Perm, ...]:
        """Small generating set found greedily over the sorted element list."""
        gens: list[Perm] = []
        generated = {identity_perm(self.degree)}
        for p in self.elements:
            if p in generated:
                continue
            gens.append(p)
            generated = set(PermutationGroup.from_generators(self.degree, gens).elements)
            if len(generated) == self.order:
                break
        return tuple(gens)

    def is_subgroup_of(self, other: "PermutationGroup") -> bool:
        big = set(other.elements)
        return all(p in big for p in self.elements)


@dataclass(frozen=True)
class MatrixGroup:
    """Finite subgroup of GL(n, Z) stored as an explicit sorted element list."""

    dim: int
    elements: tuple[IntMat, ...]

    @classmethod
    def from_elements(cls, dim: int, elements: Iterable[IntMat]) -> "MatrixGroup":
        uniq = sorted(set(elements), key=IntMat.canonical_key)
        return cls(dim, tuple(uniq))

    @classmethod
    def from_generators(cls, dim: int, gens: Iterable[IntMat], cap: int = 10_000) -> "MatrixGroup":
        gens = list(gens)
        for g in gens:
            if g.nrows != dim or g.ncols != dim:
                raise ValueError("generator dimension mismatch")
            if abs(g.det()) != 1:
                raise NonUnimodularError(f"generator {g} has determinant {g.det()}")
        ident = IntMat.identity(dim)
        elems = {ident}
        elems.update(gens)
        frontier = list(gens)
        while frontier:
            fresh = []
            for g in frontier:
                for h in list(elems):
                    for prod in (g @ h, h @ g):
                        if prod not in elems:
                            elems.add(prod)
                            fresh.append(prod)
                            if len(elems) > cap:
                                raise NotFiniteError(
                                    f"matrix closure exceeded cap {cap}; group not verified finite"
                                )
            frontier = fresh
        return cls.from_elements(dim, elems)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: IntMat) -> bool:
        return g in set(self.elements)

    def __iter__(self) -> Iterator[IntMat]:
        return iter(self.elements)

    def nonidentity(self) -> list[IntMat]:
        ident = IntMat.identity(self.dim)
        return [g for g in self.elements if g != ident]

    def generators(self) -> tuple[IntMat, ...]:
        gens: list[IntMat] = []
        generated = {IntMat.identity(self.dim)}
        for g in self.elements:
            if g in generated:
                continue
            gens.append(g)
            generated = set(MatrixGroup.from_generators(self.dim, gens, cap=self.order).elements)
            if len(generated) == self.order:
                break
        return tuple(gens)

    def conjugate(self, u: IntMat, u_inv: IntMat) -> "MatrixGroup":
        return MatrixGroup.from_elements(self.dim, [u @ g @ u_inv for g in self.elements])
