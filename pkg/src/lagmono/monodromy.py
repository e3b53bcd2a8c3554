"""Monodromy groups of monotone toric fibres.

The permutations of the facet normals fixing the relation lattice pointwise
form the Hamiltonian group; those fixing it setwise form the symplectic
group.  Both are computed exactly: the pointwise stabiliser is the product
of symmetric groups on the blocks of the coefficient partition, and the
setwise stabiliser is found by a pruned search over block maps, each
candidate verified by canonical lattice comparison.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InconsistentPermutationError, SearchTooLargeError
from .groups import MatrixGroup, PermutationGroup, permute_vector
from .intlat import (
    IntMat,
    LatticeBasis,
    lattice_equal,
    rational_rref,
    solve_rational_system,
)
from .toric import ToricFiberData


@dataclass(frozen=True)
class NormalPartition:
    """Partition of facet indices by equal coefficients in every relation."""

    size: int
    blocks: tuple[tuple[int, ...], ...]

    def block_of(self, i: int) -> int:
        for b, block in enumerate(self.blocks):
            if i in block:
                return b
        raise IndexError(i)

    def __str__(self) -> str:
        return " ".join(
            "{" + ", ".join(str(i + 1) for i in block) + "}" for block in self.blocks
        )


def coefficient_partition(k: LatticeBasis) -> NormalPartition:
    """Group indices whose coordinates agree in every lattice element.

    Two indices are equivalent exactly when the corresponding columns of the
    canonical echelon basis are equal; with no relations at all every index
    is equivalent.
    """
    n = k.ambient
    columns: dict[tuple[int, ...], list[int]] = {}
    for i in range(n):
        col = tuple(row[i] for row in k.basis)
        columns.setdefault(col, []).append(i)
    blocks = tuple(tuple(v) for v in sorted(columns.values()))
    return NormalPartition(n, blocks)


def partition_bound_check(partition: NormalPartition, dim: int) -> bool:
    """sum over blocks of (size - 1) is at most the fibre dimension."""
    return sum(len(b) - 1 for b in partition.blocks) <= dim


def _young_subgroup(partition: NormalPartition, max_order: int) -> PermutationGroup:
    order = 1
    for block in partition.blocks:
        order *= math.factorial(len(block))
    if order > max_order:
        raise SearchTooLargeError(f"group order {order} exceeds cap {max_order}")
    elements = []
    per_block = [list(itertools.permutations(block)) for block in partition.blocks]
    for combo in itertools.product(*per_block):
        perm = list(range(partition.size))
        for block, images in zip(partition.blocks, combo):
            for src, dst in zip(block, images):
                perm[src] = dst
        elements.append(tuple(perm))
    return PermutationGroup.from_elements(partition.size, elements)


def hamiltonian_monodromy(data: ToricFiberData, max_order: int = 50_000) -> PermutationGroup:
    """Permutations of the normals fixing every relation pointwise."""
    partition = coefficient_partition(data.relations)
    return _young_subgroup(partition, max_order)


def _block_map_preserves_lattice(
    k: LatticeBasis, partition: NormalPartition, block_map: Sequence[int]
) -> bool:
    perm = [0] * partition.size
    for b, image in enumerate(block_map):
        for src, dst in zip(partition.blocks[b], partition.blocks[image]):
            perm[src] = dst
    moved = [permute_vector(tuple(perm), row) for row in k.basis]
    return lattice_equal(LatticeBasis.from_vectors(k.ambient, moved), k)


def symplectic_monodromy(
    data: ToricFiberData, max_degree: int = 12, max_order: int = 50_000
) -> PermutationGroup:
    """Permutations of the normals fixing the relation lattice setwise.

    Relations are constant on partition blocks, so within-block permutations
    act trivially on the lattice and the search reduces to bijections of the
    block set.  Candidate block maps must send blocks to blocks of equal size
    and act consistently as a single linear map on the echelon-basis columns;
    survivors are confirmed by canonical lattice comparison.
    """
    k = data.relations
    partition = coefficient_partition(k)
    n = partition.size
    if n > max_degree:
        raise SearchTooLargeError(f"{n} normals exceeds search bound {max_degree}")
    blocks = partition.blocks
    columns = [tuple(row[block[0]] for row in k.basis) for block in blocks]

    valid_maps: list[tuple[int, ...]] = []

    def consistent(pairs: list[tuple[tuple[int, ...], tuple[int, ...]]]) -> bool:
        # A single linear map sending each source column to its image exists
        # exactly when every dependency among the sources also kills the
        # images, i.e. stacking (source | image) does not raise the rank.
        if not k.basis:
            return True
        srcs = [list(map(Fraction, s)) for s, _ in pairs]
        stacked = [list(map(Fraction, s)) + list(map(Fraction, t)) for s, t in pairs]
        _, piv_src = rational_rref(srcs)
        _, piv_stacked = rational_rref(stacked)
        return len(piv_src) == len(piv_stacked)

    def search(assigned: list[int], used: set[int]):
        b = len(assigned)
        if b == len(blocks):
            valid_maps.append(tuple(assigned))
            return
        for image in range(len(blocks)):
            if image in used or len(blocks[image]) != len(blocks[b]):
                continue
            pairs = [(columns[i], columns[img]) for i, img in enumerate(assigned)]
            pairs.append((columns[b], columns[image]))
            if not consistent(pairs):
                continue
            search(assigned + [image], used | {image})

    search([], set())
    confirmed = [
        m for m in valid_maps if _block_map_preserves_lattice(k, partition, m)
    ]

    order = len(confirmed)
    for block in blocks:
        order *= math.factorial(len(block))
    if order > max_order:
        raise SearchTooLargeError(f"group order {order} exceeds cap {max_order}")

    elements = []
    for block_map in confirmed:
        target_arrangements = [
            list(itertools.permutations(blocks[block_map[b]])) for b in range(len(blocks))
        ]
        for combo in itertools.product(*target_arrangements):
            perm = list(range(n))
            for b, images in enumerate(combo):
                for src, dst in zip(blocks[b], images):
                    perm[src] = dst
            elements.append(tuple(perm))
    return PermutationGroup.from_elements(n, elements)


def induced_matrix_group(data: ToricFiberData, group: PermutationGroup) -> MatrixGroup:
    """Unique unimodular matrices realising each permutation of the normals."""
    normals = data.polytope.normals
    n = data.polytope.dim
    rows = [list(map(Fraction, nu)) for nu in normals]
    _, pivots = rational_rref(list(map(list, zip(*rows))))
    base_idx = pivots[:n]
    if len(base_idx) < n:
        raise InconsistentPermutationError("facet normals do not span")
    base = IntMat.from_rows([normals[i] for i in base_idx]).transpose()
    mats = []
    for perm in group.elements:
        image = IntMat.from_rows([normals[perm[i]] for i in base_idx]).transpose()
        mat = _solve_matrix(base, image)
        if mat is None or abs(mat.det()) != 1:
            raise InconsistentPermutationError(
                f"permutation {perm} is not induced by a unimodular map"
            )
        for j, nu in enumerate(normals):
            if mat.apply(nu) != normals[perm[j]]:
                raise InconsistentPermutationError(
                    f"permutation {perm} inconsistent on normal {j + 1}"
                )
        mats.append(mat)
    return MatrixGroup.from_elements(n, mats)


def _solve_matrix(base: IntMat, image: IntMat) -> IntMat | None:
    """Integer matrix M with M @ base = image, if one exists."""
    n = base.nrows
    rows_out = []
    base_cols = [[Fraction(base.rows[i][j]) for j in range(n)] for i in range(n)]
    for r in range(n):
        rhs = [Fraction(image.rows[r][j]) for j in range(n)]
        solved = solve_rational_system(list(map(list, zip(*base_cols))), rhs)
        if solved is None:
            return None
        particular, kernel = solved
        if kernel or any(x.denominator != 1 for x in particular):
            return None
        rows_out.append(tuple(int(x) for x in particular))
    return IntMat.from_rows(rows_out)
