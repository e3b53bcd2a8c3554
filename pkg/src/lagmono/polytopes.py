"""Standard monotone polytopes used as fixtures and in the 2d classification.

Each constructor returns the monotone-normalized polytope (all offsets 1) of
the named toric manifold.
"""

from __future__ import annotations

from fractions import Fraction

from .toric import DelzantPolytope, Mode

ONE = Fraction(1)


def projective_space(n: int) -> DelzantPolytope:
    """Simplex for CP^n: normals e_1 .. e_n and -(1, .., 1)."""
    normals = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    normals.append(tuple(-1 for _ in range(n)))
    return DelzantPolytope(n, tuple(normals), (ONE,) * (n + 1))


def projective_product(factors: tuple[int, ...]) -> DelzantPolytope:
    """Product of projective spaces CP^{f_1} x .. x CP^{f_k}."""
    n = sum(factors)
    normals = []
    offset = 0
    for f in factors:
        for j in range(f):
            normals.append(tuple(1 if i == offset + j else 0 for i in range(n)))
        normals.append(tuple(-1 if offset <= i < offset + f else 0 for i in range(n)))
        offset += f
    return DelzantPolytope(n, tuple(normals), (ONE,) * len(normals))


def cube(n: int) -> DelzantPolytope:
    """[-1, 1]^n, the product of n spheres; normals interleaved (e_j, -e_j)."""
    normals = []
    for j in range(n):
        normals.append(tuple(1 if i == j else 0 for i in range(n)))
        normals.append(tuple(-1 if i == j else 0 for i in range(n)))
    return DelzantPolytope(n, tuple(normals), (ONE,) * (2 * n))


def orthant(n: int) -> DelzantPolytope:
    """Shifted positive orthant for affine n-space; needs vertex mode."""
    normals = tuple(tuple(1 if i == j else 0 for i in range(n)) for j in range(n))
    return DelzantPolytope(n, normals, (ONE,) * n, Mode.VERTEX_REQUIRED)


def blowup_cp2(k: int) -> DelzantPolytope:
    """Monotone blow-up of the projective plane at k = 1, 2 or 3 points."""
    base = [(0, 1), (-1, -1), (1, 0)]
    extra = {1: [(1, 1)], 2: [(-1, 0), (0, -1)], 3: [(1, 1), (-1, 0), (0, -1)]}
    if k not in extra:
        raise ValueError("monotone blow-ups exist for 1, 2 or 3 points")
    normals = tuple(base + extra[k])
    return DelzantPolytope(2, normals, (ONE,) * len(normals))


def line_times_sphere() -> DelzantPolytope:
    """C x CP^1: a half-open strip; needs vertex mode."""
    normals = ((1, 0), (0, 1), (0, -1))
    return DelzantPolytope(2, normals, (ONE, ONE, ONE), Mode.VERTEX_REQUIRED)


#: Fixture table used by the 2d classification and the CLI test corpus.
STANDARD_FIXTURES: dict[str, DelzantPolytope] = {
    "cp2": projective_space(2),
    "cp3": projective_space(3),
    "cp1xcp1": cube(2),
    "cp2xcp1": projective_product((2, 1)),
    "bl1cp2": blowup_cp2(1),
    "bl2cp2": blowup_cp2(2),
    "bl3cp2": blowup_cp2(3),
    "cxcp1": line_times_sphere(),
    "c2": orthant(2),
    "cube2": cube(2),
    "cube3": cube(3),
    "orthant2": orthant(2),
    "orthant3": orthant(3),
    "orthant4": orthant(4),
}
