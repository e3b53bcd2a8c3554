"""Delzant polytopes, the monotone fibre, and its combinatorial invariants.

A polytope is the set of x with <x, nu_j> >= -lambda_j for primitive integer
normals nu_j and rational offsets lambda_j.  Validation enumerates vertices
exactly over Q and checks simplicity, smoothness, non-redundancy and the
mode-specific condition (compactness, or existence of a vertex).  The
monotone fibre sits over the point where all offsets agree; its data are the
relation lattice of the normals and the potential summing one monomial per
facet.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .errors import NotMonotoneError, ParseError
from .intlat import (
    IntMat,
    LatticeBasis,
    dot,
    kernel_lattice,
    primitive_vector,
    rational_kernel_basis,
    rational_rank,
    solve_rational_system,
    vec_gcd,
)
from .laurent import LaurentPolynomial


class Mode(Enum):
    COMPACT = "compact"
    VERTEX_REQUIRED = "vertex"


@dataclass(frozen=True)
class DelzantPolytope:
    dim: int
    normals: tuple[tuple[int, ...], ...]
    offsets: tuple[Fraction, ...]
    mode: Mode = Mode.COMPACT

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        normals = tuple(tuple(int(x) for x in nu) for nu in self.normals)
        offsets = tuple(Fraction(o) for o in self.offsets)
        if any(len(nu) != self.dim for nu in normals):
            raise ValueError("normal length differs from dimension")
        if len(normals) != len(offsets):
            raise ValueError("need one offset per facet normal")
        object.__setattr__(self, "normals", normals)
        object.__setattr__(self, "offsets", offsets)

    @property
    def nfacets(self) -> int:
        return len(self.normals)

    def normal_matrix(self) -> IntMat:
        """Facet normals as rows, one row per facet."""
        return IntMat.from_rows(self.normals)


@dataclass(frozen=True)
class Vertex:
    point: tuple[Fraction, ...]
    active: tuple[int, ...]  # facet indices achieving equality


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    failure: str | None = None
    witness: str | None = None
    vertices: tuple[Vertex, ...] = ()
    warnings: tuple[str, ...] = ()

    def __str__(self) -> str:
        if self.ok:
            text = "PASS"
        else:
            text = f"FAIL {self.failure}: {self.witness}"
        for w in self.warnings:
            text += f" [warning: {w}]"
        return text


def _enumerate_vertices(p: DelzantPolytope) -> list[Vertex]:
    """All vertices as exact rational points with their active facet sets."""
    n, N = p.dim, p.nfacets
    points: dict[tuple[Fraction, ...], None] = {}
    for subset in itertools.combinations(range(N), n):
        rows = [list(p.normals[j]) for j in subset]
        rhs = [-p.offsets[j] for j in subset]
        if rational_rank(rows) < n:
            continue
        solved = solve_rational_system(rows, rhs)
        if solved is None:
            continue
        point, kernel = solved
        if kernel:
            continue
        if all(dot(point, p.normals[j]) >= -p.offsets[j] for j in range(N)):
            points.setdefault(tuple(point), None)
    out = []
    for point in sorted(points):
        active = tuple(
            j for j in range(N) if dot(point, p.normals[j]) == -p.offsets[j]
        )
        out.append(Vertex(point, active))
    return out


def _recession_ray(p: DelzantPolytope) -> tuple[int, ...] | None:
    """A nonzero integer direction staying inside the polytope, if one exists."""
    n, N = p.dim, p.nfacets
    rows = [list(nu) for nu in p.normals]
    if rational_rank(rows) < n:
        kernel = rational_kernel_basis(rows, n)
        return primitive_vector(kernel[0])
    # The recession cone is pointed; it is nonzero exactly when it has an
    # extreme ray, spanned by the kernel of some n-1 independent normals.
    for subset in itertools.combinations(range(N), n - 1):
        sub = [list(p.normals[j]) for j in subset]
        if rational_rank(sub) != n - 1:
            continue
        kernel = rational_kernel_basis(sub, n)
        direction = primitive_vector(kernel[0])
        for candidate in (direction, tuple(-x for x in direction)):
            if all(dot(candidate, nu) >= 0 for nu in p.normals):
                return candidate
    return None


def validate_delzant(p: DelzantPolytope) -> ValidationReport:
    """Check the smooth-polytope conditions, reporting the first failure."""
    warnings = ()
    if p.mode is Mode.VERTEX_REQUIRED:
        warnings = ("UNCHECKED_TOPOLOGY: vertex mode only checks for a vertex",)

    for j, nu in enumerate(p.normals):
        if all(x == 0 for x in nu) or vec_gcd(nu) != 1:
            return ValidationReport(
                False, "NON_PRIMITIVE_NORMAL", f"facet {j + 1} normal {nu}", warnings=warnings
            )
    if len(set(p.normals)) != p.nfacets:
        return ValidationReport(False, "DUPLICATE_NORMAL", "repeated facet normal", warnings=warnings)
    if p.nfacets < p.dim:
        return ValidationReport(
            False, "TOO_FEW_FACETS", f"{p.nfacets} facets in dimension {p.dim}", warnings=warnings
        )

    vertices = tuple(_enumerate_vertices(p))
    if not vertices:
        code = "NOT_COMPACT" if p.mode is Mode.COMPACT else "NO_VERTEX"
        return ValidationReport(False, code, "no vertex found", warnings=warnings)

    for v in vertices:
        if len(v.active) != p.dim:
            return ValidationReport(
                False,
                "VERTEX_SIMPLICITY",
                f"vertex {_fmt_point(v.point)} lies on facets {[j + 1 for j in v.active]}",
                vertices=vertices,
                warnings=warnings,
            )
    for v in vertices:
        det = IntMat.from_rows([p.normals[j] for j in v.active]).det()
        if abs(det) != 1:
            return ValidationReport(
                False,
                "VERTEX_SMOOTHNESS",
                f"vertex {_fmt_point(v.point)} has normal determinant {det}",
                vertices=vertices,
                warnings=warnings,
            )
    touched = set(itertools.chain.from_iterable(v.active for v in vertices))
    for j in range(p.nfacets):
        if j not in touched:
            return ValidationReport(
                False,
                "REDUNDANT_FACET",
                f"facet {j + 1} supports no vertex",
                vertices=vertices,
                warnings=warnings,
            )
    if p.mode is Mode.COMPACT:
        ray = _recession_ray(p)
        if ray is not None:
            return ValidationReport(
                False,
                "NOT_COMPACT",
                f"unbounded along direction {ray}",
                vertices=vertices,
                warnings=warnings,
            )
    return ValidationReport(True, vertices=vertices, warnings=warnings)


def monotone_normalize(p: DelzantPolytope) -> DelzantPolytope:
    """Translate so the point with all facet offsets equal sits at the origin.

    Solves <q, nu_j> + lambda_j = c exactly over Q; the translated polytope
    has every offset equal to c > 0.  Raises NotMonotoneError when no
    interior such point exists.
    """
    n, N = p.dim, p.nfacets
    nu1 = p.normals[0]
    rows = [[Fraction(a - b) for a, b in zip(p.normals[j], nu1)] for j in range(1, N)]
    rhs = [p.offsets[0] - p.offsets[j] for j in range(1, N)]
    if rows:
        solved = solve_rational_system(rows, rhs)
    else:
        solved = ([Fraction(0)] * n, [[Fraction(1) if i == j else Fraction(0) for i in range(n)] for j in range(n)])
    if solved is None:
        raise NotMonotoneError("facet offsets cannot be equalised by translation")
    q, kernel = solved

    def level(point):
        return p.offsets[0] + dot(point, nu1)

    c = level(q)
    if c <= 0:
        for direction in kernel:
            slope = dot(direction, nu1)
            if slope != 0:
                t = (1 - c) / slope
                q = [a + t * b for a, b in zip(q, direction)]
                c = Fraction(1)
                break
        else:
            raise NotMonotoneError("offset-equalising locus misses the interior")
    new_offsets = tuple(p.offsets[j] + dot(q, p.normals[j]) for j in range(N))
    assert all(o == c for o in new_offsets)
    return DelzantPolytope(p.dim, p.normals, new_offsets, p.mode)


@dataclass(frozen=True)
class ToricFiberData:
    """Combinatorial data of the monotone fibre.

    relations is the saturated lattice of integer relations among the facet
    normals; the potential has one unit monomial per facet normal.
    """

    polytope: DelzantPolytope
    relations: LatticeBasis
    potential: LaurentPolynomial


def toric_fiber_data(p: DelzantPolytope) -> ToricFiberData:
    offsets = set(p.offsets)
    if len(offsets) != 1 or next(iter(offsets)) <= 0:
        raise NotMonotoneError("polytope is not monotone-normalized")
    relations = kernel_lattice(p.normal_matrix())
    potential = LaurentPolynomial.from_dict(p.dim, {nu: 1 for nu in p.normals})
    return ToricFiberData(p, relations, potential)


# ---------------------------------------------------------------------------
# Text format


def parse_polytope(text: str, mode_override: Mode | None = None) -> DelzantPolytope:
    """Parse the polytope text format.

    Line 1 ``dim <n>``, line 2 ``mode compact|vertex``, then one
    ``facet <nu_1> .. <nu_n> <offset>`` line per facet with the offset a
    rational ``p/q`` or integer.  ``#`` starts a comment.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((lineno, stripped))
    if len(lines) < 2:
        raise ParseError("polytope file needs dim and mode lines")
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "dim":
        raise ParseError(f"line {lineno}: expected 'dim <n>'")
    try:
        dim = int(parts[1])
    except ValueError as exc:
        raise ParseError(f"line {lineno}: bad dimension {parts[1]!r}") from exc
    lineno, modeline = lines[1]
    parts = modeline.split()
    if len(parts) != 2 or parts[0] != "mode" or parts[1] not in ("compact", "vertex"):
        raise ParseError(f"line {lineno}: expected 'mode compact|vertex'")
    mode = Mode.COMPACT if parts[1] == "compact" else Mode.VERTEX_REQUIRED
    if mode_override is not None:
        mode = mode_override
    normals = []
    offsets = []
    for lineno, line in lines[2:]:
        fields = line.split()
        if fields[0] != "facet":
            raise ParseError(f"line {lineno}: expected 'facet', got {fields[0]!r}")
        if len(fields) != dim + 2:
            raise ParseError(f"line {lineno}: expected {dim} normal entries and an offset")
        try:
            normals.append(tuple(int(x) for x in fields[1 : 1 + dim]))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: bad normal entry") from exc
        try:
            offsets.append(Fraction(fields[-1]))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"line {lineno}: bad offset {fields[-1]!r}") from exc
    if not normals:
        raise ParseError("polytope file lists no facets")
    try:
        return DelzantPolytope(dim, tuple(normals), tuple(offsets), mode)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_polytope(p: DelzantPolytope) -> str:
    lines = [f"dim {p.dim}", f"mode {p.mode.value}"]
    for nu, off in zip(p.normals, p.offsets):
        lines.append("facet " + " ".join(str(x) for x in nu) + f" {off}")
    return "\n".join(lines) + "\n"


def _fmt_point(point: Sequence[Fraction]) -> str:
    return "(" + ", ".join(str(x) for x in point) + ")"
