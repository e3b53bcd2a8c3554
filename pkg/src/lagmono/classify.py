"""Finite monodromy classification: the 13 planar classes and the general filter.

In rank 2 the finite subgroups of GL(2, Z) fall into 13 conjugacy classes;
built-in representatives are classified by the admissibility filter and
tagged with toric realizability computed from the standard fixtures.  In
higher rank, catalogs of class representatives are ingested from files and
screened: groups moving a forced critical point are ruled out, and the
survivors are matched against products of symmetric groups or against
element-order feasibility one dimension down.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from .cyclotomic import euler_phi
from .errors import NonUnimodularError, NotFiniteError, ParseError, TooLargeError
from .groups import MatrixGroup, Perm, compose, identity_perm
from .intlat import IntMat, matrix_order, primitive_vector, rational_kernel_basis
from .monodromy import hamiltonian_monodromy, induced_matrix_group
from .polytopes import STANDARD_FIXTURES
from .torussym import TorsionPoint, admissible_group
from .toric import toric_fiber_data

ROT = {
    1: IntMat.identity(2),
    2: IntMat.from_rows([[-1, 0], [0, -1]]),
    3: IntMat.from_rows([[0, -1], [1, -1]]),
    4: IntMat.from_rows([[0, -1], [1, 0]]),
    6: IntMat.from_rows([[1, -1], [1, 0]]),
}
AXIS_REFLECTION = IntMat.from_rows([[1, 0], [0, -1]])
SWAP = IntMat.from_rows([[0, 1], [1, 0]])
EDGE_REFLECTION = IntMat.from_rows([[-1, 1], [0, 1]])

CLASS_NAMES_2D = ("1", "1f", "1t", "2", "2f", "2t", "3", "3f", "3t", "4", "4ft", "6", "6ft")


@dataclass(frozen=True)
class GroupCatalog:
    dim: int
    entries: tuple[tuple[str, MatrixGroup], ...]
    q_class: bool = False

    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.entries)

    def group(self, name: str) -> MatrixGroup:
        for entry_name, group in self.entries:
            if entry_name == name:
                return group
        raise KeyError(name)


def catalog_n2() -> GroupCatalog:
    """Built-in representatives of the 13 finite classes in GL(2, Z)."""
    gens = {
        "1": [],
        "1f": [AXIS_REFLECTION],
        "1t": [SWAP],
        "2": [ROT[2]],
        "2f": [ROT[2], AXIS_REFLECTION],
        "2t": [ROT[2], SWAP],
        "3": [ROT[3]],
        "3f": [ROT[3], SWAP],
        "3t": [ROT[3], EDGE_REFLECTION],
        "4": [ROT[4]],
        "4ft": [ROT[4], AXIS_REFLECTION],
        "6": [ROT[6]],
        "6ft": [ROT[6], SWAP],
    }
    entries = tuple(
        (name, MatrixGroup.from_generators(2, gens[name])) for name in CLASS_NAMES_2D
    )
    return GroupCatalog(2, entries)


def _reflection_eigenvectors(s: IntMat) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Primitive +1 and -1 eigenvectors of an orientation-reversing involution."""
    plus = rational_kernel_basis(
        [[Fraction(s.rows[i][j] - (1 if i == j else 0)) for j in range(2)] for i in range(2)], 2
    )
    minus = rational_kernel_basis(
        [[Fraction(s.rows[i][j] + (1 if i == j else 0)) for j in range(2)] for i in range(2)], 2
    )
    return primitive_vector(plus[0]), primitive_vector(minus[0])


def _reflection_eigenbasis_index(s: IntMat) -> int:
    """1 when the eigenvectors form a lattice basis, 2 for the index-2 case."""
    v_plus, v_minus = _reflection_eigenvectors(s)
    det = IntMat.from_rows([v_plus, v_minus]).det()
    assert abs(det) in (1, 2)
    return abs(det)


def _rotation_orbit_index(s: IntMat, r: IntMat) -> int:
    """Index of the sublattice spanned by the fixed vector and its rotation.

    For an order-3 rotation r this is 1 or 3 and separates the two dihedral
    classes of order 6; the eigenbasis index cannot, because every
    reflection normalising an order-3 rotation has eigenbasis index 2.
    """
    v_plus, _ = _reflection_eigenvectors(s)
    det = IntMat.from_rows([v_plus, r.apply(v_plus)]).det()
    assert abs(det) in (1, 3)
    return abs(det)


def identify_class_n2(group: MatrixGroup) -> str:
    """Conjugacy-class label of a finite subgroup of GL(2, Z).

    The rotation order plus presence of reflections narrows to at most two
    classes; reflections are then separated by the eigenbasis index for
    rotation orders 1 and 2 and by the rotation-orbit index for order 3,
    with the order 4 and 6 dihedral classes each being unique.
    """
    if group.dim != 2:
        raise ValueError("classification needs dimension 2")
    for g in group:
        if matrix_order(g, cap=24) is None:
            raise NotFiniteError(f"element {g} has order above the finite cap")
    rotations = [g for g in group if g.det() == 1]
    reflections = [g for g in group if g.det() == -1]
    m = len(rotations)
    if m not in (1, 2, 3, 4, 6):
        raise ValueError(f"unrecognised rotation subgroup of order {m}")
    if not reflections:
        return str(m)
    if len(reflections) != m:
        raise ValueError("reflections do not form a single coset")
    for s in reflections:
        prod = s @ s
        if not prod.is_identity():
            raise ValueError(f"orientation-reversing element {s} is not an involution")
    if m in (1, 2):
        indices = {_reflection_eigenbasis_index(s) for s in reflections}
        if len(indices) != 1:
            raise ValueError("inconsistent reflection types")
        return f"{m}f" if indices == {1} else f"{m}t"
    if m == 3:
        rot = next(g for g in rotations if not g.is_identity())
        indices = {_rotation_orbit_index(s, rot) for s in reflections}
        if len(indices) != 1:
            raise ValueError("inconsistent reflection types")
        return "3f" if indices == {1} else "3t"
    if m == 4:
        assert {_reflection_eigenbasis_index(s) for s in reflections} == {1, 2}
        return "4ft"
    assert {_reflection_eigenbasis_index(s) for s in reflections} == {2}
    return "6ft"


TORIC_REALIZATIONS = {
    "bl2cp2": "1",
    "bl3cp2": "1",
    "cxcp1": "1f",
    "bl1cp2": "1t",
    "c2": "1t",
    "cp1xcp1": "2f",
    "cp2": "3f",
}


@dataclass(frozen=True)
class ClassVerdict2D:
    name: str
    admissible: bool
    witness: tuple[IntMat, TorsionPoint] | None
    toric_tag: Literal["IMPOSSIBLE", "TORIC_REALIZED", "TORIC_IMPOSSIBLE"]
    realized_by: tuple[str, ...] = ()


def toric_realized_labels() -> dict[str, tuple[str, ...]]:
    """Labels realized by the standard fixtures, computed from scratch."""
    realized: dict[str, list[str]] = {}
    for name in sorted(TORIC_REALIZATIONS):
        data = toric_fiber_data(STANDARD_FIXTURES[name])
        mats = induced_matrix_group(data, hamiltonian_monodromy(data))
        label = identify_class_n2(mats)
        realized.setdefault(label, []).append(name)
    return {label: tuple(names) for label, names in realized.items()}


def classify_n2() -> tuple[ClassVerdict2D, ...]:
    """Admissibility verdicts and toric tags for all 13 planar classes."""
    realized = toric_realized_labels()
    out = []
    for name, group in catalog_n2().entries:
        ok, witness = admissible_group(group)
        if not ok:
            tag = "IMPOSSIBLE"
        elif name in realized:
            tag = "TORIC_REALIZED"
        else:
            tag = "TORIC_IMPOSSIBLE"
        out.append(ClassVerdict2D(name, ok, witness, tag, realized.get(name, ())))
    return tuple(out)


# ---------------------------------------------------------------------------
# Catalog ingestion


def ingest_catalog(text: str, cap: int = 10_000) -> GroupCatalog:
    """Parse a group catalog: blocks of 'group <name>' / 'dim <n>' / 'gen' rows.

    Generators are closed and verified finite and unimodular; duplicate
    names are rejected.  An optional leading 'classes z|q' line records
    whether the representatives are integral or only rational classes.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((lineno, stripped))
    q_class = False
    i = 0
    if i < len(lines) and lines[i][1].startswith("classes"):
        parts = lines[i][1].split()
        if len(parts) != 2 or parts[1] not in ("z", "q"):
            raise ParseError(f"line {lines[i][0]}: expected 'classes z|q'")
        q_class = parts[1] == "q"
        i += 1
    entries: list[tuple[str, MatrixGroup]] = []
    seen = set()
    dim_overall: int | None = None
    while i < len(lines):
        lineno, header = lines[i]
        parts = header.split()
        if len(parts) != 2 or parts[0] != "group":
            raise ParseError(f"line {lineno}: expected 'group <name>'")
        name = parts[1]
        if name in seen:
            raise ParseError(f"line {lineno}: duplicate group name {name!r}")
        seen.add(name)
        i += 1
        if i >= len(lines):
            raise ParseError(f"line {lineno}: group {name!r} missing dim")
        dim_lineno, dim_line = lines[i]
        parts = dim_line.split()
        if len(parts) != 2 or parts[0] != "dim":
            raise ParseError(f"line {dim_lineno}: expected 'dim <n>'")
        try:
            dim = int(parts[1])
        except ValueError as exc:
            raise ParseError(f"line {dim_lineno}: bad dimension") from exc
        if dim_overall is None:
            dim_overall = dim
        elif dim != dim_overall:
            raise ParseError(f"line {dim_lineno}: group {name!r} has mismatched dimension")
        i += 1
        gens = []
        while i < len(lines) and lines[i][1] == "gen":
            gen_lineno = lines[i][0]
            if len(lines) - (i + 1) < dim:
                raise ParseError(f"line {gen_lineno}: generator needs {dim} rows")
            rows = []
            for k in range(dim):
                row_lineno, row_line = lines[i + 1 + k]
                fields = row_line.split()
                if len(fields) != dim:
                    raise ParseError(f"line {row_lineno}: expected {dim} integers")
                try:
                    rows.append(tuple(int(x) for x in fields))
                except ValueError as exc:
                    raise ParseError(f"line {row_lineno}: bad integer entry") from exc
            gens.append(IntMat.from_rows(rows))
            i += 1 + dim
        try:
            group = MatrixGroup.from_generators(dim, gens, cap=cap)
        except NonUnimodularError as exc:
            raise NonUnimodularError(f"group {name!r}: {exc}") from exc
        except NotFiniteError as exc:
            raise NotFiniteError(f"group {name!r}: {exc}") from exc
        entries.append((name, group))
    if dim_overall is None:
        return GroupCatalog(0, (), q_class)
    return GroupCatalog(dim_overall, tuple(entries), q_class)


# ---------------------------------------------------------------------------
# Conjecture filter


@dataclass(frozen=True)
class ConjectureVerdict:
    name: str
    status: Literal["RULED_OUT", "CASE1_NECESSARY", "CASE2", "BOTH", "UNKNOWN"]
    witness: tuple[IntMat, TorsionPoint] | None = None
    parts: tuple[int, ...] | None = None
    embedding: tuple[tuple[IntMat, tuple[Perm, ...]], ...] | None = None


def _symmetric_part_choices(n: int) -> list[tuple[int, ...]]:
    """Multisets n_1 >= .. >= n_k >= 2 with sum (n_j - 1) = n."""
    out: list[tuple[int, ...]] = []

    def build(remaining: int, maximum: int, acc: list[int]):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(min(maximum, remaining + 1), 1, -1):
            build(remaining - (part - 1), part, acc + [part])

    build(n, n + 1, [])
    return out


def embed_symmetric_product(
    group: MatrixGroup, parts: Sequence[int], cap: int = 2000
) -> tuple[tuple[IntMat, tuple[Perm, ...]], ...] | None:
    """Verified injective homomorphism into a product of symmetric groups.

    Generator images are searched by backtracking over order-matched
    candidates; any complete assignment is expanded through words and then
    re-verified on the full multiplication table before being returned.
    """
    if group.order > cap:
        raise TooLargeError(f"group order {group.order} exceeds cap {cap}")
    parts = tuple(parts)
    product_elements = list(
        itertools.product(*[itertools.permutations(range(p)) for p in parts])
    )
    ident_target = tuple(identity_perm(p) for p in parts)

    def target_mul(x, y):
        return tuple(compose(a, b) for a, b in zip(x, y))

    def target_order(x):
        k = 1
        acc = x
        while acc != ident_target:
            acc = target_mul(acc, x)
            k += 1
        return k

    orders_available: dict[int, list] = {}
    for x in product_elements:
        orders_available.setdefault(target_order(x), []).append(x)

    gens = group.generators()
    if not gens:
        return ((IntMat.identity(group.dim), ident_target),)
    gen_orders = [matrix_order(g, cap=group.order + 1) for g in gens]
    candidate_lists = []
    for order in gen_orders:
        candidates = orders_available.get(order, [])
        if not candidates:
            return None
        candidate_lists.append(candidates)

    # Express every group element as a word in the generators once.
    words: dict[IntMat, tuple[int, ...]] = {IntMat.identity(group.dim): ()}
    frontier = [IntMat.identity(group.dim)]
    while frontier:
        nxt = []
        for g in frontier:
            for idx, gen in enumerate(gens):
                h = g @ gen
                if h not in words:
                    words[h] = words[g] + (idx,)
                    nxt.append(h)
        frontier = nxt
    assert len(words) == group.order

    elements = list(group.elements)

    def check(assignment) -> tuple[tuple[IntMat, tuple[Perm, ...]], ...] | None:
        image = {}
        for g in elements:
            acc = ident_target
            for idx in words[g]:
                acc = target_mul(acc, assignment[idx])
            image[g] = acc
        if len(set(image.values())) != group.order:
            return None
        for a in elements:
            for b in elements:
                if target_mul(image[a], image[b]) != image[a @ b]:
                    return None
        return tuple((g, image[g]) for g in elements)

    for assignment in itertools.product(*candidate_lists):
        verified = check(assignment)
        if verified is not None:
            return verified
    return None


def gl_order_feasible(m: int, k: int) -> bool:
    """Does some finite-order element of GL(k, Z) have order exactly m?

    An order-m element exists exactly when m is the least common multiple of
    conductors d_i whose cyclotomic degrees phi(d_i) fit in k columns, since
    companion blocks realise any such multiset.
    """
    if m < 1 or k < 0:
        raise ValueError("order and dimension must be nonnegative")
    if m == 1:
        return True
    if k == 0:
        return False
    divs = [d for d in range(1, m + 1) if m % d == 0]
    best: dict[int, int] = {1: 0}
    changed = True
    while changed:
        changed = False
        for lcm_now, cost in list(best.items()):
            for d in divs:
                new_lcm = math.lcm(lcm_now, d)
                new_cost = cost + euler_phi(d)
                if new_cost <= k and new_cost < best.get(new_lcm, k + 1):
                    best[new_lcm] = new_cost
                    changed = True
    return m in best


def conjecture_filter(catalog: GroupCatalog, embed_cap: int = 2000) -> tuple[ConjectureVerdict, ...]:
    """Screen each catalog group against the two structural cases.

    Groups moving a forced critical point are ruled out.  Otherwise the
    group is matched against every product of symmetric groups with
    sum (n_j - 1) = n (an exhaustive verified embedding search) and against
    the necessary element-order condition for sitting inside GL(n-1, Z).
    """
    out = []
    for name, group in catalog.entries:
        ok, witness = admissible_group(group)
        if not ok:
            out.append(ConjectureVerdict(name, "RULED_OUT", witness=witness))
            continue
        n = catalog.dim
        case2 = None
        case2_parts = None
        for parts in _symmetric_part_choices(n):
            embedding = embed_symmetric_product(group, parts, cap=embed_cap)
            if embedding is not None:
                case2 = embedding
                case2_parts = parts
                break
        orders = sorted({matrix_order(g, cap=group.order + 1) for g in group})
        case1 = all(gl_order_feasible(order, n - 1) for order in orders)
        if case1 and case2 is not None:
            status = "BOTH"
        elif case2 is not None:
            status = "CASE2"
        elif case1:
            status = "CASE1_NECESSARY"
        else:
            status = "UNKNOWN"
        out.append(
            ConjectureVerdict(name, status, parts=case2_parts, embedding=case2)
        )
    return tuple(out)
