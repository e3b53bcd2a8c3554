"""Rank-2 Clifford algebras over cyclotomic integers and their obstructions.

The self-Floer cohomology of a monotone 2-torus at a critical local system is
a Clifford algebra on two odd generators u, v with u^2 = lam, uv + vu = mu,
v^2 = nu, where (lam, mu, nu) is -1/2 times the Hessian of the potential.
Conjugation by an integrally invertible continuation element realises each
monodromy action; solvability of those conjugation equations over Z[zeta]
yields divisibility obstructions, derived here directly from the product
rather than transcribed equation by equation.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .cyclotomic import CyclotomicNumber, cyclotomic_polynomial
from .errors import (
    BadDiscriminantError,
    NotCriticalError,
    NotInvariantError,
    NotUnivariateError,
    UnsupportedActionError,
)
from .intlat import IntMat
from .laurent import LaurentPolynomial, gradient_hessian, invariance_check, is_critical
from .torussym import TorsionPoint

Cyc = CyclotomicNumber
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class CliffordData:
    """Structure constants u^2 = lam, uv + vu = mu, v^2 = nu."""

    lam: Cyc
    mu: Cyc
    nu: Cyc
    half_integral: bool = False

    @classmethod
    def from_integers(cls, lam: int, mu: int, nu: int) -> "CliffordData":
        return cls(Cyc.from_rational(lam), Cyc.from_rational(mu), Cyc.from_rational(nu))

    def constants(self) -> tuple[Cyc, Cyc, Cyc]:
        return (self.lam, self.mu, self.nu)


@dataclass(frozen=True)
class CliffordElement:
    """a0 + au u + av v + auv uv in a fixed CliffordData."""

    a0: Cyc
    au: Cyc
    av: Cyc
    auv: Cyc

    @classmethod
    def scalar(cls, value: Cyc | int) -> "CliffordElement":
        return cls(_cyc(value), _zero(), _zero(), _zero())

    @classmethod
    def even(cls, p: Cyc | int, q: Cyc | int) -> "CliffordElement":
        return cls(_cyc(p), _zero(), _zero(), _cyc(q))

    @classmethod
    def odd(cls, s: Cyc | int, t: Cyc | int) -> "CliffordElement":
        return cls(_zero(), _cyc(s), _cyc(t), _zero())

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in (self.a0, self.au, self.av, self.auv))

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in (self.a0, self.au, self.av, self.auv))

    def __add__(self, other: "CliffordElement") -> "CliffordElement":
        return CliffordElement(
            self.a0 + other.a0, self.au + other.au, self.av + other.av, self.auv + other.auv
        )

    def __sub__(self, other: "CliffordElement") -> "CliffordElement":
        return CliffordElement(
            self.a0 - other.a0, self.au - other.au, self.av - other.av, self.auv - other.auv
        )

    def scale(self, c: Cyc | int) -> "CliffordElement":
        c = _cyc(c)
        return CliffordElement(self.a0 * c, self.au * c, self.av * c, self.auv * c)

    def __str__(self) -> str:
        parts = []
        for coeff, name in ((self.a0, "1"), (self.au, "u"), (self.av, "v"), (self.auv, "uv")):
            if not coeff.is_zero():
                parts.append(f"({coeff})*{name}" if name != "1" else f"({coeff})")
        return " + ".join(parts) if parts else "0"


def _cyc(x) -> Cyc:
    return x if isinstance(x, Cyc) else Cyc.from_rational(x)


def _zero() -> Cyc:
    return Cyc.zero()


def clifford_mul(a: CliffordElement, b: CliffordElement, d: CliffordData) -> CliffordElement:
    """Product reduced to the basis 1, u, v, uv via vu = mu - uv."""
    lam, mu, nu = d.lam, d.mu, d.nu
    c0 = (
        a.a0 * b.a0
        + lam * a.au * b.au
        + mu * a.av * b.au
        + nu * a.av * b.av
        - lam * nu * a.auv * b.auv
    )
    cu = a.a0 * b.au + a.au * b.a0 + mu * a.auv * b.au - nu * a.av * b.auv + nu * a.auv * b.av
    cv = a.a0 * b.av + a.av * b.a0 + lam * a.au * b.auv + mu * a.av * b.auv - lam * a.auv * b.au
    cuv = a.a0 * b.auv + a.auv * b.a0 + a.au * b.av - a.av * b.au + mu * a.auv * b.auv
    return CliffordElement(c0, cu, cv, cuv)


def clifford_constants(w: LaurentPolynomial, p: TorsionPoint) -> CliffordData:
    """-1/2 times the Hessian of w at a critical torsion point.

    Values may leave the cyclotomic integers when mixed second partials are
    odd; that is reported through the half_integral flag, not rejected.
    """
    if w.dim != 2:
        raise ValueError("Clifford constants need a two-variable potential")
    if not is_critical(w, p):
        raise NotCriticalError(f"{p} is not a critical point")
    _, hess = gradient_hessian(w, p)
    lam = hess[0][0] * Fraction(-1, 2)
    mu = -hess[0][1]
    nu = hess[1][1] * Fraction(-1, 2)
    half = not (lam.is_integral() and mu.is_integral() and nu.is_integral())
    return CliffordData(lam, mu, nu, half_integral=half)


# ---------------------------------------------------------------------------
# Continuation elements


@dataclass(frozen=True)
class ContinuationResult:
    status: Literal["solvable", "unsolvable", "unknown"]
    witness: CliffordElement | None = None


def _action_images(action: IntMat) -> tuple[int, int, int]:
    """Split an upper-triangular unimodular action into (eps1, m, eps2)."""
    if action.nrows != 2 or action.ncols != 2:
        raise UnsupportedActionError("action must be a 2x2 matrix")
    (a, m), (c, e) = action.rows
    if c != 0 or a not in (1, -1) or e not in (1, -1):
        raise UnsupportedActionError(
            f"action {action} is not upper-triangular with unit diagonal"
        )
    return a, m, e


def _conjugation_residuals(
    c: CliffordElement, d: CliffordData, action: IntMat, parity: str
) -> list[CliffordElement]:
    """c a - sign(action(a)) c for a = u, v; zero exactly for continuation elements."""
    eps1, m, eps2 = _action_images(action)
    sign = -1 if parity == "odd" else 1
    u = CliffordElement.odd(1, 0)
    v = CliffordElement.odd(0, 1)
    action_u = CliffordElement.odd(eps1, m).scale(sign)
    action_v = CliffordElement.odd(0, eps2).scale(sign)
    return [
        clifford_mul(c, u, d) - clifford_mul(action_u, c, d),
        clifford_mul(c, v, d) - clifford_mul(action_v, c, d),
    ]


def _parity_norm(c: CliffordElement, d: CliffordData, parity: str) -> Cyc | None:
    """Scalar whose unit-ness decides integral invertibility, if c is scalar-square."""
    if parity == "odd":
        square = clifford_mul(c, c, d)
        if not (square.au.is_zero() and square.av.is_zero() and square.auv.is_zero()):
            return None
        return square.a0
    conj = CliffordElement.even(c.a0 + d.mu * c.auv, _zero() - c.auv)
    prod = clifford_mul(c, conj, d)
    assert prod.au.is_zero() and prod.av.is_zero() and prod.auv.is_zero()
    return prod.a0


def _solution_space(
    d: CliffordData, action: IntMat, parity: str
) -> list[tuple[Cyc, Cyc]]:
    """Basis over Q(zeta) of the parity-homogeneous conjugation solutions."""
    basis = (
        [CliffordElement.odd(1, 0), CliffordElement.odd(0, 1)]
        if parity == "odd"
        else [CliffordElement.even(1, 0), CliffordElement.even(0, 1)]
    )
    cols = []
    for e in basis:
        residuals = _conjugation_residuals(e, d, action, parity)
        cols.append(
            [r for res in residuals for r in (res.a0, res.au, res.av, res.auv)]
        )
    # Solve x1 * cols[0] + x2 * cols[1] = 0 over the cyclotomic field.
    rows = list(zip(*cols))
    pivots: list[tuple[int, int]] = []
    work = [list(r) for r in rows]
    col_used: list[int] = []
    for col in range(2):
        pivot_row = next(
            (i for i, r in enumerate(work) if not r[col].is_zero() and i not in [p[0] for p in pivots]),
            None,
        )
        if pivot_row is None:
            continue
        inv = work[pivot_row][col].inverse()
        work[pivot_row] = [x * inv for x in work[pivot_row]]
        for i in range(len(work)):
            if i != pivot_row and not work[i][col].is_zero():
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[pivot_row])]
        pivots.append((pivot_row, col))
        col_used.append(col)
    free_cols = [c for c in range(2) if c not in col_used]
    out = []
    zero = Cyc.zero()
    one = Cyc.one()
    for fc in free_cols:
        vec = [zero, zero]
        vec[fc] = one
        for prow, pcol in pivots:
            vec[pcol] = -work[prow][fc]
        out.append((vec[0], vec[1]))
    return out


def _element_from_pair(pair: tuple[Cyc, Cyc], parity: str) -> CliffordElement:
    if parity == "odd":
        return CliffordElement.odd(pair[0], pair[1])
    return CliffordElement.even(pair[0], pair[1])


def continuation_solvable(
    d: CliffordData,
    action: IntMat,
    parity: Literal["even", "odd"],
    conductor: int,
    search_height: int = 50,
) -> ContinuationResult:
    """Decide existence of an integral continuation element for the action.

    The element c must be parity-homogeneous with coefficients in the
    cyclotomic integers of the given conductor, invertible with integral
    inverse, and satisfy c a = (-1)^parity action(a) c for a = u, v.  The
    relations are built from the Clifford product itself.  Divisibility
    closed forms decide the upper-triangular integer cases; otherwise a
    bounded search over rational-integer coefficient pairs either produces a
    verified witness or the result is reported unknown.
    """
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    eps1, m, eps2 = _action_images(action)
    for value in d.constants():
        if conductor % value.conductor != 0:
            raise ValueError(
                f"constants live in conductor {value.conductor}, not {conductor}"
            )

    mu_nu_zero = d.mu.is_zero() and d.nu.is_zero()
    lam_int = d.lam.is_rational() and d.lam.coeffs[0].denominator == 1
    if mu_nu_zero and lam_int:
        lam = int(d.lam.coeffs[0])
        if parity == "even" and eps1 == 1 and eps2 == 1:
            return _shear_closed_form(d, action, lam, m)
        if parity == "odd" and eps1 == -1 and eps2 == 1:
            return _reflection_closed_form(d, action, lam, m)

    solutions = _solution_space(d, action, parity)
    if not solutions:
        return ContinuationResult("unsolvable")
    # If the parity norm vanishes identically on the solution space no
    # invertible element exists at all.
    norms = []
    probes = [s for s in solutions]
    if len(solutions) == 2:
        probes.append((solutions[0][0] + solutions[1][0], solutions[0][1] + solutions[1][1]))
    for pair in probes:
        n = _parity_norm(_element_from_pair(pair, parity), d, parity)
        norms.append(n)
    if all(n is not None and n.is_zero() for n in norms):
        return ContinuationResult("unsolvable")
    found = _bounded_search(d, action, parity, conductor, search_height)
    if found is not None:
        return ContinuationResult("solvable", found)
    return ContinuationResult("unknown")


def _verify_witness(
    c: CliffordElement, d: CliffordData, action: IntMat, parity: str
) -> bool:
    if not c.is_integral():
        return False
    residuals = _conjugation_residuals(c, d, action, parity)
    if not all(r.is_zero() for r in residuals):
        return False
    norm = _parity_norm(c, d, parity)
    return norm is not None and norm.is_integral_unit()


def _shear_closed_form(d: CliffordData, action: IntMat, lam: int, m: int) -> ContinuationResult:
    # Even c = p + q uv with p a unit and m p = -2 q lam; integrality over
    # any cyclotomic ring pins m to a multiple of 2 lam by coordinatewise
    # divisibility on the power basis.
    if lam == 0:
        if m == 0:
            c = CliffordElement.even(1, 0)
            assert _verify_witness(c, d, action, "even")
            return ContinuationResult("solvable", c)
        return ContinuationResult("unsolvable")
    if m % (2 * lam) == 0:
        c = CliffordElement.even(1, -(m // (2 * lam)))
        assert _verify_witness(c, d, action, "even")
        return ContinuationResult("solvable", c)
    return ContinuationResult("unsolvable")


def _reflection_closed_form(d: CliffordData, action: IntMat, lam: int, m: int) -> ContinuationResult:
    # Odd c = s u + t v with c^2 = lam s^2 a unit, forcing lam = +-1, and
    # m s = -2 t, forcing m even.
    if lam in (1, -1) and m % 2 == 0:
        c = CliffordElement.odd(1, -(m // 2))
        assert _verify_witness(c, d, action, "odd")
        return ContinuationResult("solvable", c)
    return ContinuationResult("unsolvable")


def _bounded_search(
    d: CliffordData, action: IntMat, parity: str, conductor: int, height: int
) -> CliffordElement | None:
    """Search rational-integer coefficient pairs by increasing height.

    The conjugation equations are linear in the pair, so residual columns of
    the two basis elements are computed once and each candidate is screened
    by an integer combination before the full invertibility check.
    """
    basis = (
        [CliffordElement.odd(1, 0), CliffordElement.odd(0, 1)]
        if parity == "odd"
        else [CliffordElement.even(1, 0), CliffordElement.even(0, 1)]
    )
    cols = []
    for e in basis:
        residuals = _conjugation_residuals(e, d, action, parity)
        cols.append([r for res in residuals for r in (res.a0, res.au, res.av, res.auv)])
    for h in range(0, height + 1):
        ring = range(-h, h + 1)
        for x1 in ring:
            for x2 in ring:
                if max(abs(x1), abs(x2)) != h or (x1 == 0 and x2 == 0):
                    continue
                if any(not (a * x1 + b * x2).is_zero() for a, b in zip(cols[0], cols[1])):
                    continue
                c = _element_from_pair(
                    (Cyc.from_rational(x1), Cyc.from_rational(x2)), parity
                )
                norm = _parity_norm(c, d, parity)
                if norm is not None and norm.is_integral_unit() and c.is_integral():
                    return c
    return None


# ---------------------------------------------------------------------------
# Cyclotomic divisibility


def cyclo_multiple_member(m: int, k: int, d: int) -> bool:
    """Is the rational integer m a member of k Z[zeta_d]?

    Decided on the power basis: Z[zeta_d] is a free Z-module on
    1, zeta, .., zeta^(phi(d)-1), so membership is coordinatewise
    divisibility of m's representation by k.
    """
    if k < 1 or d < 1:
        raise ValueError("k and d must be positive")
    coords = Cyc.from_rational(m).promoted_coeffs(d)
    return all(c.denominator == 1 and c.numerator % k == 0 for c in coords)


# ---------------------------------------------------------------------------
# Binary quadratic forms


@dataclass(frozen=True)
class BinaryForm:
    """Symmetric matrix [[lam, mu2], [mu2, nu]] with integer entries."""

    lam: int
    mu2: int
    nu: int

    def matrix(self) -> IntMat:
        return IntMat.from_rows([[self.lam, self.mu2], [self.mu2, self.nu]])

    def discriminant(self) -> int:
        return self.mu2 * self.mu2 - self.lam * self.nu

    def transform(self, u: IntMat) -> "BinaryForm":
        m = u.transpose() @ self.matrix() @ u
        return BinaryForm(m.rows[0][0], m.rows[0][1], m.rows[1][1])

    def __str__(self) -> str:
        return str(self.matrix())


HYPERBOLIC = BinaryForm(0, 1, 0)


def reduce_binary_form(q: BinaryForm) -> tuple[BinaryForm, IntMat]:
    """Reduce a unimodular-discriminant form to its canonical representative.

    Discriminant -1 forms are definite and Gauss-reduce to plus or minus the
    identity; discriminant +1 forms are isotropic and reduce to the
    hyperbolic form when even, diag(1, -1) when odd.  Returns the canonical
    form and a unimodular u with u^T q u canonical.
    """
    disc = q.discriminant()
    if disc == -1:
        return _reduce_definite(q)
    if disc == 1:
        return _reduce_isotropic(q)
    raise BadDiscriminantError(f"discriminant {disc} is not +1 or -1")


def _reduce_definite(q: BinaryForm) -> tuple[BinaryForm, IntMat]:
    sign = 1 if q.lam > 0 else -1
    current = q if sign == 1 else BinaryForm(-q.lam, -q.mu2, -q.nu)
    u = IntMat.identity(2)
    while True:
        if current.lam > current.nu:
            s = IntMat.from_rows([[0, -1], [1, 0]])
            current, u = current.transform(s), u @ s
            continue
        if 2 * abs(current.mu2) > current.lam:
            k = round(Fraction(-current.mu2, current.lam))
            t = IntMat.from_rows([[1, k], [0, 1]])
            current, u = current.transform(t), u @ t
            continue
        break
    assert current == BinaryForm(1, 0, 1)
    canonical = BinaryForm(sign, 0, sign)
    assert q.transform(u) == canonical
    return canonical, u


def _reduce_isotropic(q: BinaryForm) -> tuple[BinaryForm, IntMat]:
    # First basis vector: a primitive isotropic direction (rational roots
    # exist because the discriminant is a perfect square).
    if q.lam == 0:
        iso = (1, 0)
    else:
        num, den = -q.mu2 + 1, q.lam
        g = math.gcd(num, den)
        iso = (num // g, den // g) if g else (num, den)
    p, r = iso
    g, x, y = _extended_gcd(p, r)
    assert g == 1, "isotropic vector must be primitive"
    u1 = IntMat.from_rows([[p, -y], [r, x]])
    assert u1.det() == 1
    step = q.transform(u1)
    assert step.lam == 0 and step.mu2 in (1, -1)
    b, c = step.mu2, step.nu
    if c % 2 == 0:
        t = IntMat.from_rows([[1, -(c // (2 * b))], [0, 1]])
        step2 = step.transform(t)
        u = u1 @ t
        if step2.mu2 == -1:
            flip = IntMat.from_rows([[-1, 0], [0, 1]])
            step2, u = step2.transform(flip), u @ flip
        assert step2 == HYPERBOLIC
        canonical = HYPERBOLIC
    else:
        t = IntMat.from_rows([[1, (1 - c) // (2 * b)], [0, 1]])
        step2 = step.transform(t)
        assert step2.nu == 1
        final = IntMat.from_rows([[0, 1], [1, -step2.mu2]])
        u = u1 @ t @ final
        canonical = BinaryForm(1, 0, -1)
        assert step2.transform(final) == canonical
    assert q.transform(u) == canonical
    assert abs(u.det()) == 1
    return canonical, u


def _extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_s, s = s, old_s - quotient * s
        old_t, t = t, old_t - quotient * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


# ---------------------------------------------------------------------------
# Rank-one classifier


@dataclass(frozen=True)
class ShearConstraints:
    """Admissible off-diagonal entries m in an upper-triangular monodromy.

    kind 'any' places no constraint, 'multiples' requires every listed
    divisor to divide m, and 'zero' allows only m = 0.
    """

    kind: Literal["any", "multiples", "zero"]
    divisors: tuple[int, ...] = ()

    def modulus(self) -> int | None:
        if self.kind != "multiples":
            return None
        return math.lcm(*self.divisors) if self.divisors else 1


@dataclass(frozen=True)
class Rk1Report:
    case: Literal["MONOMIAL", "SYMMETRIC_PM", "RESIDUAL"]
    group_bound: str
    shears: ShearConstraints
    a: int | None = None
    b: int | None = None
    k: int | None = None
    sign: int | None = None
    flipped: bool = False


def _extract_univariate(w: LaurentPolynomial) -> dict[int, int]:
    """Exponent-to-coefficient map of a genuinely one-variable potential."""
    if w.dim == 1:
        return {e[0]: c for e, c in w.terms}
    if w.dim == 2:
        axes = {0: True, 1: True}
        for e, _ in w.terms:
            if e[1] != 0:
                axes[0] = False
            if e[0] != 0:
                axes[1] = False
        for axis in (0, 1):
            if axes[axis]:
                return {e[axis]: c for e, c in w.terms}
        raise NotUnivariateError("potential mixes both variables")
    raise NotUnivariateError("rank-one analysis needs one or two variables")


def _cyclotomic_factor_profile(poly: dict[int, int]) -> tuple[int, list[int]] | None:
    """Write a one-variable Laurent polynomial as c x^k prod Phi_d(x).

    Returns (c, sorted distinct d list) when the polynomial part is exactly a
    product of distinct cyclotomic polynomials, None otherwise (repeated or
    non-root-of-unity roots).
    """
    if not poly:
        return None
    low = min(poly)
    coeffs = [0] * (max(poly) - low + 1)
    for e, c in poly.items():
        coeffs[e - low] = c
    content = 0
    for c in coeffs:
        content = math.gcd(content, c)
    lead_sign = 1 if coeffs[-1] > 0 else -1
    content *= lead_sign
    coeffs = [c // content for c in coeffs]
    degree = len(coeffs) - 1
    found: list[int] = []
    d = 1
    # phi(d) grows at least like sqrt(d/2), so this window covers every
    # divisor whose cyclotomic polynomial could fit the remaining degree.
    while d <= 2 * degree * degree + 2:
        phi = list(cyclotomic_polynomial(d))
        if len(phi) - 1 <= _poly_degree(coeffs):
            quotient = _try_divide(coeffs, phi)
            if quotient is not None:
                if _try_divide(quotient, phi) is not None:
                    return None  # repeated root of unity
                coeffs = quotient
                found.append(d)
        d += 1
    if _poly_degree(coeffs) != 0 or coeffs[0] != 1:
        return None  # leftover non-cyclotomic factor
    return content, sorted(found)


def _poly_degree(coeffs: list[int]) -> int:
    deg = len(coeffs) - 1
    while deg > 0 and coeffs[deg] == 0:
        deg -= 1
    return deg


def _try_divide(num: list[int], den: list[int]) -> list[int] | None:
    num = num[: _poly_degree(num) + 1]
    den = den[: _poly_degree(den) + 1]
    if len(num) < len(den):
        return None
    work = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = work[i + len(den) - 1]
        if c % den[-1] != 0:
            return None
        q = c // den[-1]
        out[i] = q
        for j, dj in enumerate(den):
            work[i + j] -= q * dj
    if any(x != 0 for x in work):
        return None
    return out


def rk1_classify(w: LaurentPolynomial) -> Rk1Report:
    """Classify a one-variable potential and bound the monodromy it allows.

    A monomial-plus-constant potential has no critical points and only pins
    the support axis; the symmetric a +- (x + 1/x) shape pins the group to
    sign changes and even shears; anything else allows even shears at most,
    with the admissible shear moduli read off from the cyclotomic
    factorisation of the derivative.
    """
    poly = _extract_univariate(w)
    nonconstant = {e: c for e, c in poly.items() if e != 0}
    if not nonconstant:
        raise NotUnivariateError("constant potential has no rank-one data")
    a = poly.get(0, 0)
    flipped = False

    if len(nonconstant) == 1:
        (k, b), = nonconstant.items()
        if k < 0:
            k, flipped = -k, True
        return Rk1Report(
            case="MONOMIAL",
            group_bound="[[1, Z], [0, +-1]]",
            shears=ShearConstraints("any"),
            a=a,
            b=b,
            k=k,
            flipped=flipped,
        )

    derivative = {e - 1: c * e for e, c in nonconstant.items()}
    profile = _cyclotomic_factor_profile(derivative)
    if profile is None:
        shears = ShearConstraints("zero", (0,))
    else:
        content, ds = profile
        shears = ShearConstraints("multiples", tuple(sorted(set(ds) | {2 * abs(content)})))

    if set(nonconstant) == {1, -1} and nonconstant[1] == nonconstant[-1] and nonconstant[1] in (1, -1):
        return Rk1Report(
            case="SYMMETRIC_PM",
            group_bound="[[+-1, 2Z], [0, 1]]",
            shears=shears,
            a=a,
            sign=nonconstant[1],
            flipped=flipped,
        )
    return Rk1Report(
        case="RESIDUAL",
        group_bound="[[1, 2Z], [0, 1]]",
        shears=shears,
        a=a,
        flipped=flipped,
    )


# ---------------------------------------------------------------------------
# Hessian rigidity checks


ORDER3_GENERATOR = IntMat.from_rows([[0, -1], [1, -1]])
MINUS_IDENTITY = IntMat.from_rows([[-1, 0], [0, -1]])
AXIS_REFLECTION = IntMat.from_rows([[1, 0], [0, -1]])

_REF_ORDER3 = LaurentPolynomial.from_dict(2, {(1, 0): 1, (0, 1): 1, (-1, -1): 1})
_REF_HYPERBOLIC = LaurentPolynomial.from_dict(2, {(1, 1): 1, (-1, -1): 1})


def _ref_split(eps1: int, eps2: int) -> LaurentPolynomial:
    return LaurentPolynomial.from_dict(
        2, {(1, 0): eps1, (-1, 0): eps1, (0, 1): eps2, (0, -1): eps2}
    )


@dataclass(frozen=True)
class HessianPointData:
    point: TorsionPoint
    constants: tuple[Cyc, Cyc, Cyc]
    normalized: tuple[Cyc, Cyc, Cyc] | None = None


@dataclass(frozen=True)
class HessianCheckReport:
    kind: str
    status: Literal["PASS", "VIOLATION"]
    form: Literal["PROPORTIONAL", "SPLIT", "HYPERBOLIC", "NONE"]
    epsilon: int | None = None
    eps_pair: tuple[int, int] | None = None
    points: tuple[HessianPointData, ...] = ()


def hessian_theorem_check(
    w: LaurentPolynomial, group_kind: Literal["ORDER3", "ORDER2", "ORDER2_F"]
) -> HessianCheckReport:
    """Compare the Hessian of an invariant potential with its rigid models.

    For an order-3 rotation action the Hessian at each of the three forced
    diagonal critical points must be a single sign times the reference
    triangle potential's Hessian there.  For order-2 actions the four
    half-integer points must match either the hyperbolic model xy + 1/(xy)
    or a split model e1 (x + 1/x) + e2 (y + 1/y); with an axis reflection in
    the group only the split shape is possible.
    """
    if w.dim != 2:
        raise ValueError("check needs a two-variable potential")
    if group_kind == "ORDER3":
        required = [ORDER3_GENERATOR]
    elif group_kind == "ORDER2":
        required = [MINUS_IDENTITY]
    elif group_kind == "ORDER2_F":
        required = [MINUS_IDENTITY, AXIS_REFLECTION]
    else:
        raise ValueError(f"unknown group kind {group_kind!r}")
    for g in required:
        if not invariance_check(w, g):
            raise NotInvariantError(f"potential is not invariant under {g}")

    if group_kind == "ORDER3":
        # At each forced diagonal point the three constants must coincide
        # and be a cyclotomic-integer unit (so the Hessian is a unit times
        # the reference triangle Hessian there); at the trivial local system
        # the units of Z are just +-1, which fixes the overall sign.
        points = [
            TorsionPoint.make((Fraction(k, 3), Fraction(k, 3))) for k in range(3)
        ]
        w_data = [clifford_constants(w, p) for p in points]
        ref_data = [clifford_constants(_REF_ORDER3, p) for p in points]
        entries = []
        ok = True
        for p, dw, dr in zip(points, w_data, ref_data):
            lam, mu, nu = dw.constants()
            if not (lam == mu == nu) or not lam.is_integral_unit():
                ok = False
            unit = dr.lam / ref_data[0].lam
            normalized = tuple(x / unit for x in dw.constants())
            entries.append(HessianPointData(p, dw.constants(), normalized))
        trivial = w_data[0].lam
        epsilon: int | None = None
        if trivial.is_rational() and trivial.as_rational() in (1, -1):
            epsilon = -int(trivial.as_rational())
        else:
            ok = False
        if ok:
            return HessianCheckReport(
                group_kind, "PASS", "PROPORTIONAL", epsilon=epsilon, points=tuple(entries)
            )
        return HessianCheckReport(group_kind, "VIOLATION", "NONE", points=tuple(entries))

    points = [
        TorsionPoint.make((Fraction(i, 2), Fraction(j, 2)))
        for i in range(2)
        for j in range(2)
    ]
    w_data = [clifford_constants(w, p) for p in points]
    entries = tuple(HessianPointData(p, dw.constants()) for p, dw in zip(points, w_data))

    def matches(ref: LaurentPolynomial) -> bool:
        return all(
            clifford_constants(ref, p).constants() == dw.constants()
            for p, dw in zip(points, w_data)
        )

    for eps1, eps2 in itertools.product((1, -1), repeat=2):
        if matches(_ref_split(eps1, eps2)):
            return HessianCheckReport(
                group_kind, "PASS", "SPLIT", eps_pair=(eps1, eps2), points=entries
            )
    if group_kind == "ORDER2" and matches(_REF_HYPERBOLIC):
        return HessianCheckReport(group_kind, "PASS", "HYPERBOLIC", points=entries)
    return HessianCheckReport(group_kind, "VIOLATION", "NONE", points=entries)
