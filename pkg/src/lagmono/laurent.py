"""Integer Laurent polynomials and their exact behaviour at torsion points.

These polynomials play the role of disc-counting potentials: exponent vectors
live in the first homology lattice of the torus and coefficients in Z.
Evaluation at a torsion local system lands in a cyclotomic ring and is exact.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .cyclotomic import CyclotomicNumber
from .errors import GridTooLargeError, ParseError
from .intlat import IntMat, rational_rank
from .torussym import TorsionPoint

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class LaurentPolynomial:
    """Finite integer combination of monomials z^alpha, alpha in Z^dim.

    Terms are stored sorted lexicographically by exponent with no zero
    coefficients, so equality and iteration order are canonical.
    """

    dim: int
    terms: tuple[tuple[Exponent, int], ...]

    def __post_init__(self):
        cleaned: dict[Exponent, int] = {}
        for expo, coeff in self.terms:
            expo = tuple(int(e) for e in expo)
            if len(expo) != self.dim:
                raise ValueError("exponent length differs from dim")
            coeff = int(coeff)
            if coeff:
                cleaned[expo] = cleaned.get(expo, 0) + coeff
        items = tuple(sorted((e, c) for e, c in cleaned.items() if c != 0))
        object.__setattr__(self, "terms", items)

    @classmethod
    def from_dict(cls, dim: int, terms: Mapping[Sequence[int], int]) -> "LaurentPolynomial":
        return cls(dim, tuple((tuple(e), c) for e, c in terms.items()))

    @classmethod
    def zero(cls, dim: int) -> "LaurentPolynomial":
        return cls(dim, ())

    @classmethod
    def monomial(cls, dim: int, expo: Sequence[int], coeff: int = 1) -> "LaurentPolynomial":
        return cls(dim, ((tuple(expo), coeff),))

    def coefficient(self, expo: Sequence[int]) -> int:
        key = tuple(expo)
        for e, c in self.terms:
            if e == key:
                return c
        return 0

    def support(self) -> tuple[Exponent, ...]:
        return tuple(e for e, _ in self.terms)

    def constant_term(self) -> int:
        return self.coefficient((0,) * self.dim)

    def is_constant(self) -> bool:
        return all(all(x == 0 for x in e) for e, _ in self.terms)

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        out = dict(self.terms)
        for e, c in other.terms:
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial.from_dict(self.dim, out)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self.dim, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPolynomial.from_dict(self.dim, out)

    def partial(self, i: int) -> "LaurentPolynomial":
        """Affine partial derivative with respect to the i-th variable."""
        out: dict[Exponent, int] = {}
        for e, c in self.terms:
            if e[i] == 0:
                continue
            key = tuple(x - (1 if j == i else 0) for j, x in enumerate(e))
            out[key] = out.get(key, 0) + c * e[i]
        return LaurentPolynomial.from_dict(self.dim, out)

    def log_partial(self, i: int) -> "LaurentPolynomial":
        """Logarithmic derivative x_i d/dx_i, which keeps the exponent."""
        return LaurentPolynomial(self.dim, tuple((e, c * e[i]) for e, c in self.terms))

    def relabel(self, g: IntMat) -> "LaurentPolynomial":
        """Push exponents through alpha -> g alpha."""
        if g.nrows != self.dim or g.ncols != self.dim:
            raise ValueError("dimension mismatch")
        out: dict[Exponent, int] = {}
        for e, c in self.terms:
            key = g.apply(e)
            out[key] = out.get(key, 0) + c
        return LaurentPolynomial.from_dict(self.dim, out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            factors = []
            for i, exp in enumerate(e):
                if exp == 0:
                    continue
                factors.append(f"z{i + 1}" + (f"^{exp}" if exp != 1 else ""))
            mono = "*".join(factors) if factors else "1"
            if abs(c) != 1 or not factors:
                mono = f"{abs(c)}*{mono}" if factors else str(abs(c))
            parts.append(("- " if c < 0 else "+ ") + mono)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def evaluate(w: LaurentPolynomial, p: TorsionPoint) -> CyclotomicNumber:
    """Exact value of w at the unitary point with angles p."""
    if p.dim != w.dim:
        raise ValueError("dimension mismatch")
    d = 1
    for c in p.coords:
        d = math.lcm(d, c.denominator)
    powers: dict[int, int] = {}
    for e, coeff in w.terms:
        angle = sum(Fraction(x) * c for x, c in zip(e, p.coords))
        k = int(angle * d) % d
        powers[k] = powers.get(k, 0) + coeff
    coeffs = [Fraction(0)] * d
    for k, c in powers.items():
        coeffs[k] += c
    return CyclotomicNumber(d, tuple(coeffs))


def gradient_hessian(
    w: LaurentPolynomial, p: TorsionPoint
) -> tuple[tuple[CyclotomicNumber, ...], tuple[tuple[CyclotomicNumber, ...], ...]]:
    """Affine first and second partials of w, evaluated exactly at p."""
    n = w.dim
    partials = [w.partial(i) for i in range(n)]
    grad = tuple(evaluate(partials[i], p) for i in range(n))
    hess = tuple(
        tuple(evaluate(partials[i].partial(j), p) for j in range(n)) for i in range(n)
    )
    return grad, hess


def log_gradient_hessian(
    w: LaurentPolynomial, p: TorsionPoint
) -> tuple[tuple[CyclotomicNumber, ...], tuple[tuple[CyclotomicNumber, ...], ...]]:
    """Logarithmic analogue of gradient_hessian, exposed for diagnostics."""
    n = w.dim
    partials = [w.log_partial(i) for i in range(n)]
    grad = tuple(evaluate(partials[i], p) for i in range(n))
    hess = tuple(
        tuple(evaluate(partials[i].log_partial(j), p) for j in range(n)) for i in range(n)
    )
    return grad, hess


def is_critical(w: LaurentPolynomial, p: TorsionPoint) -> bool:
    """True when every first partial of w vanishes at p.

    Affine and logarithmic partials vanish together at unitary points; both
    are computed and must agree.
    """
    affine = all(evaluate(w.partial(i), p).is_zero() for i in range(w.dim))
    logarithmic = all(evaluate(w.log_partial(i), p).is_zero() for i in range(w.dim))
    assert affine == logarithmic, "affine and logarithmic criticality disagree"
    return affine


def torsion_critical_points(
    w: LaurentPolynomial, order_bound: int, grid_cap: int = 200_000
) -> tuple[TorsionPoint, ...]:
    """All critical torsion points with coordinate denominators dividing the bound."""
    if order_bound < 1:
        raise ValueError("order bound must be positive")
    if order_bound ** w.dim > grid_cap:
        raise GridTooLargeError(
            f"grid of size {order_bound}^{w.dim} exceeds cap {grid_cap}"
        )
    out = []
    for combo in itertools.product(range(order_bound), repeat=w.dim):
        p = TorsionPoint.make(Fraction(k, order_bound) for k in combo)
        if is_critical(w, p):
            out.append(p)
    return tuple(sorted(set(out)))


def b1_support_rank(w: LaurentPolynomial) -> tuple[tuple[Exponent, ...], int]:
    """Boundary support of the potential and its rational rank.

    The zero exponent (the constant term) bounds nothing and is excluded.
    """
    zero = (0,) * w.dim
    b1 = tuple(e for e, _ in w.terms if e != zero)
    rank = rational_rank([list(e) for e in b1]) if b1 else 0
    return b1, rank


def invariance_check(w: LaurentPolynomial, g: IntMat) -> bool:
    """True when relabelling exponents by g returns w term for term."""
    return w.relabel(g) == w


def candidate_filter(w: LaurentPolynomial, g: IntMat) -> bool:
    """True when g permutes the boundary support preserving each coefficient."""
    zero = (0,) * w.dim
    b1 = {e: c for e, c in w.terms if e != zero}
    image = set()
    for e, c in b1.items():
        target = g.apply(e)
        if b1.get(target) != c:
            return False
        image.add(target)
    return len(image) == len(b1)


# ---------------------------------------------------------------------------
# Text format


def parse_laurent(text: str) -> LaurentPolynomial:
    """Parse the potential text format.

    Line 1 is ``dim <n>``; each following line is ``term <coeff> <e1> .. <en>``.
    ``#`` starts a comment.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((lineno, stripped))
    if not lines:
        raise ParseError("empty potential file")
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
    terms: dict[Exponent, int] = {}
    for lineno, line in lines[1:]:
        fields = line.split()
        if fields[0] != "term":
            raise ParseError(f"line {lineno}: expected 'term', got {fields[0]!r}")
        if len(fields) != dim + 2:
            raise ParseError(f"line {lineno}: expected coefficient and {dim} exponents")
        try:
            coeff = int(fields[1])
            expo = tuple(int(x) for x in fields[2:])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: bad integer field") from exc
        terms[expo] = terms.get(expo, 0) + coeff
    return LaurentPolynomial.from_dict(dim, terms)


def format_laurent(w: LaurentPolynomial) -> str:
    lines = [f"dim {w.dim}"]
    for e, c in w.terms:
        lines.append("term " + str(c) + " " + " ".join(str(x) for x in e))
    return "\n".join(lines) + "\n"
