"""Exact Clifford algebra Cl(n) over the rationals, positive-definite signature.

Basis blades are n-bit masks (bit i set means the basis vector e_{i+1} occurs),
so multiplication reduces to a transposition count plus an XOR.  Orthogonal
matrices are lifted to the Lipschitz group as products of *non-normalised*
reflection vectors: unit normalisation would force square roots, while every
obstruction computed downstream is a commutator product and therefore
invariant under rescaling of the lifts.

The dimension is capped at 16 so a blade mask always fits a machine word;
every example of interest here needs n <= 8.
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from typing import Dict, Mapping, Sequence, Union

from .linalg import NotOrthogonal, RatMatrix, as_fraction

MAX_DIM = 16

Scalarish = Union[int, Fraction]


class NotAVersor(ValueError):
    """Element times its reversal is not a nonzero scalar."""


class NotVectorPreserving(ValueError):
    """Twisted conjugation by the element does not map vectors to vectors."""


class NotInKernel(ValueError):
    """A commutator product fell outside {1, -1, omega, -omega}."""


class KernelElement(Enum):
    """The four central covering elements sitting over the identity class."""

    ONE = "1"
    MINUS_ONE = "-1"
    OMEGA = "omega"
    MINUS_OMEGA = "-omega"


def _check_dimension(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"dimension must be a positive integer, got {n!r}")
    if n > MAX_DIM:
        raise ValueError(f"dimension {n} exceeds the supported maximum {MAX_DIM}")


def blade_mul(a: int, b: int, n: int) -> tuple[int, int]:
    """Product of two basis blades: (sign, result mask).

    The sign counts the transpositions needed to sort the concatenated
    index lists; contractions contribute +1 since e_i^2 = +1.
    """
    _check_dimension(n)
    top = 1 << n
    if not (0 <= a < top and 0 <= b < top):
        raise ValueError("blade mask out of range for the given dimension")
    swaps = 0
    x = a >> 1
    while x:
        swaps += (x & b).bit_count()
        x >>= 1
    return (1 if swaps % 2 == 0 else -1), a ^ b


class CliffordElement:
    """Sparse multivector of Cl(n) with exact rational coefficients.

    Zero coefficients are pruned on construction, so equality of the stored
    term maps is equality in the algebra.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[int, Scalarish]):
        _check_dimension(n)
        top = 1 << n
        clean: Dict[int, Fraction] = {}
        for mask, coeff in terms.items():
            if not (0 <= mask < top):
                raise ValueError(f"blade mask {mask} out of range for Cl({n})")
            c = as_fraction(coeff)
            if c != 0:
                clean[mask] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("CliffordElement is immutable")

    @classmethod
    def scalar(cls, n: int, value: Scalarish) -> "CliffordElement":
        return cls(n, {0: value})

    @classmethod
    def basis_vector(cls, n: int, i: int) -> "CliffordElement":
        if not (0 <= i < n):
            raise ValueError(f"basis index {i} out of range for Cl({n})")
        return cls(n, {1 << i: 1})

    @classmethod
    def vector(cls, n: int, coords: Sequence[Scalarish]) -> "CliffordElement":
        if len(coords) != n:
            raise ValueError("coordinate count must equal the dimension")
        return cls(n, {1 << i: c for i, c in enumerate(coords)})

    @classmethod
    def _raw(cls, n: int, terms: Dict[int, Fraction]) -> "CliffordElement":
        # internal fast path: inputs already satisfy the invariants except
        # possibly for zero coefficients, which are pruned here
        out = object.__new__(cls)
        object.__setattr__(out, "n", n)
        object.__setattr__(out, "terms", {m: c for m, c in terms.items() if c != 0})
        return out

    def _require_same_algebra(self, other: "CliffordElement") -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: Cl({self.n}) vs Cl({other.n})")

    def __add__(self, other: "CliffordElement") -> "CliffordElement":
        if not isinstance(other, CliffordElement):
            return NotImplemented
        self._require_same_algebra(other)
        terms = dict(self.terms)
        for mask, c in other.terms.items():
            prev = terms.get(mask)
            terms[mask] = c if prev is None else prev + c
        return CliffordElement._raw(self.n, terms)

    def __sub__(self, other: "CliffordElement") -> "CliffordElement":
        return self + (-other)

    def __neg__(self) -> "CliffordElement":
        return CliffordElement._raw(self.n, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other) -> "CliffordElement":
        if isinstance(other, (int, Fraction)):
            factor = as_fraction(other)
            return CliffordElement._raw(
                self.n, {m: c * factor for m, c in self.terms.items()}
            )
        if not isinstance(other, CliffordElement):
            return NotImplemented
        self._require_same_algebra(other)
        acc: Dict[int, Fraction] = {}
        rhs = list(other.terms.items())
        for ma, ca in self.terms.items():
            for mb, cb in rhs:
                # inline blade product; masks are valid by the invariants
                swaps = 0
                x = ma >> 1
                while x:
                    swaps += (x & mb).bit_count()
                    x >>= 1
                value = ca * cb if swaps % 2 == 0 else -ca * cb
                mask = ma ^ mb
                prev = acc.get(mask)
                acc[mask] = value if prev is None else prev + value
        return CliffordElement._raw(self.n, acc)

    def __rmul__(self, other) -> "CliffordElement":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CliffordElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return f"Cl({self.n}):0"
        parts = []
        for mask in sorted(self.terms):
            name = "".join(f"e{i + 1}" for i in range(self.n) if mask >> i & 1) or "1"
            parts.append(f"{self.terms[mask]}*{name}")
        return f"Cl({self.n}):" + " + ".join(parts)

    def is_zero(self) -> bool:
        return not self.terms

    def is_scalar(self) -> bool:
        return set(self.terms) <= {0}

    def scalar_part(self) -> Fraction:
        return self.terms.get(0, Fraction(0))

    def grades(self) -> set[int]:
        return {mask.bit_count() for mask in self.terms}

    def grade_involution(self) -> "CliffordElement":
        """Negate odd-grade terms (an algebra automorphism)."""
        return CliffordElement._raw(
            self.n,
            {m: (-c if m.bit_count() % 2 else c) for m, c in self.terms.items()},
        )

    def reversal(self) -> "CliffordElement":
        """Reverse factor order: grade k picks up (-1)^(k(k-1)/2)."""
        out: Dict[int, Fraction] = {}
        for m, c in self.terms.items():
            k = m.bit_count()
            out[m] = -c if (k * (k - 1) // 2) % 2 else c
        return CliffordElement._raw(self.n, out)

    def vector_coefficients(self) -> tuple[Fraction, ...]:
        """Coefficient vector of a pure grade-1 element."""
        if self.terms and self.grades() != {1}:
            raise ValueError("element is not a pure vector")
        return tuple(self.terms.get(1 << i, Fraction(0)) for i in range(self.n))


def mul(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    """Exact Clifford product (bilinear extension of blade_mul)."""
    return x * y


def grade_involution(x: CliffordElement) -> CliffordElement:
    return x.grade_involution()


def reversal(x: CliffordElement) -> CliffordElement:
    return x.reversal()


def volume_element(n: int) -> CliffordElement:
    """The oriented volume element e_1 ... e_n."""
    _check_dimension(n)
    return CliffordElement(n, {(1 << n) - 1: 1})


def versor_inverse(g: CliffordElement) -> CliffordElement:
    """Inverse of a Lipschitz-group element: reversal(g) / (g reversal(g))."""
    norm = g * g.reversal()
    if not norm.is_scalar() or norm.is_zero():
        raise NotAVersor(f"g * reversal(g) = {norm!r} is not a nonzero scalar")
    return g.reversal() * (Fraction(1) / norm.scalar_part())


def twisted_conjugation_matrix(g: CliffordElement) -> RatMatrix:
    """Matrix of x -> alpha(g) x g^-1 on vectors; exactly orthogonal.

    This realises the covering of the orthogonal group by the Lipschitz
    group: reflections for odd g, rotations for even g.  The inverse is
    expanded as reversal over norm, so all intermediate products stay in
    the coefficient ring of g and the division happens once per column.
    """
    n = g.n
    g_rev = g.reversal()
    norm = g * g_rev
    if not norm.is_scalar() or norm.is_zero():
        raise NotAVersor(f"g * reversal(g) = {norm!r} is not a nonzero scalar")
    scale = norm.scalar_part()
    g_alpha = g.grade_involution()
    columns = []
    for i in range(n):
        image = g_alpha * CliffordElement.basis_vector(n, i) * g_rev
        if image.is_zero() or image.grades() != {1}:
            raise NotVectorPreserving(
                f"image of e{i + 1} has grades {sorted(image.grades())}, expected {{1}}"
            )
        columns.append([c / scale for c in image.vector_coefficients()])
    return RatMatrix(zip(*columns))


def _primitive(coords: Sequence[Fraction]) -> list[Fraction]:
    """Rescale a nonzero rational vector to coprime integer coordinates."""
    den = 1
    for c in coords:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in coords]
    content = 0
    for v in ints:
        content = math.gcd(content, v)
    return [Fraction(v // content) for v in ints]


def lift_orthogonal(a: RatMatrix) -> CliffordElement:
    """A versor whose twisted conjugation is exactly the orthogonal matrix a.

    Column-by-column reflection reduction: for each i in order, if the
    remaining matrix sends e_i to v != e_i, multiply by the reflection along
    v - e_i (which fixes the already-reduced columns).  The lift is a product
    of at most n rational reflection vectors; its grade parity is even
    exactly when det(a) = +1.
    """
    if not a.is_orthogonal():
        raise NotOrthogonal("only exactly orthogonal matrices can be lifted")
    n = a.n
    _check_dimension(n)
    work = [list(row) for row in a.rows]
    lift = CliffordElement.scalar(n, 1)
    for i in range(n):
        v = [work[r][i] for r in range(n)]
        if all(v[r] == (1 if r == i else 0) for r in range(n)):
            continue
        # reflections are scale-free, so use the primitive integer vector
        u = _primitive([v[r] - (1 if r == i else 0) for r in range(n)])
        lift = lift * CliffordElement.vector(n, u)
        # reflect every remaining column across the hyperplane orthogonal to u
        uu = sum(c * c for c in u)
        for col in range(i, n):
            w = [work[r][col] for r in range(n)]
            f = 2 * sum(x * y for x, y in zip(w, u)) / uu
            for r in range(n):
                work[r][col] = w[r] - f * u[r]
    return lift


def commutator_product(lifts: Sequence[CliffordElement]) -> KernelElement:
    """Product of commutators [g_1, h_1] ... [g_k, h_k] in the Lipschitz group.

    Scale factors cancel inside each commutator, so whenever the underlying
    orthogonal representation satisfies the surface relation the product is
    exactly one of 1, -1, omega, -omega.
    """
    if len(lifts) < 2 or len(lifts) % 2 != 0:
        raise ValueError("expected a non-empty even-length list of lifts")
    n = lifts[0].n
    if any(g.n != n for g in lifts):
        raise ValueError("all lifts must live in the same algebra")
    # expand every inverse as reversal over norm and divide once at the end
    product = CliffordElement.scalar(n, 1)
    scale = Fraction(1)
    for g in lifts:
        norm = g * g.reversal()
        if not norm.is_scalar() or norm.is_zero():
            raise NotAVersor(f"g * reversal(g) = {norm!r} is not a nonzero scalar")
        scale *= norm.scalar_part()
    for k in range(0, len(lifts), 2):
        g, h = lifts[k], lifts[k + 1]
        product = product * g * h * g.reversal() * h.reversal()
    full = (1 << n) - 1
    if product.terms == {0: scale}:
        return KernelElement.ONE
    if product.terms == {0: -scale}:
        return KernelElement.MINUS_ONE
    if product.terms == {full: scale}:
        return KernelElement.OMEGA
    if product.terms == {full: -scale}:
        return KernelElement.MINUS_OMEGA
    raise NotInKernel(
        "commutator product is not +-1 or +-omega; the surface relation fails"
    )
