"""Surface-group representations into PO(n) and their topological invariants.

A representation is stored through one orthogonal representative per
projective generator image, ordered A_1, B_1, ..., A_g, B_g.  All invariants
computed here are independent of the choice of representatives: the
commutator obstructions because the kernel scalars are central, the
component vector because n is even.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .clifford import KernelElement, commutator_product, lift_orthogonal
from .linalg import NotOrthogonal, OrthComponent, RatMatrix, commutator, component


class RelationViolated(ValueError):
    """The product of generator commutators is neither I nor -I."""


class Delta1NotZero(ValueError):
    """An operation needed all generators in the identity component."""


class InvalidClass(ValueError):
    """The (mu1, mu2) combination is not a valid invariant class."""


class Mu2Value(Enum):
    """Second obstruction value, written additively: 0, 1 or omega."""

    ZERO = "0"
    ONE = "1"
    OMEGA = "omega"


class RelationSign(Enum):
    PLUS_I = "+I"
    MINUS_I = "-I"


def generator_label(index: int) -> str:
    """Human name of generator slot k in A_1, B_1, A_2, B_2, ... order."""
    return f"{'A' if index % 2 == 0 else 'B'}{index // 2 + 1}"


@dataclass(frozen=True)
class InvariantClass:
    """Pair of topological invariants (mu1, mu2) of a projective bundle.

    mu1 is a Z_2 vector of length 2g; mu2 = 1 only occurs over mu1 = 0.
    """

    mu1: tuple[int, ...]
    mu2: Mu2Value

    def __post_init__(self):
        object.__setattr__(self, "mu1", tuple(self.mu1))
        if len(self.mu1) < 4 or len(self.mu1) % 2 != 0:
            raise InvalidClass("mu1 must have even length 2g with g >= 2")
        if any(bit not in (0, 1) for bit in self.mu1):
            raise InvalidClass("mu1 entries must be bits")
        if self.mu2 == Mu2Value.ONE and any(self.mu1):
            raise InvalidClass("mu2 = 1 is only permitted when mu1 = 0")

    @property
    def mu1_is_zero(self) -> bool:
        return not any(self.mu1)

    def mu1_string(self) -> str:
        return "".join(str(b) for b in self.mu1)


@dataclass(frozen=True)
class SurfaceRep:
    """Genus g >= 2 representation into PO(n), n >= 4 even, by O(n) lifts.

    Construction certifies each generator exactly orthogonal and checks the
    surface relation (commutator product equal to +-I).
    """

    genus: int
    n: int
    gens: tuple[RatMatrix, ...]

    def __post_init__(self):
        if self.genus < 2:
            raise ValueError(f"genus must be >= 2, got {self.genus}")
        if self.n < 4 or self.n % 2 != 0:
            raise ValueError(f"n must be even and >= 4, got {self.n}")
        gens = tuple(self.gens)
        object.__setattr__(self, "gens", gens)
        if len(gens) != 2 * self.genus:
            raise ValueError(
                f"expected {2 * self.genus} generator matrices, got {len(gens)}"
            )
        for k, m in enumerate(gens):
            if m.n != self.n:
                raise ValueError(f"generator {generator_label(k)} is not {self.n}x{self.n}")
            if not m.is_orthogonal():
                raise NotOrthogonal(f"generator {generator_label(k)} is not orthogonal")
        _relation_sign(gens, self.n)


def _relation_sign(gens: Sequence[RatMatrix], n: int) -> RelationSign:
    product = RatMatrix.identity(n)
    for i in range(0, len(gens), 2):
        product = product * commutator(gens[i], gens[i + 1])
    if product == RatMatrix.identity(n):
        return RelationSign.PLUS_I
    if product == -RatMatrix.identity(n):
        return RelationSign.MINUS_I
    raise RelationViolated("commutator product of the generators is not +-I")


def check_relation(rep: SurfaceRep) -> RelationSign:
    """Which of +-I the commutator product equals.

    This simultaneously certifies the projective surface relation and
    computes the orthogonal-lift obstruction.
    """
    return _relation_sign(rep.gens, rep.n)


def delta2(rep: SurfaceRep) -> RelationSign:
    """Obstruction to lifting the representation to O(n); alias of check_relation."""
    return check_relation(rep)


def delta1(rep: SurfaceRep) -> tuple[int, ...]:
    """Component vector: bit k is set iff generator k lies outside SO(n)."""
    return tuple(
        0 if component(m) == OrthComponent.SO else 1 for m in rep.gens
    )


_KERNEL_TO_MU2 = {
    KernelElement.ONE: Mu2Value.ZERO,
    KernelElement.MINUS_ONE: Mu2Value.ONE,
    # +-omega are identified under projective equivalence
    KernelElement.OMEGA: Mu2Value.OMEGA,
    KernelElement.MINUS_OMEGA: Mu2Value.OMEGA,
}


def tilde_delta(rep: SurfaceRep) -> Mu2Value:
    """Spin-lift obstruction in {0, 1, omega}; requires delta1 = 0.

    Each generator is lifted through the Clifford algebra and the commutator
    product is evaluated exactly in the Lipschitz group.
    """
    if any(delta1(rep)):
        raise Delta1NotZero("tilde_delta requires every generator in SO(n)")
    lifts = [lift_orthogonal(m) for m in rep.gens]
    return _KERNEL_TO_MU2[commutator_product(lifts)]


def invariants(rep: SurfaceRep) -> InvariantClass:
    """The full invariant class (mu1, mu2) of the representation."""
    mu1 = delta1(rep)
    if any(mu1):
        mu2 = Mu2Value.OMEGA if delta2(rep) == RelationSign.MINUS_I else Mu2Value.ZERO
    else:
        mu2 = tilde_delta(rep)
    return InvariantClass(mu1, mu2)
