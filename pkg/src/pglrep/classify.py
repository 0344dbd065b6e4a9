"""Bundle classification: invariant enumeration, counts and lifting predicates.

Two layers live here.  The generic layer classifies principal bundles over a
closed oriented surface for any topological group with finite abelian pi_0
and pi_1: the second invariant ranges over the pi_0-orbits of pi_1 modulo a
correction subgroup determined by the first invariant.  The concrete layer
instantiates this for the projective orthogonal groups, enumerates the
resulting invariant classes, and evaluates the closed-form component counts
for the representation spaces (projective and extended-linear) together with
the dimension and Stiefel-Whitney tensor formulas.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

from .surfrep import InvariantClass, Mu2Value

MAX_GROUP_SIZE = 1 << 16


class BadInput(ValueError):
    """Arguments outside the supported range."""


class ActionNotDescending(ValueError):
    """The group action does not preserve the correction subgroup."""


class TargetInvalidForClass(ValueError):
    """The lifting question is not defined for this class shape."""


Element = tuple[int, ...]


@dataclass(frozen=True)
class FinAbGroup:
    """Finite abelian group as a product of cyclic factors.

    Elements are coefficient tuples reduced modulo the factor orders.
    """

    orders: tuple[int, ...]

    def __post_init__(self):
        if not self.orders or any(k < 2 for k in self.orders):
            raise BadInput("cyclic factor orders must all be >= 2")
        if self.size() > MAX_GROUP_SIZE:
            raise BadInput(f"group size exceeds the cap {MAX_GROUP_SIZE}")

    def size(self) -> int:
        out = 1
        for k in self.orders:
            out *= k
        return out

    def zero(self) -> Element:
        return (0,) * len(self.orders)

    def reduce(self, v: Sequence[int]) -> Element:
        if len(v) != len(self.orders):
            raise BadInput("element has the wrong number of coordinates")
        return tuple(x % k for x, k in zip(v, self.orders))

    def add(self, a: Element, b: Element) -> Element:
        return self.reduce([x + y for x, y in zip(a, b)])

    def neg(self, a: Element) -> Element:
        return self.reduce([-x for x in a])

    def sub(self, a: Element, b: Element) -> Element:
        return self.reduce([x - y for x, y in zip(a, b)])

    def elements(self) -> Iterator[Element]:
        yield from itertools.product(*(range(k) for k in self.orders))

    def generators(self) -> Iterator[Element]:
        for i in range(len(self.orders)):
            yield tuple(int(j == i) for j in range(len(self.orders)))


@dataclass(frozen=True)
class GroupAction:
    """Action of pi_0 on pi_1 given by one endomorphism per pi_0 generator.

    generator_images[k][j] is the image in pi_1 of the j-th pi_1 generator
    under the k-th pi_0 generator.  Each map must be an automorphism whose
    order divides the order of the acting generator.
    """

    pi0: FinAbGroup
    pi1: FinAbGroup
    generator_images: tuple[tuple[Element, ...], ...]

    def __post_init__(self):
        if len(self.generator_images) != len(self.pi0.orders):
            raise BadInput("need one endomorphism per pi0 generator")
        images = tuple(
            tuple(self.pi1.reduce(v) for v in block) for block in self.generator_images
        )
        object.__setattr__(self, "generator_images", images)
        for block in images:
            if len(block) != len(self.pi1.orders):
                raise BadInput("endomorphism must list one image per pi1 generator")
        for k, order in enumerate(self.pi0.orders):
            seen = {self._apply_generator(k, v) for v in self.pi1.elements()}
            if len(seen) != self.pi1.size():
                raise BadInput(f"pi0 generator {k} does not act by an automorphism")
            for v in self.pi1.elements():
                w = v
                for _ in range(order):
                    w = self._apply_generator(k, w)
                if w != v:
                    raise BadInput(f"pi0 generator {k} violates its order {order}")

    def _apply_generator(self, k: int, v: Element) -> Element:
        acc = [0] * len(self.pi1.orders)
        for coeff, image in zip(v, self.generator_images[k]):
            for j, x in enumerate(image):
                acc[j] += coeff * x
        return self.pi1.reduce(acc)

    def apply(self, g0: Element, v: Element) -> Element:
        """Act by the pi_0 element g0 on the pi_1 element v."""
        g0 = self.pi0.reduce(g0)
        out = self.pi1.reduce(v)
        for k, times in enumerate(g0):
            for _ in range(times):
                out = self._apply_generator(k, out)
        return out


def _closure(pi1: FinAbGroup, generators: Iterable[Element]) -> frozenset[Element]:
    subgroup = {pi1.zero()}
    gens = {pi1.reduce(v) for v in generators}
    frontier = list(subgroup)
    while frontier:
        nxt = []
        for a in frontier:
            for b in gens:
                c = pi1.add(a, b)
                if c not in subgroup:
                    subgroup.add(c)
                    nxt.append(c)
        frontier = nxt
    return frozenset(subgroup)


def gamma_subgroup(action: GroupAction, mu1_image: Iterable[Element]) -> frozenset[Element]:
    """Correction subgroup of pi_1 generated by v - g0.v over the image of mu1.

    Computed by brute-force closure; pi_1 is finite and small here.
    """
    gens = []
    image = [action.pi0.reduce(g0) for g0 in mu1_image]
    for v in action.pi1.elements():
        for g0 in image:
            gens.append(action.pi1.sub(v, action.apply(g0, v)))
    return _closure(action.pi1, gens)


def classify_bundles(action: GroupAction, mu1_image: Iterable[Element]) -> list[Element]:
    """Canonical representatives of (pi_1 / Gamma) / pi_0.

    This is the exact range of the second invariant for bundles whose first
    invariant has the given image.  Representatives are the lexicographically
    least coefficient vectors in each orbit, returned sorted.
    """
    image = [action.pi0.reduce(g0) for g0 in mu1_image]
    gamma = gamma_subgroup(action, image)
    for g0 in action.pi0.generators():
        for v in gamma:
            if action.apply(g0, v) not in gamma:
                raise ActionNotDescending(
                    "the pi0 action does not preserve the correction subgroup"
                )

    def coset_rep(v: Element) -> Element:
        return min(action.pi1.add(v, w) for w in gamma)

    reps = set()
    for v in action.pi1.elements():
        orbit = {coset_rep(action.apply(g0, v)) for g0 in action.pi0.elements()}
        reps.add(min(orbit))
    return sorted(reps)


# ---------------------------------------------------------------------------
# Projective orthogonal instantiation
# ---------------------------------------------------------------------------


def po_bundle_data(n: int) -> GroupAction:
    """The (pi_0, pi_1, action) triple of PO(n) for n >= 4 even.

    pi_1 is the four-element covering kernel {1, -1, omega, -omega} written
    additively: Z_2 x Z_2 when n = 0 mod 4 (coordinates (a, b) meaning
    a.[-1] + b.[omega]) and Z_4 generated by omega when n = 2 mod 4.  The
    orientation-reversing component acts by omega -> -omega.
    """
    if n < 4 or n % 2 != 0:
        raise BadInput(f"n must be even and >= 4, got {n}")
    pi0 = FinAbGroup((2,))
    if n % 4 == 0:
        pi1 = FinAbGroup((2, 2))
        images = (((1, 0), (1, 1)),)  # -1 fixed, omega -> -1 + omega
    else:
        pi1 = FinAbGroup((4,))
        images = (((3,),),)  # omega -> -omega
    return GroupAction(pi0, pi1, images)


def po_kernel_label(n: int, v: Element) -> str:
    """Additive name of a pi_1 element of PO(n): 0, 1, omega or -omega."""
    if n % 4 == 0:
        return {(0, 0): "0", (1, 0): "1", (0, 1): "omega", (1, 1): "-omega"}[v]
    return {(0,): "0", (2,): "1", (1,): "omega", (3,): "-omega"}[v]


def _zero_mu1(g: int) -> tuple[int, ...]:
    return (0,) * (2 * g)


def _check_g_n(g: int, n: int) -> None:
    if g < 2:
        raise BadInput(f"genus must be >= 2, got {g}")
    if n < 4 or n % 2 != 0:
        raise BadInput(f"n must be even and >= 4, got {n}")


def invariant_classes(g: int, n: int) -> list[InvariantClass]:
    """All invariant classes at genus g: 2^(2g+1) + 1 of them, in a fixed order.

    mu2 ranges over {0, 1, omega} when mu1 = 0 and over {0, omega} otherwise.
    """
    _check_g_n(g, n)
    out = []
    for mu1 in itertools.product((0, 1), repeat=2 * g):
        if any(mu1):
            values = (Mu2Value.ZERO, Mu2Value.OMEGA)
        else:
            values = (Mu2Value.ZERO, Mu2Value.ONE, Mu2Value.OMEGA)
        out.extend(InvariantClass(mu1, mu2) for mu2 in values)
    return out


class LiftTarget(Enum):
    SO = "SO"
    SPIN = "Spin"
    PIN = "Pin"
    O = "O"


def lifts_to(cls: InvariantClass, target: LiftTarget) -> bool:
    """Whether a bundle in the class lifts to the given covering group.

    Over mu1 = 0 the questions are the special-orthogonal and spin lifts;
    over mu1 != 0 they are the orthogonal and pin lifts (equivalent to each
    other), decided by mu2 = 0.
    """
    if cls.mu1_is_zero:
        if target == LiftTarget.SO:
            return cls.mu2 in (Mu2Value.ZERO, Mu2Value.ONE)
        if target == LiftTarget.SPIN:
            return cls.mu2 == Mu2Value.ZERO
        raise TargetInvalidForClass(f"{target.value}-lift is not defined when mu1 = 0")
    if target in (LiftTarget.PIN, LiftTarget.O):
        return cls.mu2 == Mu2Value.ZERO
    raise TargetInvalidForClass(f"{target.value}-lift is not defined when mu1 != 0")


def z0(n: int, g: int) -> int:
    """(g - 1) n^2 / 4 mod 2: the split-class second Stiefel-Whitney value."""
    if n % 2 != 0:
        raise BadInput(f"n must be even, got {n}")
    return ((g - 1) * n * n // 4) % 2


def _z0_mu2(n: int, g: int) -> Mu2Value:
    # z0 is a w2 value; over mu1 = 0 with an even-degree twist, w2 = 0 and
    # w2 = 1 correspond to mu2 = 0 and mu2 = 1 respectively.
    return Mu2Value.ONE if z0(n, g) else Mu2Value.ZERO


def component_count(n: int, g: int) -> int:
    """Number of connected components of the representation space in PGL(n, R)."""
    if g < 2 or n < 2:
        raise BadInput(f"need n >= 2 and g >= 2, got n={n}, g={g}")
    if n == 2:
        return 2 ** (2 * g + 1) + 4 * g - 5
    if n % 2 == 1:
        return 3
    return 2 ** (2 * g + 1) + 2


def components_per_class(cls: InvariantClass, n: int, g: int) -> int:
    """Components of one invariant class: 2 for (0, z0), else 1.

    The doubled class is the one containing the contractible family of
    deformations with maximal symmetry breaking; summing over all classes
    recovers component_count.
    """
    _check_g_n(g, n)
    if len(cls.mu1) != 2 * g:
        raise BadInput(f"class has mu1 length {len(cls.mu1)}, expected {2 * g}")
    if cls.mu1_is_zero and cls.mu2 == _z0_mu2(n, g):
        return 2
    return 1


@dataclass(frozen=True)
class TwistedClass:
    """Invariant class of a twisted orthogonal bundle (V, L, Q).

    Over mu1bar = 0 the payload is (w2, deg L) for even degree and just the
    degree for odd degree; over mu1bar != 0 only the degree remains.
    """

    mu1bar: tuple[int, ...]
    deg: int
    w2: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "mu1bar", tuple(self.mu1bar))
        if any(bit not in (0, 1) for bit in self.mu1bar):
            raise BadInput("mu1bar entries must be bits")
        zero = not any(self.mu1bar)
        if zero and self.deg % 2 == 0:
            if self.w2 not in (0, 1):
                raise BadInput("w2 in {0, 1} is required when mu1bar = 0 and deg even")
        elif self.w2 is not None:
            raise BadInput("w2 is only carried when mu1bar = 0 and deg is even")


def project_twisted(cls: TwistedClass) -> InvariantClass:
    """Invariant class of the projective bundle underlying a twisted bundle.

    Odd twist degree always projects to mu2 = omega; even degree projects to
    the w2 value over mu1 = 0 and to mu2 = 0 over mu1 != 0.
    """
    if not any(cls.mu1bar):
        if cls.deg % 2 == 1:
            mu2 = Mu2Value.OMEGA
        else:
            mu2 = Mu2Value.ONE if cls.w2 else Mu2Value.ZERO
    else:
        mu2 = Mu2Value.OMEGA if cls.deg % 2 == 1 else Mu2Value.ZERO
    return InvariantClass(cls.mu1bar, mu2)


@dataclass(frozen=True)
class ComponentReport:
    """Per-class component multiplicities with moduli and fixed-fibre totals.

    entries[i] = (twisted class, multiplicity in the full degree-d space,
    multiplicity in one fixed-line-bundle fibre).
    """

    deg: int
    entries: tuple[tuple[TwistedClass, int, int], ...]
    total: int
    fibre_total: int

    def __post_init__(self):
        if self.total != sum(m for _, m, _ in self.entries):
            raise BadInput("total must equal the sum of multiplicities")
        if self.fibre_total != sum(f for _, _, f in self.entries):
            raise BadInput("fibre total must equal the sum of fibre multiplicities")


def egl_component_counts(deg: int, g: int, n: int) -> ComponentReport:
    """Component counts of the extended-linear moduli at twist degree 0 or 1.

    Degree 0: the class (0, z0) carries 2 components in the full space and
    2^(2g) + 1 in a fixed fibre (the extra ones collapsing when the fibre
    varies); every other class is connected in both.  Degree 1: one class
    per mu1bar vector, all connected.
    """
    _check_g_n(g, n)
    if deg not in (0, 1):
        raise BadInput(f"twist degree must be 0 or 1, got {deg}")
    entries: list[tuple[TwistedClass, int, int]] = []
    if deg == 0:
        z = z0(n, g)
        for w2 in (0, 1):
            cls = TwistedClass(_zero_mu1(g), 0, w2)
            entries.append((cls, 2 if w2 == z else 1, (2 ** (2 * g) + 1) if w2 == z else 1))
        for mu1bar in itertools.product((0, 1), repeat=2 * g):
            if any(mu1bar):
                entries.append((TwistedClass(mu1bar, 0), 1, 1))
    else:
        for mu1bar in itertools.product((0, 1), repeat=2 * g):
            entries.append((TwistedClass(mu1bar, 1), 1, 1))
    total = sum(m for _, m, _ in entries)
    fibre_total = sum(f for _, _, f in entries)
    return ComponentReport(deg, tuple(entries), total, fibre_total)


def tensor_by_line_bundle(
    w1: Sequence[int], w2: int, f1: Sequence[int], n: int
) -> tuple[tuple[int, ...], int]:
    """Stiefel-Whitney classes of W tensor F for a real line bundle F.

    For even rank w1 is unchanged and w2 picks up the cup product w1 . f1,
    evaluated through the standard symplectic pairing on the surface.
    """
    if n % 2 != 0:
        raise BadInput(f"rank must be even, got {n}")
    if len(w1) != len(f1) or len(w1) % 2 != 0:
        raise BadInput("w1 and f1 must have the same even length 2g")
    pairing = 0
    for i in range(0, len(w1), 2):
        pairing += w1[i] * f1[i + 1] + w1[i + 1] * f1[i]
    return tuple(int(b) % 2 for b in w1), (w2 + pairing) % 2


def moduli_dimension(n: int, g: int) -> int:
    """Complex dimension 2 n^2 (g - 1) + 2 of the ambient Higgs moduli space."""
    if n < 1 or g < 2:
        raise BadInput(f"need n >= 1 and g >= 2, got n={n}, g={g}")
    return 2 * n * n * (g - 1) + 2
