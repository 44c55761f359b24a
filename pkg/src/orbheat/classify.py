"""Distinguishing 2-orbifolds by their heat invariants.

Tools built on the exact spectral constant c = 12 * (degree-0 heat
coefficient):

  * enumerating named classes of orbifolds up to an order bound,
  * inverting c over a class and scanning a class for c-collisions,
  * separating negative-curvature triangular pillows from the
    nonnegative-curvature ones by integer/fractional-part matching of c,
  * recovering the sign of a constant curvature from an expansion,
  * comparing mirror-locus lengths of the spherical families on the unit
    sphere, where c alone cannot tell a quotient from its orientation
    double cover's other quotients.

Everything that feeds a classification decision is exact rational
arithmetic; floats appear only in the returned mirror lengths (multiples
of pi) and in curvature_sign's float inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .heat import HeatExpansion, spectral_c
from .notation import render
from .signature import OrbifoldSignature, euler_characteristic


class UnsupportedFamily(ValueError):
    """Signature outside the families covered by the built-in length table."""


class AmbiguousZero(ArithmeticError):
    """Both curvature-sign tests vanished; the sign is not determined."""


class ClassKind(Enum):
    TEARDROPS_AND_FOOTBALLS = "teardrops-footballs"
    TRIANGULAR_PILLOWS = "pillows"
    CLASS_C_ORIENTABLE = "class-c"
    SPHERICAL_CONSTANT_CURVATURE = "spherical"


@dataclass(frozen=True)
class OrbifoldClass:
    """A named enumerable class together with its order bound."""

    kind: ClassKind
    bound: int = 500

    def __post_init__(self):
        if not isinstance(self.bound, int) or isinstance(self.bound, bool):
            raise ValueError(f"bound must be an int, got {self.bound!r}")
        if self.bound < 2:
            raise ValueError(f"bound must be >= 2, got {self.bound}")


class Verdict(Enum):
    BY_C = "ByC"
    BY_MIRROR_PRESENCE = "ByMirrorPresence"
    BY_MIRROR_LENGTH = "ByMirrorLength"
    NOT_DISTINGUISHED = "NotDistinguished"


class CurvatureSign(Enum):
    POSITIVE = "Positive"
    NEGATIVE = "Negative"


def _sphere(*cones) -> OrbifoldSignature:
    return OrbifoldSignature(cone_points=tuple(cones))


def _mirrored(cones, corners) -> OrbifoldSignature:
    return OrbifoldSignature(cone_points=tuple(cones), mirror_boundaries=(tuple(corners),))


def _crosscapped(cones) -> OrbifoldSignature:
    return OrbifoldSignature(crosscaps=1, cone_points=tuple(cones))


def _nonneg_pillows(bound: int):
    """Triangular pillows with chi >= 0 and orders <= bound, no duplicates.

    chi >= 0 forces 1/p + 1/q + 1/r >= 1, so p is 2 or 3 and the other
    orders are tightly bounded except for the (2, 2, r) tail.
    """
    out = [_sphere(2, 2, r) for r in range(2, bound + 1)]
    for q, rmax in ((3, 6), (4, 4)):
        out.extend(
            _sphere(2, q, r) for r in range(q, min(rmax, bound) + 1) if q <= bound
        )
    if bound >= 3:
        out.append(_sphere(3, 3, 3))
    return out


_SPHERICAL_FIXED = (
    _sphere(2, 3, 3),
    _sphere(2, 3, 4),
    _sphere(2, 3, 5),
    _mirrored((), (2, 3, 3)),
    _mirrored((3,), (2,)),
    _mirrored((), (2, 3, 4)),
    _mirrored((), (2, 3, 5)),
)


def enumerate_class(cls: OrbifoldClass) -> tuple:
    """Complete duplicate-free roster of the class with orders <= cls.bound."""
    B = cls.bound
    kind = cls.kind
    if kind is ClassKind.TEARDROPS_AND_FOOTBALLS:
        members = [_sphere(m) for m in range(2, B + 1)]
        members.extend(
            _sphere(r, s) for r in range(2, B + 1) for s in range(r, B + 1)
        )
        return tuple(members)
    if kind is ClassKind.TRIANGULAR_PILLOWS:
        return tuple(
            _sphere(p, q, r)
            for p in range(2, B + 1)
            for q in range(p, B + 1)
            for r in range(q, B + 1)
        )
    if kind is ClassKind.CLASS_C_ORIENTABLE:
        members = [OrbifoldSignature(), OrbifoldSignature(handles=1)]
        members.extend(_sphere(m) for m in range(2, B + 1))
        members.extend(
            _sphere(r, s) for r in range(2, B + 1) for s in range(r, B + 1)
        )
        members.extend(_nonneg_pillows(B))
        members.append(_sphere(2, 2, 2, 2))
        return tuple(members)
    if kind is ClassKind.SPHERICAL_CONSTANT_CURVATURE:
        members = []
        for m in range(2, B + 1):
            members.append(_sphere(m, m))
            members.append(_sphere(2, 2, m))
            members.append(_mirrored((), (m, m)))
            members.append(_crosscapped((m,)))
            members.append(_mirrored((m,), ()))
            members.append(_mirrored((), (2, 2, m)))
            members.append(_mirrored((2,), (m,)))
        orders_of = lambda sig: (*sig.cone_points, *sig.corner_orders)
        members.extend(
            sig for sig in _SPHERICAL_FIXED if max(orders_of(sig)) <= B
        )
        return tuple(members)
    raise ValueError(f"unknown class kind {kind!r}")


def c_preimage(cls: OrbifoldClass, c_value) -> tuple:
    """All class members whose spectral constant equals c_value exactly."""
    target = Fraction(c_value)
    return tuple(sig for sig in enumerate_class(cls) if spectral_c(sig) == target)


@dataclass(frozen=True)
class CollisionPair:
    sig_a: OrbifoldSignature
    sig_b: OrbifoldSignature
    c: Fraction

    def to_json(self) -> dict:
        from .signature import rational_to_json

        return {
            "sig_a": render(self.sig_a),
            "sig_b": render(self.sig_b),
            "c": rational_to_json(self.c),
        }


def collision_groups(cls: OrbifoldClass) -> dict:
    """Members grouped by spectral constant, keeping only groups of size >= 2."""
    groups = {}
    for sig in enumerate_class(cls):
        groups.setdefault(spectral_c(sig), []).append(sig)
    return {c: tuple(sigs) for c, sigs in groups.items() if len(sigs) >= 2}


def injectivity_scan(cls: OrbifoldClass) -> tuple:
    """All unordered member pairs with equal c; empty means c is injective.

    The enumeration bound makes this a confirmation over the finite
    roster, not a proof for all orders.
    """
    pairs = []
    for c, sigs in sorted(collision_groups(cls).items()):
        for i in range(len(sigs)):
            for j in range(i + 1, len(sigs)):
                pairs.append(CollisionPair(sigs[i], sigs[j], c))
    return tuple(pairs)


@dataclass(frozen=True)
class PillowSeparation:
    """Outcome of the negative-pillow vs nonnegative-class c comparison."""

    distinguished: bool
    negative_member: OrbifoldSignature | None = None
    positive_member: OrbifoldSignature | None = None


def _solve_order_plus_reciprocal(w: Fraction):
    """The integer m >= 2 with m + 1/m = w, or None."""
    m = int(w)
    if m >= 2 and Fraction(m) + Fraction(1, m) == w:
        return m
    return None


def pillow_negative_vs_rest(c_value, bound: int | None = None) -> PillowSeparation:
    """Can c_value be attained both by a chi<0 pillow and by the chi>0 side?

    The chi>0 side is the teardrops plus the chi>0 triangular pillows.  A
    chi<0 pillow O(p, q, r) has c = (p+q+r-2) + h with h = 1/p+1/q+1/r in
    (0, 1), so the integer part of c pins p+q+r and the fractional part
    pins h; the remaining search over order triples with a fixed sum is
    finite, making the decision complete even with bound=None.  The chi>0
    attainments are solved exactly family by family.
    """
    c = Fraction(c_value)
    negative = None
    if c > 0 and c.denominator != 1:
        total = int(c) + 2
        h = c - (total - 2)
        rmax = total - 4 if bound is None else min(total - 4, bound)
        for p in range(2, total // 3 + 1):
            if negative:
                break
            for q in range(p, (total - p) // 2 + 1):
                r = total - p - q
                if r < q or r > rmax:
                    continue
                if Fraction(1, p) + Fraction(1, q) + Fraction(1, r) == h:
                    negative = _sphere(p, q, r)
                    break

    positive = None
    m = _solve_order_plus_reciprocal(c - 2)
    if m is not None:
        positive = _sphere(m)
    if positive is None:
        m = _solve_order_plus_reciprocal(c - 3)
        if m is not None:
            positive = _sphere(2, 2, m)
    if positive is None:
        for sig in (_sphere(2, 3, 3), _sphere(2, 3, 4), _sphere(2, 3, 5)):
            if spectral_c(sig) == c:
                positive = sig
                break

    if negative is not None and positive is not None:
        return PillowSeparation(False, negative, positive)
    return PillowSeparation(True, negative, positive)


def sph_hyp_lhs(p: int, q: int, r: int) -> int:
    """2pqr + pr(p+r-5) + pq(p+q-5) + qr(q+r-5).

    Positive for every chi<0 order triple; this is the quantity whose
    positivity powers the pillow separation argument.
    """
    return (
        2 * p * q * r
        + p * r * (p + r - 5)
        + p * q * (p + q - 5)
        + q * r * (q + r - 5)
    )


def curvature_sign(expansion: HeatExpansion, abs_K, sig: OrbifoldSignature) -> CurvatureSign:
    """Recover the sign of the constant curvature +-abs_K from an expansion.

    The degree -1 coefficient recovers the area; subtracting the smooth
    degree-1 part abs_K^2 * area / (60 pi) leaves K times a positive
    combination of cone/corner sums, whose sign is the answer whenever
    singular points exist.  For smooth signatures that remainder is
    identically zero and the (exact) degree-0 coefficient chi/6 decides.
    Raises AmbiguousZero when both tests vanish.
    """
    a = float(abs_K)
    if not (a > 0) or not math.isfinite(a):
        raise ValueError(f"abs_K must be finite and > 0, got {abs_K!r}")
    deg_m1 = expansion.as_float(-1)
    deg_1 = expansion.as_float(1)
    smooth_part = a * a * deg_m1 / 15.0
    remainder = deg_1 - smooth_part
    scale = max(1.0, abs(deg_1), abs(smooth_part))
    if abs(remainder) > 1e-9 * scale:
        return CurvatureSign.POSITIVE if remainder > 0 else CurvatureSign.NEGATIVE
    if not sig.cone_points and not sig.corner_orders:
        deg_0 = expansion.degree_zero
        if deg_0 > 0:
            return CurvatureSign.POSITIVE
        if deg_0 < 0:
            return CurvatureSign.NEGATIVE
    raise AmbiguousZero(
        "degree-1 remainder and smooth degree-0 test both vanish; "
        "cannot recover the curvature sign"
    )


# Number of reflection great circles on the unit sphere for each supported
# mirrored spherical family, derived by orbit counting and validated against
# the spherical-triangle-perimeter oracle in the tests.
def _reflection_circles(sig: OrbifoldSignature):
    if sig.handles or sig.crosscaps or len(sig.mirror_boundaries) != 1:
        return None
    cones = sig.cone_points
    corners = sig.mirror_boundaries[0]
    if not cones:
        if len(corners) == 2 and corners[0] == corners[1]:
            return corners[0]  # (*m,m)
        if len(corners) == 3 and corners[:2] == (2, 2):
            return corners[2] + 1  # (*2,2,m)
        if corners == (2, 3, 3):
            return 6  # (*2,3,3)
        return None
    if len(cones) == 1 and not corners:
        return 1  # (m*)
    if cones == (2,) and len(corners) == 1:
        return corners[0]  # (2,*m)
    if cones == (3,) and corners == (2,):
        return 3  # (3,*2)
    return None


def _unit_length_over_pi(sig: OrbifoldSignature) -> Fraction:
    k = _reflection_circles(sig)
    if k is None:
        raise UnsupportedFamily(
            f"no mirror-length table entry for signature {render(sig) or 'sphere'!r}"
        )
    # Total mirror length is 4 pi k / |Gamma| with |Gamma| = 2 / chi: each of
    # the k great circles (length 2 pi, total 2 pi k) is folded by the index-2
    # generic mirror-point stabilizer, leaving 2 pi k * (2 / |Gamma|) / 2.
    return 2 * Fraction(k) * euler_characteristic(sig)


def unit_sphere_mirror_length(sig: OrbifoldSignature) -> float:
    """Mirror-locus length of the K = 1 structure on a supported family.

    Supported: (*m,m), (m*), (*2,2,m), (2,*m), (*2,3,3) and (3,*2); other
    signatures raise UnsupportedFamily.
    """
    return float(_unit_length_over_pi(sig)) * math.pi


def spherical_distinguish(a: OrbifoldSignature, b: OrbifoldSignature) -> Verdict:
    """How the spectrum separates two spherical constant-curvature orbifolds.

    ByC when the exact spectral constants differ; otherwise
    ByMirrorPresence when exactly one has a mirror locus (the degree -1/2
    term); otherwise ByMirrorLength when the unit-sphere mirror lengths
    differ.  NotDistinguished only for identical signatures.
    """
    if spectral_c(a) != spectral_c(b):
        return Verdict.BY_C
    if a.has_mirrors != b.has_mirrors:
        return Verdict.BY_MIRROR_PRESENCE
    if a.has_mirrors and b.has_mirrors:
        if _unit_length_over_pi(a) != _unit_length_over_pi(b):
            return Verdict.BY_MIRROR_LENGTH
    return Verdict.NOT_DISTINGUISHED


def positive_vs_zero_chi(a: OrbifoldSignature, b: OrbifoldSignature) -> Verdict:
    """Does the spectrum separate chi > 0 from chi = 0 for this pair?

    Both signatures must have chi >= 0.  The exact constant c decides
    except for the handful of cross-sign c-collisions, all of which pit a
    mirrorless orbifold against a mirrored one and fall to the degree -1/2
    test.
    """
    for sig in (a, b):
        if euler_characteristic(sig) < 0:
            raise ValueError(
                f"signature {render(sig) or 'sphere'!r} has chi < 0; "
                "this comparison covers chi >= 0 only"
            )
    if spectral_c(a) != spectral_c(b):
        return Verdict.BY_C
    if a.has_mirrors != b.has_mirrors:
        return Verdict.BY_MIRROR_PRESENCE
    return Verdict.NOT_DISTINGUISHED
