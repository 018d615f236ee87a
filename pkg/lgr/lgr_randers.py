"""
Left-invariant Randers metrics F(y) = sqrt(g(y,y)) + g(X, y) built from a
left-invariant metric g and a left-invariant drift field X, their
fundamental tensor and flag curvature.

When X is parallel the metric is of Berwald type: its Chern connection is
the Levi-Civita connection of g, so the curvature tensors of F and g
coincide and the flag curvature is

    K(P, Y) = g_Y(R(U,Y)Y, U) / (g_Y(Y,Y) g_Y(U,U) - g_Y(Y,U)^2),   P = span{U, Y}.

The fundamental tensor uses the Randers closed form

    g_Y(u,v) = (F/a) [g(u,v) - g(Y,u) g(Y,v) / a^2]
               + (g(Y,u)/a + g(X,u)) (g(Y,v)/a + g(X,v)),      a = sqrt(g(Y,Y)).

In exact mode a must be rational; otherwise the computation continues in
floating point and the switch is reported through notice().
"""

import math
from lgr.lgr_algebra import Vector
from lgr.lgr_errors import (
    DegenerateDenominator,
    DegenerateFlag,
    DimensionMismatch,
    DriftTooLarge,
    NotBerwald,
    ZeroPole,
    ensure,
)
from lgr.lgr_geometry import covariant_derivative, curvature


class RandersMetric:
    """F(y) = sqrt(g(y,y)) + g(drift, y) with ||drift||_g < 1."""

    __slots__ = ("g", "drift", "field")

    def __init__(self, g, drift):
        ensure(len(drift) == g.dim, DimensionMismatch, expected=g.dim, got=len(drift))
        field = g.field
        drift = drift.convert(field)
        norm_sq = g(drift, drift)
        if not norm_sq < 1:
            norm = field.sqrt(norm_sq)
            if norm is None:
                norm = math.sqrt(norm_sq)
            raise DriftTooLarge(norm=field.format(norm))
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "drift", drift)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("RandersMetric is immutable")

    @property
    def riemannian(self):
        return self.drift.is_zero(self.field)

    def __call__(self, y):
        return evaluate(self, y)

    def __repr__(self):
        return "RandersMetric(drift=%r)" % (self.drift,)


class Flag:
    """Flagpole Y and a transverse U spanning P = span{U, Y}."""

    __slots__ = ("pole", "transverse")

    def __init__(self, pole, transverse, field):
        ensure(len(pole) == len(transverse), DimensionMismatch, expected=len(pole), got=len(transverse))
        ensure(not pole.is_zero(field), DegenerateFlag, reason="the flagpole is zero")
        n = len(pole)
        independent = any(
            not field.is_zero(pole[i] * transverse[j] - pole[j] * transverse[i])
            for i in range(n)
            for j in range(i + 1, n)
        )
        ensure(independent, DegenerateFlag, reason="pole and transverse are linearly dependent")
        object.__setattr__(self, "pole", pole)
        object.__setattr__(self, "transverse", transverse)

    def __setattr__(self, name, value):
        raise AttributeError("Flag is immutable")

    def __repr__(self):
        return "Flag(pole=%r, transverse=%r)" % (self.pole, self.transverse)


def build(g, drift):
    """Randers metric from g and drift; DriftTooLarge when ||drift|| >= 1."""
    return RandersMetric(g, drift)


def evaluate(F, y):
    alpha_sq = F.g(y, y)
    if F.field.is_zero(alpha_sq):
        return F.field.zero
    return F.field.root(alpha_sq, "g(y,y)") + F.g(F.drift, y)


def is_berwald(F, conn):
    """True iff the drift is parallel for the Levi-Civita connection."""
    alg = conn.algebra
    for i in range(conn.dim):
        if not covariant_derivative(conn, alg.basis(i), F.drift).is_zero(F.field):
            return False
    return True


class FundamentalTensor:
    """g_Y at a fixed nonzero pole, with the pole-dependent terms
    computed once."""

    def __init__(self, F, y):
        field = F.field
        self.F = F
        self.y = y
        alpha_sq = F.g(y, y)
        ensure(not field.is_zero(alpha_sq), ZeroPole)
        self.alpha = field.root(alpha_sq, "g(Y,Y)")
        self.value = self.alpha + F.g(F.drift, y)
        self.ratio = self.value / self.alpha

    def _l(self, u):
        # g(Y,u)/a + g(X,u)
        return self.F.g(self.y, u) / self.alpha + self.F.g(self.F.drift, u)

    def __call__(self, u, v):
        g = self.F.g
        yu = g(self.y, u)
        yv = g(self.y, v)
        h = g(u, v) - yu * yv / (self.alpha * self.alpha)
        return self.ratio * h + self._l(u) * self._l(v)


def fundamental_tensor(F, y, u, v):
    """(1/2) d^2/ds dt F^2(y + s u + t v) at s = t = 0."""
    return FundamentalTensor(F, y)(u, v)


def flag_curvature(F, alg, conn, flag):
    ensure(
        is_berwald(F, conn),
        NotBerwald,
        reason="drift is not parallel, F is not of Berwald type",
    )
    y, u = flag.pole, flag.transverse
    gy = FundamentalTensor(F, y)
    num = gy(curvature(conn, alg, u, y, y), u)
    den = gy(y, y) * gy(u, u) - gy(y, u) ** 2
    ensure(not F.field.is_zero(den), DegenerateFlag, reason="g_Y restricted to the flag is degenerate")
    return num / den


# Printed closed forms for the two Berwald cases. (U, V) is g-orthonormal,
# U = aX + bY + cZ + dW, V = a~X + b~Y + c~Z + d~W, drift = qX (case 1) or
# qW (case 2).


def _minors_case1(b, c, d, b_, c_, d_):
    return (b * c_ - c * b_) ** 2 + (b * d_ - d * b_) ** 2 + (c * d_ - d * c_) ** 2


def _minors_case2(a, b, c, a_, b_, c_):
    return (a * b_ - b * a_) ** 2 + (a * c_ - c * a_) ** 2 + (b * c_ - c * b_) ** 2


def closed_form_flag_case1(q, a, b, c, d, a_, b_, c_, d_):
    s = 1 + a * q
    if s == 0:
        raise DegenerateDenominator(name="1 + aq")
    return _minors_case1(b, c, d, b_, c_, d_) / (4 * s * s)


def closed_form_flag_case2(q, a, b, c, d, a_, b_, c_, d_):
    s = 1 + d * q
    if s == 0:
        raise DegenerateDenominator(name="1 + dq")
    return -_minors_case2(a, b, c, a_, b_, c_) / (s * s)


def closed_form_numerator_case1(q, a, b, c, d, a_, b_, c_, d_):
    """g_U(R(V,U)U, V)"""
    return (1 + a * q) * _minors_case1(b, c, d, b_, c_, d_) / 4


def closed_form_numerator_case2(q, a, b, c, d, a_, b_, c_, d_):
    return -(1 + d * q) * _minors_case2(a, b, c, a_, b_, c_)


def closed_form_curvature_case1(a, b, c, d, a_, b_, c_, d_):
    """R(V,U)U = -1/4 {(bc~ - cb~)(cY - bZ) + (bd~ - db~)(dY - bW)
    + (cd~ - dc~)(dZ - cW)}, as coordinates on X, Y, Z, W."""
    bc = b * c_ - c * b_
    bd = b * d_ - d * b_
    cd = c * d_ - d * c_
    return Vector(
        [
            0 * a,
            -(bc * c + bd * d) / 4,
            -(cd * d - bc * b) / 4,
            (bd * b + cd * c) / 4,
        ]
    )


def closed_form_curvature_case2(a, b, c, d, a_, b_, c_, d_):
    """R(V,U)U = -{(ab~ - ba~)(aY - bX) + (ac~ - ca~)(aZ - cX)
    + (bc~ - cb~)(bZ - cY)}"""
    ab = a * b_ - b * a_
    ac = a * c_ - c * a_
    bc = b * c_ - c * b_
    return Vector(
        [
            ab * b + ac * c,
            bc * c - ab * a,
            -(ac * a + bc * b),
            0 * d,
        ]
    )


def closed_form_fundamental_case1(q, a, a_):
    """(g_U(U,U), g_U(V,V), g_U(U,V))"""
    s = 1 + a * q
    return s * s, s + (a_ * q) ** 2, a_ * q * s


def closed_form_fundamental_case2(q, d, d_):
    s = 1 + d * q
    return s * s, s + (d_ * q) ** 2, d_ * q * s


CLOSED_FORMS = {
    "case1": closed_form_flag_case1,
    "case2": closed_form_flag_case2,
}


def orthonormalize(g, flag):
    """Gram-Schmidt of (pole, transverse) in g. Returns (U, V, v_norm_sq)
    with U unit and V orthogonal to U but not normalized, so that exact
    mode only needs the square root of g(pole, pole)."""
    field = g.field
    pole, transverse = flag.pole, flag.transverse
    norm = field.root(g(pole, pole), "g(pole,pole)")
    unit = Vector(x / norm for x in pole)
    v = transverse - g(transverse, unit) * unit
    return unit, v, g(v, v)


def oracle_flag_curvature(case, q, g, flag):
    """Flag curvature of the catalog Randers metric (drift along X for
    case1, along W for case2) from the printed closed forms.

    The catalog basis is g-orthonormal, so components are coordinates.
    K(P, U) only depends on the plane and the unit pole; scaling V by
    lambda scales the closed form by lambda^2, which is divided out.
    """
    closed_form = CLOSED_FORMS[case]
    unit, v, v_norm_sq = orthonormalize(g, flag)
    ensure(not g.field.is_zero(v_norm_sq), DegenerateFlag, reason="pole and transverse are dependent")
    return closed_form(q, *unit.coords, *v.coords) / v_norm_sq
