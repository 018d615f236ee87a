from fractions import Fraction
import numpy as np
import pytest
import sympy as sp
from lgr import lgr_catalog as catalog
from lgr.lgr_algebra import Vector
from lgr.lgr_errors import (
    DegenerateDenominator,
    DegenerateFlag,
    DriftTooLarge,
    NotBerwald,
    ZeroPole,
    subscribe_errors,
)
from lgr.lgr_field import EXACT, FLOAT
from lgr.lgr_geometry import InnerProduct, curvature, levi_civita, sectional_curvature
from lgr.lgr_randers import (
    Flag,
    FundamentalTensor,
    build,
    closed_form_curvature_case1,
    closed_form_curvature_case2,
    closed_form_flag_case1,
    closed_form_flag_case2,
    closed_form_fundamental_case1,
    closed_form_fundamental_case2,
    closed_form_numerator_case1,
    closed_form_numerator_case2,
    evaluate,
    flag_curvature,
    fundamental_tensor,
    is_berwald,
    oracle_flag_curvature,
)
from lgr.lgr_sweep import (
    berwald_drift,
    random_flag,
    random_orthonormal_pair,
    random_q,
    random_unit,
    random_vector,
    run_sweep,
)

X, Y, Z, W = range(4)
DRIFT_AXIS = {"case1": X, "case2": W}
CLOSED_FORMS = {"case1": closed_form_flag_case1, "case2": closed_form_flag_case2}


def setup(name, field=EXACT):
    entry = catalog.get(name, field)
    return entry.algebra, entry.metric, levi_civita(entry.algebra, entry.metric)


def rational(x):
    x = Fraction(x)
    return sp.Rational(x.numerator, x.denominator)


def half_f_squared(g, drift, y, u, v):
    """F^2(y + s u + t v) / 2 as a sympy expression in s, t."""
    s, t = sp.symbols("s t")
    p = [rational(a) + s * rational(b) + t * rational(c) for a, b, c in zip(y, u, v)]
    gram = sp.Matrix([[rational(x) for x in row] for row in g.gram])
    vec = sp.Matrix(p)
    alpha = sp.sqrt((vec.T * gram * vec)[0, 0])
    beta = (sp.Matrix([[rational(x) for x in drift]]) * gram * vec)[0, 0]
    return (alpha + beta) ** 2 / 2, s, t


def test_randers_values():
    g = catalog.get("case1").metric
    F = build(g, Vector([Fraction(1, 2), 0, 0, 0]))
    assert evaluate(F, Vector([Fraction(3, 5), Fraction(4, 5), 0, 0])) == Fraction(13, 10)
    assert F(Vector([-1, 0, 0, 0])) == Fraction(1, 2)
    assert evaluate(F, Vector([0, 0, 0, 0])) == 0
    assert not F.riemannian
    assert build(g, Vector([0, 0, 0, 0])).riemannian


def test_drift_too_large():
    g = catalog.get("case1").metric
    with pytest.raises(DriftTooLarge):
        build(g, Vector([1, 0, 0, 0]))
    with pytest.raises(DriftTooLarge) as e:
        build(g, Vector([1, 1, 0, 0]))
    assert "1.414" in str(e.value)


def test_fundamental_tensor_homogeneity():
    g = catalog.get("case2").metric
    rng = np.random.default_rng(2)
    for _ in range(20):
        F = build(g, Vector([0, 0, 0, random_q(rng, EXACT)]))
        y = random_unit(rng, EXACT, 4)
        u = random_vector(rng, EXACT, 4)
        gy = FundamentalTensor(F, y)
        assert gy(y, y) == F(y) ** 2
        assert gy(u, y) == gy(y, u)
        assert FundamentalTensor(F, y.scale(3))(u, u) == gy(u, u)


def test_fundamental_tensor_symbolic_oracle():
    g = catalog.get("case1").metric
    rng = np.random.default_rng(3)
    for _ in range(8):
        drift = Vector([random_q(rng, EXACT), 0, 0, 0])
        y = random_unit(rng, EXACT, 4)
        u = random_vector(rng, EXACT, 4)
        v = random_vector(rng, EXACT, 4)
        expr, s, t = half_f_squared(g, drift, y, u, v)
        want = sp.diff(expr, s, t).subs({s: 0, t: 0})
        got = fundamental_tensor(build(g, drift), y, u, v)
        assert isinstance(got, Fraction)
        assert sp.simplify(want - rational(got)) == 0


def test_fundamental_tensor_finite_differences():
    # non-unit poles: exact mode falls back to float for sqrt(g(y,y))
    g = catalog.get("case2").metric
    rng = np.random.default_rng(4)
    h = sp.Rational(1, 10 ** 12)
    for _ in range(5):
        drift = Vector([0, 0, 0, random_q(rng, EXACT)])
        y = random_vector(rng, EXACT, 4)
        u = random_vector(rng, EXACT, 4)
        v = random_vector(rng, EXACT, 4)
        expr, s, t = half_f_squared(g, drift, y, u, v)

        def f(a, b):
            return expr.subs({s: a, t: b})

        mixed = (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) / (4 * h * h)
        want = float(mixed.evalf(60))
        with subscribe_errors(lambda msg: None):
            got = fundamental_tensor(build(g, drift), y, u, v)
        assert got == pytest.approx(want, rel=1e-10, abs=1e-10)


def test_is_berwald():
    alg, g, conn = setup("case1")
    assert is_berwald(build(g, Vector([Fraction(1, 2), 0, 0, 0])), conn)
    assert not is_berwald(build(g, Vector([0, Fraction(1, 2), 0, 0])), conn)
    alg, g, conn = setup("case2")
    assert is_berwald(build(g, Vector([0, 0, 0, Fraction(-1, 3)])), conn)


def test_printed_flag_values():
    alg, g, conn = setup("case1")
    e = [alg.basis(i) for i in range(4)]
    F = build(g, alg.zero())
    assert flag_curvature(F, alg, conn, Flag(e[Y], e[Z], EXACT)) == Fraction(1, 4)
    alg, g, conn = setup("case2")
    F = build(g, alg.zero())
    assert flag_curvature(F, alg, conn, Flag(e[X], e[Y], EXACT)) == -1


@pytest.mark.parametrize("case", ["case1", "case2"])
def test_flag_curvature_matches_closed_form(case):
    alg, g, conn = setup(case)
    rng = np.random.default_rng(17)
    qs = [random_q(rng, EXACT) for _ in range(20)]
    for index in range(500):
        q = qs[index % 20]
        U, V = random_orthonormal_pair(rng, EXACT)
        assert g(U, U) == 1 and g(V, V) == 1 and g(U, V) == 0
        F = build(g, alg.basis(DRIFT_AXIS[case]).scale(q))
        K = flag_curvature(F, alg, conn, Flag(U, V, EXACT))
        assert K == CLOSED_FORMS[case](q, *U, *V)
        if case == "case1":
            assert K >= 0
        else:
            assert K <= 0


@pytest.mark.parametrize("case", ["case1", "case2"])
def test_flag_curvature_matches_oracle_on_any_flag(case):
    alg, g, conn = setup(case)
    rng = np.random.default_rng(23)
    for _ in range(50):
        q = random_q(rng, EXACT)
        flag = random_flag(rng, EXACT, 4)
        F = build(g, alg.basis(DRIFT_AXIS[case]).scale(q))
        assert flag_curvature(F, alg, conn, flag) == oracle_flag_curvature(case, q, g, flag)


def test_printed_fundamental_tensor_and_numerator():
    rng = np.random.default_rng(29)
    for case, axis in DRIFT_AXIS.items():
        alg, g, conn = setup(case)
        for _ in range(30):
            q = random_q(rng, EXACT)
            U, V = random_orthonormal_pair(rng, EXACT)
            F = build(g, alg.basis(axis).scale(q))
            gu = FundamentalTensor(F, U)
            triple = (gu(U, U), gu(V, V), gu(U, V))
            if case == "case1":
                assert triple == closed_form_fundamental_case1(q, U[X], V[X])
                numerator = closed_form_numerator_case1(q, *U, *V)
            else:
                assert triple == closed_form_fundamental_case2(q, U[W], V[W])
                numerator = closed_form_numerator_case2(q, *U, *V)
            assert gu(curvature(conn, alg, V, U, U), V) == numerator


def test_degenerate_denominator():
    with pytest.raises(DegenerateDenominator):
        closed_form_flag_case1(-1, 1, 0, 0, 0, 0, 1, 0, 0)
    with pytest.raises(DegenerateDenominator):
        closed_form_flag_case2(Fraction(1, 2), 0, 0, 0, -2, 1, 0, 0, 0)


def test_abelian_berwald_flat():
    alg, g, conn = setup("abelian")
    rng = np.random.default_rng(31)
    for _ in range(20):
        drift = Vector(x / 3 for x in random_unit(rng, EXACT, 4))
        F = build(g, drift)
        assert is_berwald(F, conn)
        assert flag_curvature(F, alg, conn, random_flag(rng, EXACT, 4)) == 0


def test_flag_errors():
    alg, g, conn = setup("case1")
    e = [alg.basis(i) for i in range(4)]
    with pytest.raises(DegenerateFlag):
        Flag(e[Y], e[Y].scale(-3), EXACT)
    with pytest.raises(DegenerateFlag):
        Flag(alg.zero(), e[Y], EXACT)
    with pytest.raises(ZeroPole):
        FundamentalTensor(build(g, alg.zero()), alg.zero())
    with pytest.raises(NotBerwald):
        flag_curvature(build(g, e[Z].scale(Fraction(1, 2))), alg, conn, Flag(e[Y], e[Z], EXACT))


def test_flag_curvature_depends_on_plane_and_pole_only():
    alg, g, conn = setup("case1")
    F = build(g, alg.basis(X).scale(Fraction(1, 3)))
    pole = Vector([Fraction(1, 3), Fraction(2, 3), Fraction(2, 3), 0])
    transverse = Vector([0, 1, -1, 1])
    K = flag_curvature(F, alg, conn, Flag(pole, transverse, EXACT))
    moved = transverse.scale(-2) + pole.scale(5)
    assert flag_curvature(F, alg, conn, Flag(pole.scale(3), moved, EXACT)) == K


def test_exact_mode_falls_back_to_float():
    alg, g, conn = setup("case1")
    F = build(g, alg.zero())
    notes = []
    with subscribe_errors(notes.append):
        K = flag_curvature(F, alg, conn, Flag(Vector([0, 1, 1, 0]), alg.basis(W), EXACT))
    assert isinstance(K, float)
    assert EXACT.mode_of(K) == "float"
    assert any(note.startswith("note: ") for note in notes)
    # plane {Y+Z, W} of the round factor
    assert K == pytest.approx(0.25)


def test_float_mode_agrees_with_exact():
    alg, g, conn = setup("case2")
    falg, fg, fconn = setup("case2", FLOAT)
    rng = np.random.default_rng(37)
    for _ in range(20):
        q = random_q(rng, EXACT)
        flag = random_flag(rng, EXACT, 4)
        exact = flag_curvature(build(g, alg.basis(W).scale(q)), alg, conn, flag)
        fflag = Flag(flag.pole.convert(FLOAT), flag.transverse.convert(FLOAT), FLOAT)
        approx = flag_curvature(build(fg, falg.basis(W).scale(float(q))), falg, fconn, fflag)
        assert approx == pytest.approx(float(exact), rel=1e-9, abs=1e-12)


@pytest.mark.parametrize("case", ["case1", "case2"])
def test_flag_curvature_matches_closed_form_float(case):
    alg, g, conn = setup(case, FLOAT)
    rng = np.random.default_rng(19)
    for _ in range(200):
        q = random_q(rng, FLOAT)
        U, V = random_orthonormal_pair(rng, FLOAT)
        F = build(g, alg.basis(DRIFT_AXIS[case]).scale(q))
        K = flag_curvature(F, alg, conn, Flag(U, V, FLOAT))
        assert K == pytest.approx(CLOSED_FORMS[case](q, *U, *V), rel=1e-9, abs=1e-12)


def central_mixed_difference(g, drift, y, u, v, h):
    """(1/2) d^2 F^2 / ds dt by central differences, in 40-digit floats."""
    gram = [[sp.Float(x, 40) for x in row] for row in g.gram]
    b = [sp.Float(x, 40) for x in drift]

    def half_f2(s, t):
        p = [sp.Float(a, 40) + s * sp.Float(c, 40) + t * sp.Float(d, 40) for a, c, d in zip(y, u, v)]
        n = len(p)
        alpha = sp.sqrt(sum(p[i] * gram[i][j] * p[j] for i in range(n) for j in range(n)))
        beta = sum(b[i] * gram[i][j] * p[j] for i in range(n) for j in range(n))
        return (alpha + beta) ** 2 / 2

    h = sp.Float(h, 40)
    return (half_f2(h, h) - half_f2(h, -h) - half_f2(-h, h) + half_f2(-h, -h)) / (4 * h * h)


def test_fundamental_tensor_central_differences():
    g = catalog.get("case1").metric.with_field(FLOAT)
    rng = np.random.default_rng(41)
    for _ in range(200):
        drift = Vector([random_q(rng, FLOAT), 0.0, 0.0, 0.0])
        y, u, v = (random_vector(rng, FLOAT, 4) for _ in range(3))
        got = fundamental_tensor(build(g, drift), y, u, v)
        want = float(central_mixed_difference(g, drift, y, u, v, 1e-5))
        assert got == pytest.approx(want, rel=1e-6, abs=1e-9)


@pytest.mark.parametrize("name", catalog.NAMES)
def test_zero_drift_gives_sectional_curvature(name):
    alg, g, conn = setup(name)
    F = build(g, alg.zero())
    rng = np.random.default_rng(43)
    for _ in range(100):
        flag = random_flag(rng, EXACT, 4)
        K = flag_curvature(F, alg, conn, flag)
        assert K == sectional_curvature(g, conn, alg, flag.pole, flag.transverse)


def test_printed_curvature_vectors():
    rng = np.random.default_rng(61)
    forms = {"case1": closed_form_curvature_case1, "case2": closed_form_curvature_case2}
    for case, form in forms.items():
        alg, g, conn = setup(case)
        for _ in range(50):
            U = random_vector(rng, EXACT, 4)
            V = random_vector(rng, EXACT, 4)
            assert curvature(conn, alg, V, U, U) == form(*U, *V)
        U, V = random_orthonormal_pair(rng, EXACT)
        numerator = closed_form_numerator_case1 if case == "case1" else closed_form_numerator_case2
        assert g(form(*U, *V), V) == numerator(0, *U, *V)


def test_randers_homogeneous_and_positive():
    rng = np.random.default_rng(67)
    for case, axis in DRIFT_AXIS.items():
        alg, g, conn = setup(case)
        for _ in range(50):
            F = build(g, alg.basis(axis).scale(random_q(rng, EXACT)))
            y = random_unit(rng, EXACT, 4)
            lam = Fraction(int(rng.integers(1, 20)), int(rng.integers(1, 20)))
            assert evaluate(F, y.scale(lam)) == lam * evaluate(F, y)
            u = random_vector(rng, EXACT, 4)
            if u.is_zero(EXACT):
                continue
            with subscribe_errors(lambda msg: None):
                assert evaluate(F, u) > 0


def test_berwald_drift_is_g_unit():
    alg = catalog.get("case1").algebra
    g = InnerProduct([[4, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], EXACT)
    conn = levi_civita(alg, g)
    drift = berwald_drift(conn, g, Fraction(1, 2))
    assert drift == Vector([Fraction(1, 4), 0, 0, 0])
    assert g(drift, drift) == Fraction(1, 4)
    assert berwald_drift(conn, g, 0).is_zero(EXACT)
    with pytest.raises(NotBerwald):
        berwald_drift(setup("case3")[2], catalog.get("case3").metric, Fraction(1, 2))


def test_sweep_with_non_identity_metric():
    alg = catalog.get("case1").algebra
    g = InnerProduct([[4, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], EXACT)
    with subscribe_errors(lambda msg: None):
        results, summary = run_sweep("case1", alg, g, 50, seed=7)
    assert len(results) == 50
    # still a product with the round factor
    assert summary.negative == 0


@pytest.mark.parametrize("case", ["case1", "case2"])
def test_sign_theorems_on_1000_flags(case):
    entry = catalog.get(case)
    results, summary = run_sweep(case, entry.algebra, entry.metric, 1000, seed=71)
    assert summary.samples == 1000
    if case == "case1":
        assert summary.negative == 0
    else:
        assert summary.positive == 0


def test_sign_theorem_float_mode():
    entry = catalog.get("case1", FLOAT)
    results, summary = run_sweep("case1", entry.algebra, entry.metric, 1000, seed=73)
    assert summary.samples == 1000
    assert summary.minimum >= -1e-9
