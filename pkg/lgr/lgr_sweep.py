"""
Seeded sampling of flags and drift coefficients, and flag-curvature sweeps.

Exact mode draws rational unit poles (inverse stereographic projection of a
rational point) so that sqrt(g(Y,Y)) stays rational and the whole pipeline
runs without rounding; float mode draws Gaussian vectors.
"""

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
import numpy as np
from lgr.lgr_algebra import Vector
from lgr.lgr_errors import DegenerateFlag, NotBerwald
from lgr.lgr_geometry import levi_civita, parallel_fields
from lgr.lgr_hypercomplex import quaternion_product
from lgr.lgr_randers import Flag, build, flag_curvature
from lgr.lgr_render import FlagResult

NO_BERWALD_DRIFT = "no parallel drift; Berwald Randers metric does not exist"


def random_rational(rng, bound=9):
    return Fraction(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, bound + 1)))


def random_vector(rng, field, dim):
    if field.exact:
        return Vector(random_rational(rng) for _ in range(dim))
    return Vector(float(x) for x in rng.standard_normal(dim))


def _stereographic(t):
    s = sum(x * x for x in t)
    d = s + 1
    return [2 * x / d for x in t] + [(s - 1) / d]


def random_unit(rng, field, dim):
    """Unit vector for the identity metric; rational in exact mode."""
    if field.exact:
        return Vector(_stereographic([random_rational(rng) for _ in range(dim - 1)]))
    x = rng.standard_normal(dim)
    return Vector(float(v) for v in x / np.linalg.norm(x))


def random_q(rng, field):
    """Drift coefficient in (-1, 1) without 0."""
    if field.exact:
        n = 0
        while n == 0:
            n = int(rng.integers(-63, 64))
        return Fraction(n, 64)
    q = 0.0
    while abs(q) < 1e-6:
        q = float(rng.uniform(-1.0, 1.0))
    return q


def random_flag(rng, field, dim):
    pole = random_unit(rng, field, dim)
    while True:
        transverse = random_vector(rng, field, dim)
        try:
            return Flag(pole, transverse, field)
        except DegenerateFlag:
            continue


def random_orthonormal_pair(rng, field):
    """(U, V) orthonormal for the identity metric on R^4.

    Exact mode: U a rational unit quaternion, V = U p with p a rational unit
    imaginary quaternion, so V is orthogonal to U and of norm 1.
    """
    if field.exact:
        u = _stereographic([random_rational(rng) for _ in range(3)])
        s = _stereographic([random_rational(rng) for _ in range(2)])
        p = (Fraction(0), s[0], s[1], s[2])
        return Vector(u), Vector(quaternion_product(u, p))
    while True:
        a = rng.standard_normal(4)
        b = rng.standard_normal(4)
        a = a / np.linalg.norm(a)
        b = b - np.dot(a, b) * a
        norm = np.linalg.norm(b)
        if norm > 1e-6:
            return Vector(float(x) for x in a), Vector(float(x) for x in b / norm)


def unit_parallel(conn, g):
    """First canonical parallel field divided by its g-norm; NotBerwald
    when the connection has no parallel field."""
    parallel = parallel_fields(conn)
    if not parallel:
        raise NotBerwald(reason=NO_BERWALD_DRIFT)
    p = parallel[0]
    return p.scale(1 / g.field.root(g(p, p), "g(p,p)"))


def berwald_drift(conn, g, q):
    """q times the g-unit first parallel field; NotBerwald when q != 0
    and the connection has no parallel field."""
    if q == 0:
        return Vector.zero(conn.dim, conn.field)
    return unit_parallel(conn, g).scale(q)


class SweepSummary:
    def __init__(self, case, field, values):
        self.case = case
        self.field = field
        self.samples = len(values)
        self.minimum = min(values) if values else field.zero
        self.maximum = max(values) if values else field.zero
        signs = [field.sign(v) for v in values]
        self.positive = signs.count(1)
        self.zero = signs.count(0)
        self.negative = signs.count(-1)

    def as_dict(self):
        fmt = self.field.format
        return {
            "case": self.case,
            "samples": self.samples,
            "min": fmt(self.minimum),
            "max": fmt(self.maximum),
            "positive": self.positive,
            "zero": self.zero,
            "negative": self.negative,
        }


def run_sweep(case, alg, g, samples, seed=0, jobs=1):
    """Flag curvature of random Berwald Randers metrics on random flags.

    Samples are drawn up front from one generator, so results do not
    depend on jobs; records come back in index order.
    """
    field = alg.field
    conn = levi_civita(alg, g)
    unit = unit_parallel(conn, g)
    rng = np.random.default_rng(seed)
    tasks = []
    for _ in range(samples):
        q = random_q(rng, field)
        flag = random_flag(rng, field, alg.dim)
        tasks.append((q, flag))

    def evaluate(task):
        q, flag = task
        F = build(g, unit.scale(q))
        return FlagResult(case, q, flag, flag_curvature(F, alg, conn, flag), field)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(evaluate, tasks))
    else:
        results = [evaluate(task) for task in tasks]
    return results, SweepSummary(case, field, [r.value for r in results])
