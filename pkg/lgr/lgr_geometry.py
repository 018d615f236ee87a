"""
Levi-Civita connection, curvature and parallel fields of a left-invariant
metric, all computed on the Lie algebra.

A left-invariant metric is determined by its Gram matrix on the algebra,
and for left-invariant fields the Koszul formula reduces to

    2 g(nabla_U V, W) = g([U,V],W) - g([V,W],U) + g([W,U],V).

Curvature uses R(u,v)w = nabla_u nabla_v w - nabla_v nabla_u w - nabla_[u,v] w.
"""

from lgr.lgr_algebra import Vector, bracket
from lgr.lgr_errors import (
    DegenerateFlag,
    DimensionMismatch,
    InvalidMetric,
    ValidationReport,
    ensure,
)
from lgr.lgr_linalg import identity, inverse, is_positive_definite, nullspace


class InnerProduct:
    """Symmetric positive-definite Gram matrix g(e_i, e_j)."""

    __slots__ = ("gram", "inverse", "dim", "field")

    def __init__(self, gram, field):
        dim = len(gram)
        for row in gram:
            ensure(len(row) == dim, DimensionMismatch, expected=dim, got=len(row))
        gram = tuple(tuple(field.coerce(x) for x in row) for row in gram)
        for i in range(dim):
            for j in range(i + 1, dim):
                ensure(
                    field.equal(gram[i][j], gram[j][i]),
                    InvalidMetric,
                    reason="Gram matrix is not symmetric at (%d, %d)" % (i, j),
                )
        ensure(
            is_positive_definite(gram, field),
            InvalidMetric,
            reason="Gram matrix is not positive definite",
        )
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "field", field)
        object.__setattr__(
            self, "inverse", tuple(tuple(field.coerce(x) for x in row) for row in inverse(gram, field))
        )

    def __setattr__(self, name, value):
        raise AttributeError("InnerProduct is immutable")

    @classmethod
    def identity(cls, dim, field):
        return cls(identity(dim, field), field)

    def with_field(self, field):
        if field == self.field:
            return self
        return InnerProduct(self.gram, field)

    def scaled(self, s):
        return InnerProduct([[s * x for x in row] for row in self.gram], self.field)

    def __call__(self, u, v):
        ensure(len(u) == self.dim, DimensionMismatch, expected=self.dim, got=len(u))
        ensure(len(v) == self.dim, DimensionMismatch, expected=self.dim, got=len(v))
        total = self.field.zero
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            row = self.gram[i]
            for j, vj in enumerate(v):
                if vj != 0:
                    total += ui * row[j] * vj
        return total

    def norm_sq(self, u):
        return self(u, u)

    def raise_index(self, covector):
        """Vector w with g(w, e_k) = covector[k]."""
        return Vector(
            sum(self.inverse[i][k] * covector[k] for k in range(self.dim))
            for i in range(self.dim)
        )

    def __repr__(self):
        return "InnerProduct(%r)" % (self.gram,)


class Connection:
    """Christoffel array: nabla_{e_i} e_j = sum_k gamma[i][j][k] e_k."""

    __slots__ = ("gamma", "algebra", "dim", "field", "_terms")

    def __init__(self, gamma, algebra):
        dim = algebra.dim
        field = algebra.field
        ensure(len(gamma) == dim, DimensionMismatch, expected=dim, got=len(gamma))
        gamma = tuple(
            tuple(tuple(field.coerce(x) for x in row) for row in plane) for plane in gamma
        )
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "field", field)
        terms = tuple(
            (i, j, k, gamma[i][j][k])
            for i in range(dim)
            for j in range(dim)
            for k in range(dim)
            if not field.is_zero(gamma[i][j][k])
        )
        object.__setattr__(self, "_terms", terms)

    def __setattr__(self, name, value):
        raise AttributeError("Connection is immutable")

    def nabla(self, i, j):
        return Vector(self.gamma[i][j])

    def nonzero(self):
        return self._terms


class CurvatureOperator:
    """R(e_i, e_j) e_k = sum_l r[i][j][k][l] e_l."""

    __slots__ = ("r", "algebra", "dim", "field", "_terms")

    def __init__(self, r, algebra):
        field = algebra.field
        dim = algebra.dim
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "field", field)
        terms = tuple(
            (i, j, k, l, r[i][j][k][l])
            for i in range(dim)
            for j in range(dim)
            for k in range(dim)
            for l in range(dim)
            if not field.is_zero(r[i][j][k][l])
        )
        object.__setattr__(self, "_terms", terms)

    def __setattr__(self, name, value):
        raise AttributeError("CurvatureOperator is immutable")

    def component(self, i, j, k):
        return Vector(self.r[i][j][k])

    def apply(self, u, v, w):
        """Contraction of the table with u, v, w."""
        out = [self.field.zero] * self.dim
        for i, j, k, l, value in self._terms:
            if u[i] == 0 or v[j] == 0 or w[k] == 0:
                continue
            out[l] += u[i] * v[j] * w[k] * value
        return Vector(out)

    def is_flat(self):
        return not self._terms

    def nonzero(self):
        return self._terms


def _conform(dim, *vectors):
    for v in vectors:
        ensure(len(v) == dim, DimensionMismatch, expected=dim, got=len(v))


def levi_civita(alg, g):
    """Solve the Koszul formula column by column with the inverse Gram matrix."""
    ensure(g.dim == alg.dim, DimensionMismatch, expected=alg.dim, got=g.dim)
    field = alg.field
    n = alg.dim
    half = field.coerce(1) / 2
    # lowered structure constants: c_low[i][j][k] = g([e_i,e_j], e_k)
    c_low = [
        [[sum(alg.c[i][j][m] * g.gram[m][k] for m in range(n)) for k in range(n)] for j in range(n)]
        for i in range(n)
    ]
    gamma = []
    for i in range(n):
        plane = []
        for j in range(n):
            rhs = [c_low[i][j][k] - c_low[j][k][i] + c_low[k][i][j] for k in range(n)]
            plane.append([half * x for x in g.raise_index(rhs)])
        gamma.append(plane)
    return Connection(gamma, alg)


def covariant_derivative(conn, u, v):
    """nabla_u v for left-invariant (constant-coefficient) fields."""
    _conform(conn.dim, u, v)
    out = [conn.field.zero] * conn.dim
    for i, j, k, value in conn._terms:
        ui = u[i]
        if ui == 0:
            continue
        vj = v[j]
        if vj == 0:
            continue
        out[k] += ui * vj * value
    return Vector(out)


def curvature(conn, alg, u, v, w):
    """R(u,v)w = nabla_u nabla_v w - nabla_v nabla_u w - nabla_[u,v] w"""
    _conform(conn.dim, u, v, w)
    nabla = covariant_derivative
    return (
        nabla(conn, u, nabla(conn, v, w))
        - nabla(conn, v, nabla(conn, u, w))
        - nabla(conn, bracket(alg, u, v), w)
    )


def curvature_table(conn, alg):
    n = alg.dim
    basis = [alg.basis(i) for i in range(n)]
    r = tuple(
        tuple(
            tuple(
                # antisymmetry in the first two slots
                curvature(conn, alg, basis[i], basis[j], basis[k]).coords if i < j else None
                for k in range(n)
            )
            for j in range(n)
        )
        for i in range(n)
    )
    zero = tuple([alg.field.zero] * n)
    full = tuple(
        tuple(
            tuple(
                r[i][j][k]
                if i < j
                else (tuple(-x for x in r[j][i][k]) if j < i else zero)
                for k in range(n)
            )
            for j in range(n)
        )
        for i in range(n)
    )
    return CurvatureOperator(full, alg)


def sectional_curvature(g, conn, alg, u, v):
    """g(R(v,u)u, v) / (|u|^2 |v|^2 - g(u,v)^2)"""
    field = alg.field
    den = g(u, u) * g(v, v) - g(u, v) ** 2
    ensure(not field.is_zero(den), DegenerateFlag, reason="u and v are linearly dependent")
    return g(curvature(conn, alg, v, u, u), v) / den


def parallel_fields(conn):
    """Basis of the left-invariant fields x with nabla_{e_i} x = 0 for all i."""
    n = conn.dim
    rows = [
        [conn.gamma[i][k][l] for k in range(n)]
        for i in range(n)
        for l in range(n)
    ]
    return [Vector(x) for x in nullspace(rows, n, conn.field)]


def torsion_report(conn, alg):
    """nabla_{e_i} e_j - nabla_{e_j} e_i - [e_i, e_j] for every pair."""
    field = conn.field
    names = alg.basis_names
    report = ValidationReport()
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            t = conn.nabla(i, j) - conn.nabla(j, i) - alg.structure(i, j)
            for k, value in enumerate(t):
                if not field.is_zero(value):
                    report.add(
                        "torsion",
                        (i, j, k),
                        "torsion T(%s,%s) has %s-component %s"
                        % (names[i], names[j], names[k], field.format(value)),
                    )
    return report


def compatibility_report(conn, g):
    """g(nabla_{e_i} e_j, e_k) + g(e_j, nabla_{e_i} e_k) for every triple."""
    field = conn.field
    names = conn.algebra.basis_names
    n = conn.dim
    basis = [conn.algebra.basis(i) for i in range(n)]
    report = ValidationReport()
    for i in range(n):
        for j in range(n):
            for k in range(j, n):
                s = g(conn.nabla(i, j), basis[k]) + g(basis[j], conn.nabla(i, k))
                if not field.is_zero(s):
                    report.add(
                        "compatibility",
                        (i, j, k),
                        "metric compatibility fails for nabla_%s at (%s, %s): %s"
                        % (names[i], names[j], names[k], field.format(s)),
                    )
    return report
