"""
Checks for left-invariant hypercomplex structures on a Lie algebra.

A left-invariant endomorphism field is one linear map on the algebra. A
triple (J1, J2, J3) is hypercomplex when

    J1 J2 = -J2 J1 = J3,   Ji^2 = -Id,   N_i = 0,

with the Nijenhuis tensor N(X,Y) = [JX,JY] - [X,Y] - J([X,JY] + [JX,Y]).
A metric is hyper-Hermitian when g(Ji X, Ji Y) = g(X, Y) for i = 1, 2, 3.
"""

import json
from lgr.lgr_algebra import Vector, bracket
from lgr.lgr_errors import DimensionMismatch, InvalidInput, ValidationReport, ensure
from lgr.lgr_field import EXACT
from lgr.lgr_linalg import identity, matmul, transpose


class Endomorphism:
    """Square matrix acting on algebra coordinates: (Jv)_i = sum_j m[i][j] v_j."""

    __slots__ = ("matrix", "dim", "field")

    def __init__(self, matrix, field=EXACT):
        dim = len(matrix)
        for row in matrix:
            ensure(len(row) == dim, DimensionMismatch, expected=dim, got=len(row))
        object.__setattr__(self, "matrix", tuple(tuple(field.coerce(x) for x in row) for row in matrix))
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("Endomorphism is immutable")

    def __call__(self, v):
        ensure(len(v) == self.dim, DimensionMismatch, expected=self.dim, got=len(v))
        return Vector(sum(x * y for x, y in zip(row, v)) for row in self.matrix)

    def __matmul__(self, other):
        return Endomorphism(matmul(self.matrix, other.matrix), self.field)

    def __neg__(self):
        return Endomorphism([[-x for x in row] for row in self.matrix], self.field)

    def with_field(self, field):
        return Endomorphism(self.matrix, field)

    def __repr__(self):
        return "Endomorphism(%r)" % (self.matrix,)


class HypercomplexTriple:
    __slots__ = ("j1", "j2", "j3")

    def __init__(self, j1, j2, j3):
        ensure(j2.dim == j1.dim, DimensionMismatch, expected=j1.dim, got=j2.dim)
        ensure(j3.dim == j1.dim, DimensionMismatch, expected=j1.dim, got=j3.dim)
        object.__setattr__(self, "j1", j1)
        object.__setattr__(self, "j2", j2)
        object.__setattr__(self, "j3", j3)

    def __setattr__(self, name, value):
        raise AttributeError("HypercomplexTriple is immutable")

    def __iter__(self):
        return iter((self.j1, self.j2, self.j3))

    def replace(self, index, endomorphism):
        parts = list(self)
        parts[index] = endomorphism
        return HypercomplexTriple(*parts)

    def with_field(self, field):
        return HypercomplexTriple(*(j.with_field(field) for j in self))


def quaternion_product(a, b):
    """Hamilton product of (a0 + a1 i + a2 j + a3 k)(b0 + b1 i + b2 j + b3 k)."""
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def left_multiplication(unit, field=EXACT):
    """Matrix of b -> unit * b on R^4 = H with basis (1, i, j, k)."""
    columns = [quaternion_product(unit, tuple(int(r == c) for r in range(4))) for c in range(4)]
    return Endomorphism(transpose(columns), field)


def standard_triple(field=EXACT):
    """Left multiplication by i, j, k on a 4-dimensional algebra with basis
    (X, Y, Z, W) ~ (1, i, j, k): J1 X = Y, J1 Y = -X, J1 Z = W, J1 W = -Z."""
    return HypercomplexTriple(
        left_multiplication((0, 1, 0, 0), field),
        left_multiplication((0, 0, 1, 0), field),
        left_multiplication((0, 0, 0, 1), field),
    )


def nijenhuis(alg, J, u, v):
    """[Ju,Jv] - [u,v] - J([u,Jv] + [Ju,v])"""
    ensure(J.dim == alg.dim, DimensionMismatch, expected=alg.dim, got=J.dim)
    ju, jv = J(u), J(v)
    return bracket(alg, ju, jv) - bracket(alg, u, v) - J(bracket(alg, u, jv) + bracket(alg, ju, v))


def _compare(report, field, kind, label, lhs, rhs):
    n = len(lhs)
    for a in range(n):
        for b in range(n):
            diff = lhs[a][b] - rhs[a][b]
            if not field.is_zero(diff):
                report.add(kind, (a, b), "%s fails at entry (%d, %d)" % (label, a, b))


def verify_triple(alg, t):
    """Quaternion relations, J_i^2 = -Id and N_i = 0 on all basis pairs."""
    field = alg.field
    t = t.with_field(field)
    report = ValidationReport()
    for J in t:
        if J.dim != alg.dim:
            report.add("dimension", (J.dim,), "endomorphism has dimension %d, algebra %d" % (J.dim, alg.dim))
            return report
    j = {1: t.j1, 2: t.j2, 3: t.j3}
    products = [
        (1, 2, 3, 1), (2, 1, 3, -1),
        (2, 3, 1, 1), (3, 2, 1, -1),
        (3, 1, 2, 1), (1, 3, 2, -1),
    ]
    for a, b, c, sign in products:
        target = j[c] if sign > 0 else -j[c]
        label = "J%dJ%d = %sJ%d" % (a, b, "" if sign > 0 else "-", c)
        _compare(report, field, "quaternion", label, (j[a] @ j[b]).matrix, target.matrix)
    minus_id = [[-x for x in row] for row in identity(alg.dim, field)]
    for i in (1, 2, 3):
        _compare(report, field, "square", "J%d^2 = -Id" % i, (j[i] @ j[i]).matrix, minus_id)
    names = alg.basis_names
    for i in (1, 2, 3):
        for a in range(alg.dim):
            for b in range(a + 1, alg.dim):
                n = nijenhuis(alg, j[i], alg.basis(a), alg.basis(b))
                if not n.is_zero(field):
                    report.add(
                        "nijenhuis",
                        (i, a, b),
                        "N_%d(%s, %s) = %s, J%d is not integrable"
                        % (i, names[a], names[b], ", ".join(field.format(x) for x in n), i),
                    )
    return report


def is_hyper_hermitian(g, t):
    """J_i^T gram J_i = gram for i = 1, 2, 3."""
    field = g.field
    report = ValidationReport()
    for i, J in enumerate(t.with_field(field), start=1):
        if J.dim != g.dim:
            report.add("dimension", (i,), "J%d has dimension %d, metric %d" % (i, J.dim, g.dim))
            continue
        pulled = matmul(transpose(J.matrix), matmul(g.gram, J.matrix))
        for a in range(g.dim):
            for b in range(g.dim):
                if not field.equal(pulled[a][b], g.gram[a][b]):
                    report.add(
                        "hermitian",
                        (i, a, b),
                        "g(J%d e_%d, J%d e_%d) != g(e_%d, e_%d)" % (i, a + 1, i, b + 1, a + 1, b + 1),
                    )
    return report


# JSON: {"j1": [[...]], "j2": [[...]], "j3": [[...]]} with rational strings


def triple_from_document(doc, field=EXACT):
    try:
        parts = [
            Endomorphism([[field.parse(str(x)) for x in row] for row in doc[key]], field)
            for key in ("j1", "j2", "j3")
        ]
    except (KeyError, TypeError, AttributeError) as e:
        raise InvalidInput(message="malformed endomorphism triple document: %s" % (e,))
    return HypercomplexTriple(*parts)


def triple_to_document(t):
    return {
        key: [[J.field.format(x) for x in row] for row in J.matrix]
        for key, J in zip(("j1", "j2", "j3"), t)
    }


def load_triple(text, field=EXACT):
    try:
        doc = json.loads(text)
    except ValueError as e:
        raise InvalidInput(message="invalid JSON: %s" % (e,))
    return triple_from_document(doc, field)
