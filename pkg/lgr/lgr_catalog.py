"""
The simply connected 4-dimensional Lie groups carrying a left-invariant
hypercomplex structure with a hyper-Hermitian metric: the abelian group and
four non-abelian cases, each with the orthonormal basis {X, Y, Z, W}.

Expected data is written down literally, not recomputed, so verify_all()
diffs computation against the published tables.
"""

from fractions import Fraction
from lgr.lgr_algebra import LieAlgebra, validate
from lgr.lgr_errors import UnknownCase, ValidationReport
from lgr.lgr_field import EXACT
from lgr.lgr_geometry import (
    InnerProduct,
    compatibility_report,
    curvature_table,
    levi_civita,
    parallel_fields,
    torsion_report,
)

BASIS = ("X", "Y", "Z", "W")
X, Y, Z, W = range(4)

h = Fraction(1, 2)
qr = Fraction(1, 4)

BRACKETS = {
    "abelian": {},
    "case1": {
        (Y, Z): {W: 1},
        (Z, W): {Y: 1},
        # [W,Y] = Z
        (Y, W): {Z: -1},
    },
    "case2": {
        (X, Z): {X: 1},
        (Y, Z): {Y: 1},
        (X, W): {Y: 1},
        (Y, W): {X: -1},
    },
    "case3": {
        (X, Y): {Y: 1},
        (X, Z): {Z: 1},
        (X, W): {W: 1},
    },
    "case4": {
        (X, Y): {Y: 1},
        (X, Z): {Z: h},
        (X, W): {W: h},
        (Z, W): {Y: h},
    },
}

# nabla_{e_i} e_j = {k: coefficient}; entries not listed are zero
CONNECTIONS = {
    "abelian": {},
    "case1": {
        (Y, Z): {W: h},
        (Y, W): {Z: -h},
        (Z, Y): {W: -h},
        (Z, W): {Y: h},
        (W, Y): {Z: h},
        (W, Z): {Y: -h},
    },
    "case2": {
        (X, X): {Z: -1},
        (X, Z): {X: 1},
        (Y, Y): {Z: -1},
        (Y, Z): {Y: 1},
        (W, X): {Y: -1},
        (W, Y): {X: 1},
    },
    "case3": {
        (Y, X): {Y: -1},
        (Y, Y): {X: 1},
        (Z, X): {Z: -1},
        (Z, Z): {X: 1},
        (W, X): {W: -1},
        (W, W): {X: 1},
    },
    "case4": {
        (Y, X): {Y: -1},
        (Y, Y): {X: 1},
        (Y, Z): {W: -qr},
        (Y, W): {Z: qr},
        (Z, X): {Z: -h},
        (Z, Y): {W: -qr},
        (Z, Z): {X: h},
        (Z, W): {Y: qr},
        (W, X): {W: -h},
        (W, Y): {Z: qr},
        (W, Z): {Y: -qr},
        (W, W): {X: h},
    },
}

# R(e_i, e_j) e_k = {l: coefficient}; other components vanish up to
# antisymmetry in (i, j). Only the curvature of cases 1 and 2 is published;
# the abelian group is flat.
CURVATURES = {
    "abelian": {},
    "case1": {
        (Y, Z, Y): {Z: -qr},
        (Z, W, W): {Z: qr},
        (Y, W, W): {Y: qr},
        (Y, Z, Z): {Y: qr},
        (Z, W, Z): {W: -qr},
        (Y, W, Y): {W: -qr},
    },
    "case2": {
        (X, Y, X): {Y: 1},
        (Y, Z, Z): {Y: -1},
        (X, Y, Y): {X: -1},
        (X, Z, Z): {X: -1},
        (X, Z, X): {Z: 1},
        (Y, Z, Y): {Z: 1},
    },
    "case3": None,
    "case4": None,
}

# basis of the parallel left-invariant fields, as basis indices
PARALLEL = {
    "abelian": (X, Y, Z, W),
    "case1": (X,),
    "case2": (W,),
    "case3": (),
    "case4": (),
}

# sign of every flag curvature of the Berwald Randers metrics: 0 flat,
# 1 non-negative, -1 non-positive, None when no Berwald drift exists
FLAG_SIGN = {
    "abelian": 0,
    "case1": 1,
    "case2": -1,
    "case3": None,
    "case4": None,
}

NAMES = ("abelian", "case1", "case2", "case3", "case4")


class ExpectedData:
    """Published geometric data of one catalog space."""

    def __init__(self, connection, curvature, parallel, flag_sign):
        self.connection = connection
        self.curvature = curvature
        self.parallel = parallel
        self.flag_sign = flag_sign

    @property
    def berwald(self):
        """Whether a non-Riemannian Berwald Randers metric exists."""
        return bool(self.parallel)


class CatalogEntry:
    def __init__(self, name, algebra, metric, expected):
        self.name = name
        self.algebra = algebra
        self.metric = metric
        self.expected = expected

    def with_field(self, field):
        return CatalogEntry(
            self.name,
            self.algebra.with_field(field),
            self.metric.with_field(field),
            self.expected,
        )

    def __repr__(self):
        return "CatalogEntry(%r)" % (self.name,)


def get(name, field=EXACT):
    if name not in BRACKETS:
        raise UnknownCase(name=name, known=", ".join(NAMES))
    algebra = LieAlgebra.from_brackets(4, BRACKETS[name], BASIS, field)
    expected = ExpectedData(CONNECTIONS[name], CURVATURES[name], PARALLEL[name], FLAG_SIGN[name])
    return CatalogEntry(name, algebra, InnerProduct.identity(4, field), expected)


def entries(field=EXACT):
    return [get(name, field) for name in NAMES]


def _diff_connection(report, entry, conn):
    field = conn.field
    expected = entry.expected.connection
    n = conn.dim
    for i in range(n):
        for j in range(n):
            row = expected.get((i, j), {})
            for k in range(n):
                want = field.coerce(row.get(k, 0))
                got = conn.gamma[i][j][k]
                if not field.equal(want, got):
                    report.add(
                        "connection",
                        (i, j, k),
                        "%s: connection mismatch at (%d, %d, %d): expected %s, got %s"
                        % (entry.name, i, j, k, field.format(want), field.format(got)),
                    )


def _expand_curvature(table, n):
    full = {}
    for (i, j, k), values in table.items():
        full[(i, j, k)] = values
        full[(j, i, k)] = {l: -v for l, v in values.items()}
    return full


def _diff_curvature(report, entry, op):
    field = op.field
    expected = _expand_curvature(entry.expected.curvature, op.dim)
    n = op.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                row = expected.get((i, j, k), {})
                for l in range(n):
                    want = field.coerce(row.get(l, 0))
                    got = op.r[i][j][k][l]
                    if not field.equal(want, got):
                        report.add(
                            "curvature",
                            (i, j, k, l),
                            "%s: curvature mismatch at (%d, %d, %d, %d): expected %s, got %s"
                            % (entry.name, i, j, k, l, field.format(want), field.format(got)),
                        )


def _diff_parallel(report, entry, basis):
    field = entry.algebra.field
    want = [entry.algebra.basis(i) for i in entry.expected.parallel]
    same = len(want) == len(basis) and all(a.close_to(b, field) for a, b in zip(want, basis))
    if not same:
        report.add(
            "parallel",
            (len(want), len(basis)),
            "%s: parallel fields mismatch: expected dimension %d, got %d"
            % (entry.name, len(want), len(basis)),
        )


def check_entry(entry):
    report = ValidationReport()
    report.extend(validate(entry.algebra), prefix=entry.name)
    conn = levi_civita(entry.algebra, entry.metric)
    report.extend(torsion_report(conn, entry.algebra), prefix=entry.name)
    report.extend(compatibility_report(conn, entry.metric), prefix=entry.name)
    _diff_connection(report, entry, conn)
    if entry.expected.curvature is not None:
        _diff_curvature(report, entry, curvature_table(conn, entry.algebra))
    _diff_parallel(report, entry, parallel_fields(conn))
    return report


def verify_all(field=EXACT, catalog=None):
    """Recompute every entry and diff it against the published data."""
    if catalog is None:
        catalog = entries(field)
    report = ValidationReport()
    for entry in catalog:
        report.extend(check_entry(entry.with_field(field)))
    return report
