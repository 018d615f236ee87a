"""
Small dense linear algebra over an lgr Field.

Matrices are lists of rows. Everything here is written for the handful of
dimensions the geometry works in (dim <= 8), where clarity matters more
than speed.
"""

import math
from fractions import Fraction
import numpy as np
from lgr.lgr_errors import SingularMetric


def identity(n, field):
    return [[field.one if r == c else field.zero for c in range(n)] for r in range(n)]


def transpose(m):
    return [list(col) for col in zip(*m)]


def matmul(a, b):
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(m, v):
    return [sum(x * y for x, y in zip(row, v)) for row in m]


def _integer_row(row):
    """Scale a rational row to coprime integers."""
    lcm = 1
    for x in row:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in row]
    return _primitive(ints)


def _primitive(ints):
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def _row_reduce_exact(rows, ncols):
    m = [_integer_row([Fraction(x) for x in row]) for row in rows]
    pivots = []
    piv_r = 0
    for piv_c in range(ncols):
        for i_row in range(piv_r, len(m)):
            if m[i_row][piv_c] != 0:
                break
        else:
            continue
        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
        p = m[piv_r][piv_c]
        for r in range(len(m)):
            if r == piv_r:
                continue
            f = m[r][piv_c]
            if f == 0:
                continue
            # integer combination, no fractions until the final scaling
            m[r] = _primitive([p * x - f * y for x, y in zip(m[r], m[piv_r])])
        pivots.append(piv_c)
        piv_r += 1
        if piv_r == len(m):
            break
    reduced = []
    for r, piv_c in enumerate(pivots):
        lead = m[r][piv_c]
        reduced.append([Fraction(x, lead) for x in m[r]])
    return reduced, pivots


def _row_reduce_float(rows, ncols, epsilon):
    m = [[float(x) for x in row] for row in rows]
    pivots = []
    piv_r = 0
    for piv_c in range(ncols):
        if piv_r == len(m):
            break
        best = max(range(piv_r, len(m)), key=lambda r: abs(m[r][piv_c]))
        if abs(m[best][piv_c]) < epsilon:
            for r in range(piv_r, len(m)):
                m[r][piv_c] = 0.0
            continue
        m[piv_r], m[best] = m[best], m[piv_r]
        lead = m[piv_r][piv_c]
        m[piv_r] = [x / lead for x in m[piv_r]]
        for r in range(len(m)):
            if r != piv_r and m[r][piv_c] != 0.0:
                f = m[r][piv_c]
                m[r] = [x - f * y for x, y in zip(m[r], m[piv_r])]
        pivots.append(piv_c)
        piv_r += 1
    return m[: len(pivots)], pivots


def row_reduce(rows, ncols, field):
    """Reduced row-echelon form with unit leading entries.

    Returns (nonzero rows, pivot columns). Exact mode eliminates on
    integer rows taking the first nonzero pivot; float mode pivots on the
    largest magnitude.
    """
    if not rows:
        return [], []
    if field.exact:
        return _row_reduce_exact(rows, ncols)
    return _row_reduce_float(rows, ncols, field.epsilon)


def nullspace(rows, ncols, field):
    """Canonical basis of {x : rows . x = 0}, one vector per free column
    with that column set to 1 and the other free columns to 0."""
    reduced, pivots = row_reduce(rows, ncols, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [field.zero] * ncols
        x[f] = field.one
        for row, piv_c in zip(reduced, pivots):
            x[piv_c] = -field.coerce(row[f])
        basis.append(x)
    return basis


def inverse(matrix, field):
    n = len(matrix)
    if not field.exact:
        a = np.array(matrix, dtype=float)
        try:
            inv = np.linalg.inv(a)
        except np.linalg.LinAlgError:
            raise SingularMetric()
        if not np.all(np.isfinite(inv)) or abs(np.linalg.det(a)) < field.epsilon:
            raise SingularMetric()
        return inv.tolist()
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(r == c)) for c in range(n)]
        for r, row in enumerate(matrix)
    ]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise SingularMetric()
        aug[col], aug[piv] = aug[piv], aug[col]
        lead = aug[col][col]
        aug[col] = [x / lead for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def leading_minors(matrix, field):
    """Leading principal minors d_1..d_n, via elimination without pivoting."""
    n = len(matrix)
    m = [[field.coerce(x) for x in row] for row in matrix]
    minors = []
    det = field.one
    for k in range(n):
        pivot = m[k][k]
        det = det * pivot
        minors.append(det)
        if field.is_zero(pivot):
            # later minors are not reachable without pivoting; report as zero
            minors.extend([field.zero] * (n - k - 1))
            break
        for r in range(k + 1, n):
            f = m[r][k] / pivot
            if f != 0:
                m[r] = [x - f * y for x, y in zip(m[r], m[k])]
    return minors


def is_positive_definite(matrix, field):
    if not field.exact:
        m = np.array(matrix, dtype=float)
        try:
            lower = np.linalg.cholesky(m)
        except np.linalg.LinAlgError:
            return False
        # pivots relative to the largest diagonal entry
        scale = float(np.max(np.abs(np.diag(m)))) if m.size else 1.0
        return bool(np.all(np.diag(lower) ** 2 > field.epsilon * scale))
    return all(d > 0 for d in leading_minors(matrix, field))
