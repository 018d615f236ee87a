import argparse
import json
import pathlib
import sys
from itertools import combinations
from lgr.lgr_errors import DimensionMismatch, InvalidInput, ValidationReport, ensure
from lgr.lgr_field import EXACT


class Vector:
    """
    Coefficients of a left-invariant vector field in the basis of its
    algebra. Immutable; arithmetic works on the underlying python numbers.
    """

    __slots__ = ("coords",)

    def __init__(self, coords):
        object.__setattr__(self, "coords", tuple(coords))

    def __setattr__(self, name, value):
        raise AttributeError("Vector is immutable")

    @classmethod
    def zero(cls, dim, field):
        return cls([field.zero] * dim)

    @classmethod
    def basis(cls, dim, index, field):
        return cls([field.one if i == index else field.zero for i in range(dim)])

    @property
    def dim(self):
        return len(self.coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, index):
        return self.coords[index]

    def __eq__(self, other):
        return isinstance(other, Vector) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def _check(self, other):
        ensure(len(other) == len(self), DimensionMismatch, expected=len(self), got=len(other))

    def __add__(self, other):
        self._check(other)
        return Vector(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        self._check(other)
        return Vector(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return Vector(-a for a in self.coords)

    def scale(self, s):
        return Vector(s * a for a in self.coords)

    def __rmul__(self, s):
        return self.scale(s)

    def is_zero(self, field):
        return all(field.is_zero(a) for a in self.coords)

    def close_to(self, other, field):
        return (self - other).is_zero(field)

    def convert(self, field):
        return Vector(field.coerce(a) for a in self.coords)

    def __repr__(self):
        return "Vector(" + ", ".join(str(a) for a in self.coords) + ")"


class LieAlgebra:
    """
    A finite-dimensional real Lie algebra given by structure constants:
    [e_i, e_j] = sum_k c[i][j][k] e_k.

    Construction does not check the axioms; validate() does.
    """

    __slots__ = ("dim", "c", "basis_names", "field", "_terms")

    def __init__(self, structure, basis_names=None, field=EXACT):
        dim = len(structure)
        ensure(dim > 0, InvalidInput, message="a Lie algebra needs dim > 0")
        for plane in structure:
            ensure(len(plane) == dim, DimensionMismatch, expected=dim, got=len(plane))
            for row in plane:
                ensure(len(row) == dim, DimensionMismatch, expected=dim, got=len(row))
        if basis_names is None:
            basis_names = ["e%d" % (i + 1) for i in range(dim)]
        basis_names = tuple(basis_names)
        ensure(len(basis_names) == dim, DimensionMismatch, expected=dim, got=len(basis_names))
        ensure(
            len(set(basis_names)) == dim,
            InvalidInput,
            message="basis names must be distinct: %s" % (", ".join(basis_names),),
        )
        c = tuple(
            tuple(tuple(field.coerce(x) for x in row) for row in plane)
            for plane in structure
        )
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "basis_names", basis_names)
        object.__setattr__(self, "field", field)
        # nonzero (i, j, k, value) entries, the bracket loops over these only
        terms = tuple(
            (i, j, k, c[i][j][k])
            for i in range(dim)
            for j in range(dim)
            for k in range(dim)
            if c[i][j][k] != 0
        )
        object.__setattr__(self, "_terms", terms)

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    @classmethod
    def from_brackets(cls, dim, brackets, basis_names=None, field=EXACT):
        """brackets maps (i, j) with i < j to {k: coefficient}; the
        antisymmetric completion is filled in."""
        c = [[[field.zero] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), coeffs in brackets.items():
            ensure(
                0 <= i < j < dim,
                InvalidInput,
                message="bracket entries need 0 <= i < j < %d, got (%d, %d)" % (dim, i, j),
            )
            for k, value in coeffs.items():
                ensure(0 <= k < dim, InvalidInput, message="bracket index k=%d out of range" % k)
                value = field.coerce(value)
                c[i][j][k] = value
                c[j][i][k] = -value
        return cls(c, basis_names, field)

    def with_field(self, field):
        if field == self.field:
            return self
        return LieAlgebra(self.c, self.basis_names, field)

    def index(self, name):
        try:
            return self.basis_names.index(name)
        except ValueError:
            raise InvalidInput(
                message="unknown basis vector %r, expected one of: %s"
                % (name, ", ".join(self.basis_names))
            )

    def basis(self, index):
        return Vector.basis(self.dim, index, self.field)

    def zero(self):
        return Vector.zero(self.dim, self.field)

    def vector(self, coords):
        ensure(len(coords) == self.dim, DimensionMismatch, expected=self.dim, got=len(coords))
        return Vector(self.field.coerce(x) for x in coords)

    def structure(self, i, j):
        """[e_i, e_j] as a Vector."""
        return Vector(self.c[i][j])

    def is_abelian(self):
        return not self._terms

    def __repr__(self):
        return "LieAlgebra(dim=%d, basis=%s, %s)" % (
            self.dim,
            ",".join(self.basis_names),
            self.field,
        )


def _conform(alg, *vectors):
    for v in vectors:
        ensure(len(v) == alg.dim, DimensionMismatch, expected=alg.dim, got=len(v))


def bracket(alg, u, v):
    """sum_{i,j} u_i v_j [e_i, e_j]"""
    _conform(alg, u, v)
    out = [alg.field.zero] * alg.dim
    for i, j, k, value in alg._terms:
        ui = u[i]
        if ui == 0:
            continue
        vj = v[j]
        if vj == 0:
            continue
        out[k] += ui * vj * value
    return Vector(out)


def validate(alg):
    """Report every antisymmetry and Jacobi violation of alg."""
    field = alg.field
    names = alg.basis_names
    report = ValidationReport()
    n = alg.dim
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                s = alg.c[i][j][k] + alg.c[j][i][k]
                if not field.is_zero(s):
                    report.add(
                        "antisymmetry",
                        (i, j, k),
                        "antisymmetry fails at (%d, %d, %d): c[%s,%s] + c[%s,%s] has %s-component %s"
                        % (i, j, k, names[i], names[j], names[j], names[i], names[k], field.format(s)),
                    )
    for i, j, k in combinations(range(n), 3):
        e_i, e_j, e_k = alg.basis(i), alg.basis(j), alg.basis(k)
        jac = (
            bracket(alg, alg.structure(i, j), e_k)
            + bracket(alg, alg.structure(j, k), e_i)
            + bracket(alg, alg.structure(k, i), e_j)
        )
        for m, value in enumerate(jac):
            if not field.is_zero(value):
                report.add(
                    "jacobi",
                    (i, j, k, m),
                    "Jacobi identity fails for (%s, %s, %s): %s-component is %s"
                    % (names[i], names[j], names[k], names[m], field.format(value)),
                )
    return report


def jacobiator(alg, u, v, w):
    """[[u,v],w] + [[v,w],u] + [[w,u],v]"""
    return (
        bracket(alg, bracket(alg, u, v), w)
        + bracket(alg, bracket(alg, v, w), u)
        + bracket(alg, bracket(alg, w, u), v)
    )


# JSON documents:
# {"dim": n, "basis": [...], "brackets": [{"i": .., "j": .., "coeffs": {"k": "p/q"}}]}


def to_document(alg):
    brackets = []
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            coeffs = {
                str(k): alg.field.format(alg.c[i][j][k])
                for k in range(alg.dim)
                if not alg.field.is_zero(alg.c[i][j][k])
            }
            if coeffs:
                brackets.append({"i": i, "j": j, "coeffs": coeffs})
    return {"dim": alg.dim, "basis": list(alg.basis_names), "brackets": brackets}


def from_document(doc, field=EXACT):
    try:
        dim = int(doc["dim"])
        names = doc.get("basis")
        brackets = {}
        for entry in doc.get("brackets", []):
            key = (int(entry["i"]), int(entry["j"]))
            ensure(key not in brackets, InvalidInput, message="duplicate bracket entry %r" % (key,))
            brackets[key] = {
                int(k): field.parse(str(value)) for k, value in entry["coeffs"].items()
            }
    except (KeyError, TypeError, ValueError, AttributeError) as e:
        raise InvalidInput(message="malformed Lie algebra document: %s" % (e,))
    return LieAlgebra.from_brackets(dim, brackets, names, field)


def dumps(alg, **kwargs):
    return json.dumps(to_document(alg), **kwargs)


def loads(text, field=EXACT):
    try:
        doc = json.loads(text)
    except ValueError as e:
        raise InvalidInput(message="invalid JSON: %s" % (e,))
    return from_document(doc, field)


if __name__ == "__main__":

    # create argument parser
    parser = argparse.ArgumentParser()
    parser.add_argument("input_file", help="Path to a Lie algebra JSON document", type=str)
    args = parser.parse_args()

    # get input path
    input_path = pathlib.Path(args.input_file)

    # check if file exists
    if not input_path.exists():
        print("Input", input_path, "not found", file=sys.stderr)
        sys.exit(1)

    with open(input_path) as f:
        alg = loads(f.read())
    for line in validate(alg).lines():
        print(line)
