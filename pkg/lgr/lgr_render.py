import json
from graphviz import Digraph
from lgr.lgr_algebra import to_document
from lgr.lgr_ast import NodeVisitor


def format_vector(vector, names, field):
    """ "1/2 W", "-Z", "1/2 Y - 1/4 W", "0" """
    terms = []
    for name, x in zip(names, vector):
        if field.is_zero(x):
            continue
        if x == 1:
            terms.append(name)
        elif x == -1:
            terms.append("-" + name)
        else:
            terms.append("%s %s" % (field.format(x), name))
    if not terms:
        return "0"
    out = terms[0]
    for term in terms[1:]:
        if term.startswith("-"):
            out += " - " + term[1:]
        else:
            out += " + " + term
    return out


class ParallelSpace:
    """Basis of the parallel left-invariant fields of a connection."""

    def __init__(self, algebra, vectors):
        self.algebra = algebra
        self.vectors = vectors

    @property
    def dimension(self):
        return len(self.vectors)


class FlagResult:
    """One flag curvature evaluation."""

    def __init__(self, case, q, flag, value, field):
        self.case = case
        self.q = q
        self.flag = flag
        self.value = value
        self.field = field

    @property
    def mode(self):
        return self.field.mode_of(self.value)

    def record(self):
        fmt = self.field.format
        return {
            "case": self.case,
            "q": None if self.q is None else fmt(self.q),
            "pole": [fmt(x) for x in self.flag.pole],
            "transverse": [fmt(x) for x in self.flag.transverse],
            "K": fmt(self.value),
            "mode": self.mode,
        }


class MarkdownRenderer(NodeVisitor):
    """Renders results as the text layout of the published tables."""

    def render(self, node):
        return self.visit(node) + "\n"

    def visit_LieAlgebra(self, alg):
        names = alg.basis_names
        lines = []
        for i in range(alg.dim):
            for j in range(i + 1, alg.dim):
                v = alg.structure(i, j)
                if not v.is_zero(alg.field):
                    lines.append("- [%s,%s] = %s" % (names[i], names[j], format_vector(v, names, alg.field)))
        if not lines:
            return "all brackets zero"
        return "\n".join(lines)

    def visit_Connection(self, conn):
        names = conn.algebra.basis_names
        lines = [
            "| ∇ | " + " | ".join(names) + " |",
            "|" + "---|" * (len(names) + 1),
        ]
        for i, a in enumerate(names):
            cells = [
                "∇_%s %s = %s" % (a, b, format_vector(conn.nabla(i, j), names, conn.field))
                for j, b in enumerate(names)
            ]
            lines.append("| %s | %s |" % (a, " | ".join(cells)))
        return "\n".join(lines)

    def visit_CurvatureOperator(self, op):
        names = op.algebra.basis_names
        lines = []
        for i in range(op.dim):
            for j in range(i + 1, op.dim):
                for k in range(op.dim):
                    v = op.component(i, j, k)
                    if not v.is_zero(op.field):
                        lines.append(
                            "- R(%s,%s)%s = %s"
                            % (names[i], names[j], names[k], format_vector(v, names, op.field))
                        )
        if not lines:
            return "all components zero"
        lines.append("all other components zero")
        return "\n".join(lines)

    def visit_ParallelSpace(self, space):
        alg = space.algebra
        if not space.vectors:
            return "dimension 0"
        basis = ", ".join(format_vector(v, alg.basis_names, alg.field) for v in space.vectors)
        return "dimension %d, basis: %s" % (space.dimension, basis)

    def visit_FlagResult(self, result):
        return "K = %s" % result.field.format(result.value)

    def visit_SweepSummary(self, summary):
        fmt = summary.field.format
        return "\n".join(
            [
                "| case | samples | min K | max K | K > 0 | K = 0 | K < 0 |",
                "|---|---|---|---|---|---|---|",
                "| %s | %d | %s | %s | %d | %d | %d |"
                % (
                    summary.case,
                    summary.samples,
                    fmt(summary.minimum),
                    fmt(summary.maximum),
                    summary.positive,
                    summary.zero,
                    summary.negative,
                ),
            ]
        )

    def visit_ValidationReport(self, report):
        if report.ok:
            return "ok"
        return "\n".join(report.lines())


class JsonRenderer(NodeVisitor):
    """Renders results as JSON documents; zero entries are omitted."""

    def render(self, node):
        return json.dumps(self.visit(node)) + "\n"

    def visit_LieAlgebra(self, alg):
        return to_document(alg)

    def visit_Connection(self, conn):
        field = conn.field
        gamma = {}
        for i, j, k, value in conn.nonzero():
            gamma.setdefault(str(i), {}).setdefault(str(j), {})[str(k)] = field.format(value)
        return {"dim": conn.dim, "basis": list(conn.algebra.basis_names), "gamma": gamma}

    def visit_CurvatureOperator(self, op):
        field = op.field
        r = {}
        for i, j, k, l, value in op.nonzero():
            r.setdefault(str(i), {}).setdefault(str(j), {}).setdefault(str(k), {})[str(l)] = field.format(value)
        return {"dim": op.dim, "basis": list(op.algebra.basis_names), "r": r}

    def visit_ParallelSpace(self, space):
        fmt = space.algebra.field.format
        return {
            "dimension": space.dimension,
            "basis": [[fmt(x) for x in v] for v in space.vectors],
        }

    def visit_FlagResult(self, result):
        return result.record()

    def visit_SweepSummary(self, summary):
        return {"summary": summary.as_dict()}

    def visit_ValidationReport(self, report):
        return {
            "ok": report.ok,
            "violations": [
                {"kind": kind, "indices": list(indices), "message": message}
                for kind, indices, message in report
            ],
        }


RENDERERS = {
    "markdown": MarkdownRenderer,
    "json": JsonRenderer,
}


class BracketDiagram:
    """Graphviz picture of a bracket table: an edge e_i -> e_k labelled
    [e_i,e_j] for every nonzero structure constant c[i][j][k], i < j."""

    def __init__(self, name):
        self.name = name
        self.g = Digraph("g", filename=name + ".gv", node_attr={"shape": "circle"})

    def visit_LieAlgebra(self, alg):
        names = alg.basis_names
        for name in names:
            self.g.node(name)
        for i in range(alg.dim):
            for j in range(i + 1, alg.dim):
                for k in range(alg.dim):
                    value = alg.c[i][j][k]
                    if not alg.field.is_zero(value):
                        label = "[%s,%s]" % (names[i], names[j])
                        if value != 1:
                            label += " %s" % alg.field.format(value)
                        self.g.edge(names[i], names[k], label=label)
        return self.g

    def source(self, alg):
        return self.visit_LieAlgebra(alg).source

    def view(self, alg):
        self.visit_LieAlgebra(alg)
        self.g.view()
