#!/usr/bin/env python3

# ============================================================
# lgr -- invariant Riemannian and Randers geometry on Lie groups
#
# This is the main program: it parses the command line, loads an
# algebra (catalog case or JSON file) and runs one subcommand.
# ============================================================

import argparse
import json
import sys
from lgr import lgr_catalog as catalog
from lgr.lgr_algebra import from_document, validate
from lgr.lgr_errors import (
    GeometryError,
    InvalidInput,
    ValidationReport,
    clear_errors,
    error,
    errors_reported,
    subscribe_errors,
)
from lgr.lgr_field import make_field
from lgr.lgr_geometry import InnerProduct, curvature_table, levi_civita, parallel_fields
from lgr.lgr_hypercomplex import is_hyper_hermitian, load_triple, standard_triple, verify_triple
from lgr.lgr_parser import parse_vector
from lgr.lgr_randers import Flag, build, flag_curvature
from lgr.lgr_render import RENDERERS, BracketDiagram, FlagResult, ParallelSpace
from lgr.lgr_sweep import berwald_drift, run_sweep

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2


class RunConfig:
    """Settings shared by every subcommand."""

    def __init__(self, mode="exact", epsilon=1e-12, output="markdown", seed=0, jobs=1, verbose=False):
        if not epsilon > 0:
            raise InvalidInput(message="--epsilon must be > 0, got %s" % (epsilon,))
        if jobs < 1:
            raise InvalidInput(message="--jobs must be >= 1, got %s" % (jobs,))
        self.mode = mode
        self.epsilon = epsilon
        self.output = output
        self.seed = seed
        self.jobs = jobs
        self.verbose = verbose
        self.field = make_field(mode, epsilon)

    @classmethod
    def from_args(cls, args):
        return cls(
            mode=args.mode,
            epsilon=args.epsilon,
            output=args.output,
            seed=args.seed,
            jobs=getattr(args, "jobs", 1),
            verbose=args.verbose,
        )


def _read_json(path, what):
    try:
        with open(path) as f:
            return json.load(f)
    except OSError as e:
        raise InvalidInput(message="cannot read %s %s: %s" % (what, path, e.strerror))
    except ValueError as e:
        raise InvalidInput(message="%s %s is not valid JSON: %s" % (what, path, e))


def _metric_from_document(doc, field):
    if not isinstance(doc, dict) or "gram" not in doc:
        raise InvalidInput(message='metric document needs a "gram" matrix')
    try:
        gram = [[field.parse(str(x)) for x in row] for row in doc["gram"]]
    except TypeError as e:
        raise InvalidInput(message="malformed gram matrix: %s" % (e,))
    return InnerProduct(gram, field)


class Session:
    """This object encapsulates one command-line run and serves as a
    facade over the library: loading, computing and rendering.
    """

    def __init__(self, cl_args):
        self.args = cl_args
        self.config = RunConfig.from_args(cl_args)
        self.field = self.config.field
        self.renderer = RENDERERS[self.config.output]()
        self.entry = None
        self.algebra = None
        self.metric = None

    def _say(self, msg):
        if self.config.verbose:
            sys.stderr.write(msg + "\n")

    def _emit(self, node):
        sys.stdout.write(self.renderer.render(node))

    def _load(self):
        """Loads a catalog case or an algebra JSON file, and the metric
        (catalog identity, the document's "gram", --metric, or identity)."""
        source = self.args.source
        self._say("Loading %s in %s mode." % (source, self.config.mode))
        if source in catalog.NAMES:
            self.entry = catalog.get(source, self.field)
            self.algebra = self.entry.algebra
            self.metric = self.entry.metric
        else:
            doc = _read_json(source, "algebra")
            if not isinstance(doc, dict):
                raise InvalidInput(message="algebra document must be a JSON object")
            self.algebra = from_document(doc, self.field)
            report = validate(self.algebra)
            if not report.ok:
                for line in report.lines():
                    error(line, source=source)
                raise InvalidInput(message="%s is not a Lie algebra" % (source,))
            if "gram" in doc:
                self.metric = _metric_from_document(doc, self.field)
            else:
                self.metric = InnerProduct.identity(self.algebra.dim, self.field)
        metric_path = getattr(self.args, "metric", None)
        if metric_path:
            self.metric = _metric_from_document(_read_json(metric_path, "metric"), self.field)
        if self.metric.dim != self.algebra.dim:
            raise InvalidInput(
                message="metric has dimension %d, algebra %d" % (self.metric.dim, self.algebra.dim)
            )

    def _connection(self):
        self._say("Solving the Koszul formula.")
        return levi_civita(self.algebra, self.metric)

    def connection(self):
        self._load()
        self._emit(self._connection())
        return EXIT_OK

    def curvature(self):
        self._load()
        conn = self._connection()
        self._say("Computing curvature components.")
        self._emit(curvature_table(conn, self.algebra))
        return EXIT_OK

    def parallel(self):
        self._load()
        self._emit(ParallelSpace(self.algebra, parallel_fields(self._connection())))
        return EXIT_OK

    def flag(self):
        self._load()
        args = self.args
        conn = self._connection()
        if args.drift is not None:
            q = None
            drift = parse_vector(args.drift, self.algebra)
        else:
            q = self.field.parse(args.q)
            drift = berwald_drift(conn, self.metric, q)
        F = build(self.metric, drift)
        flag = Flag(
            parse_vector(args.pole, self.algebra),
            parse_vector(args.transverse, self.algebra),
            self.field,
        )
        self._say("Evaluating the flag curvature.")
        value = flag_curvature(F, self.algebra, conn, flag)
        self._emit(FlagResult(args.source, q, flag, value, self.field))
        return EXIT_OK

    def sweep(self):
        self._load()
        args = self.args
        if args.samples < 0:
            raise InvalidInput(message="--samples must be >= 0, got %d" % (args.samples,))
        self._say("Sampling %d flags with seed %d." % (args.samples, self.config.seed))
        results, summary = run_sweep(
            args.source,
            self.algebra,
            self.metric,
            args.samples,
            seed=self.config.seed,
            jobs=self.config.jobs,
        )
        if self.config.output == "json":
            for result in results:
                self._emit(result)
        self._emit(summary)
        return self._check_sign(summary)

    def _check_sign(self, summary):
        if self.entry is None or not summary.samples:
            return EXIT_OK
        if self.metric.gram != self.entry.metric.gram:
            # the sign theorems hold for the catalog metric only
            return EXIT_OK
        sign = self.entry.expected.flag_sign
        eps = 0 if self.field.exact else self.config.epsilon
        fmt = self.field.format
        if sign == 1 and summary.minimum < -eps:
            error("flag curvature %s < 0 on a non-negatively curved space" % fmt(summary.minimum), source=self.entry.name)
        elif sign == -1 and summary.maximum > eps:
            error("flag curvature %s > 0 on a non-positively curved space" % fmt(summary.maximum), source=self.entry.name)
        elif sign == 0 and (summary.positive or summary.negative):
            error("nonzero flag curvature on a flat space", source=self.entry.name)
        else:
            return EXIT_OK
        return EXIT_MISMATCH

    def verify(self):
        self._say("Verifying the catalog in %s mode." % self.config.mode)
        report = catalog.verify_all(self.field)
        abelian = catalog.get("abelian", self.field)
        if self.args.triple:
            with open(self.args.triple) as f:
                triple = load_triple(f.read(), self.field)
        else:
            triple = standard_triple(self.field)
        checks = ValidationReport()
        checks.extend(verify_triple(abelian.algebra, triple))
        checks.extend(is_hyper_hermitian(abelian.metric, triple))
        report.extend(checks, prefix="abelian")
        self._emit(report)
        return EXIT_OK if report.ok else EXIT_MISMATCH

    def brackets(self):
        self._load()
        self._emit(self.algebra)
        self._emit(validate(self.algebra))
        if self.args.dot or self.args.view:
            name = self.args.dot or "brackets"
            diagram = BracketDiagram(name)
            if self.args.view:
                diagram.view(self.algebra)
            else:
                with open(name, "w") as f:
                    f.write(diagram.source(self.algebra))
                sys.stderr.write("Outputting the bracket diagram to %s.\n" % name)
        return EXIT_OK

    def run(self):
        """ Runs the selected subcommand and returns the exit status """
        clear_errors()
        with subscribe_errors(lambda msg: sys.stderr.write(msg + "\n")):
            try:
                status = getattr(self, self.args.command)()
            except GeometryError as e:
                error(e, source=getattr(self.args, "source", None))
                return e.exit_code
            except OSError as e:
                error("%s: %s" % (e.filename, e.strerror))
                return EXIT_INVALID
            if status == EXIT_OK and errors_reported():
                return EXIT_MISMATCH
            return status


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-m", "--mode", choices=["exact", "float"], default="exact", help="arithmetic mode"
    )
    common.add_argument(
        "-e", "--epsilon", type=float, default=1e-12, help="float-mode zero tolerance"
    )
    common.add_argument(
        "-o", "--output", choices=["markdown", "json"], default="markdown", help="output format"
    )
    common.add_argument("-s", "--seed", type=int, default=0, help="seed for random sampling")
    common.add_argument(
        "-v",
        "--verbose",
        help="print in the stderr what is being computed",
        action="store_true",
    )

    loaded = argparse.ArgumentParser(add_help=False, parents=[common])
    loaded.add_argument("source", help="catalog case (%s) or algebra JSON file" % ", ".join(catalog.NAMES))
    loaded.add_argument("--metric", help='JSON file {"gram": [[...]]} overriding the metric')

    parser = argparse.ArgumentParser(prog="lgr")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("connection", parents=[loaded], help="Levi-Civita connection table")
    sub.add_parser("curvature", parents=[loaded], help="nonzero curvature components")
    sub.add_parser("parallel", parents=[loaded], help="parallel left-invariant fields")

    flag = sub.add_parser("flag", parents=[loaded], help="flag curvature of a Berwald Randers metric")
    drift = flag.add_mutually_exclusive_group()
    drift.add_argument("--q", default="0", help="drift coefficient along the g-unit first parallel field")
    drift.add_argument("--drift", help="explicit drift vector instead of --q")
    flag.add_argument("--pole", required=True, help="flagpole, e.g. Y or 0,1,0,0")
    flag.add_argument("--transverse", required=True, help="transverse edge")

    sweep = sub.add_parser("sweep", parents=[loaded], help="flag curvature on random flags")
    sweep.add_argument("-n", "--samples", type=int, default=100, help="number of samples")
    sweep.add_argument("-j", "--jobs", type=int, default=1, help="worker threads")

    verify = sub.add_parser("verify", parents=[common], help="check the catalog against the published data")
    verify.add_argument("--triple", help="endomorphism triple JSON to check instead of the quaternionic one")

    brackets = sub.add_parser("brackets", parents=[loaded], help="bracket table and axiom check")
    brackets.add_argument("--dot", help="write a graphviz diagram to DOT")
    brackets.add_argument("--view", help="render the diagram and open it", action="store_true")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        session = Session(args)
    except GeometryError as e:
        sys.stderr.write("error: %s\n" % (e,))
        return e.exit_code
    return session.run()


if __name__ == "__main__":
    sys.exit(main())
