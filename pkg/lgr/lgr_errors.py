"""
Reliable reporting of problems back to the user is half of any geometry
tool. This file defines the generic error functionality shared by the whole
lgr project. Reporting is based on a subscription model.

To report a user-facing error, use the error() function:

       error("case9 is not a catalog case", source="case9")

Handlers subscribe with the subscribe_errors() context manager. To route
messages to standard error:

       import sys
       from functools import partial
       with subscribe_errors(partial(print, file=sys.stderr)):
            run_cli()

To route them to a logger:

       import logging
       log = logging.getLogger("lgr")
       with subscribe_errors(log.error):
            run_cli()

To collect them in a unit test:

       errs = []
       with subscribe_errors(errs.append):
            run_cli()

errors_reported() returns the number of errors reported so far and
clear_errors() resets it. notice() goes to the same subscribers without
being counted; it is how an exact computation announces that it had to
fall back to floating point.

Library code does not call error() directly for bad input: it raises one of
the GeometryError subclasses below and the CLI reports it.
"""

from contextlib import contextmanager

_subscribers = []
_num_errors = 0


def error(message, source=None):
    """ Report an error to all subscribers """
    global _num_errors
    if source is None:
        errmsg = "error: {}".format(message)
    else:
        errmsg = "{}: error: {}".format(source, message)
    for subscriber in _subscribers:
        subscriber(errmsg)
    _num_errors += 1


def notice(message):
    """ Report an informational message; does not count as an error. """
    for subscriber in _subscribers:
        subscriber("note: {}".format(message))


def errors_reported():
    """ Return number of errors reported. """
    return _num_errors


def clear_errors():
    """ Clear the total number of errors reported. """
    global _num_errors
    _num_errors = 0


@contextmanager
def subscribe_errors(handler):
    """Context manager that allows monitoring of error messages.
    Use as follows where handler is a callable taking a single argument
    which is the message string:

    with subscribe_errors(handler):
        ... do geometry ops ...
    """
    _subscribers.append(handler)
    try:
        yield
    finally:
        _subscribers.remove(handler)


class GeometryError(Exception):
    """Base class of every error raised by the library.

    Subclasses set `template`, formatted with the keyword arguments given
    to the constructor, and `exit_code`, the CLI status for the error.
    """

    template = "{message}"
    exit_code = 2

    def __init__(self, **fields):
        self.fields = fields
        super().__init__(self.template.format(**fields))


class InvalidInput(GeometryError):
    template = "{message}"


class DimensionMismatch(GeometryError):
    template = "dimension mismatch: expected {expected}, got {got}"


class SingularMetric(GeometryError):
    template = "Gram matrix is singular"


class InvalidMetric(GeometryError):
    template = "invalid metric: {reason}"


class DegenerateFlag(GeometryError):
    template = "degenerate flag: {reason}"


class DriftTooLarge(GeometryError):
    template = "drift norm {norm} must be < 1, F would not be a Finsler metric"


class ZeroPole(GeometryError):
    template = "flagpole is the zero vector, F is not differentiable there"


class NotBerwald(GeometryError):
    template = "{reason}"
    exit_code = 3


class DegenerateDenominator(GeometryError):
    template = "closed form denominator {name} vanishes"


class UnknownCase(GeometryError):
    template = "unknown case {name!r}, expected one of: {known}"


def ensure(condition, exc_class, **fields):
    """Check condition, if false raise exc_class built from fields"""
    if not condition:
        raise exc_class(**fields)


class ValidationReport:
    """Ordered collection of violated identities.

    Each violation is a (kind, indices, message) triple; an empty report
    means every checked identity holds.
    """

    def __init__(self, violations=()):
        self.violations = list(violations)

    def add(self, kind, indices, message):
        self.violations.append((kind, tuple(indices), message))

    def extend(self, other, prefix=None):
        for kind, indices, message in other.violations:
            if prefix:
                message = "{}: {}".format(prefix, message)
            self.violations.append((kind, indices, message))

    @property
    def ok(self):
        return not self.violations

    def kinds(self):
        return {kind for kind, _, _ in self.violations}

    def lines(self):
        return [message for _, _, message in self.violations]

    def __len__(self):
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def __repr__(self):
        return "ValidationReport(%d violation(s))" % len(self.violations)
