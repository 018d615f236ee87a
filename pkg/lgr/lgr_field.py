import math
from fractions import Fraction
from lgr.lgr_errors import InvalidInput, notice


class Field:
    """
    Arithmetic mode shared by one engine. Scalars are plain python
    numbers: Fraction in exact mode, float in float mode. The two modes
    are declared as instances of this class below.
    """

    def __init__(self, name, epsilon=1e-12):
        """
        name:    "exact" or "float".
        epsilon: absolute tolerance used whenever a float is compared
                 against zero (also for float fallbacks in exact mode).
        """
        if name not in ("exact", "float"):
            raise InvalidInput(message="unknown arithmetic mode %r" % (name,))
        if not epsilon > 0:
            raise InvalidInput(message="epsilon must be > 0, got %r" % (epsilon,))
        self.name = name
        self.epsilon = epsilon

    def __str__(self):
        return "field(" + self.name + ")"

    def __repr__(self):
        return "Field(%r, %r)" % (self.name, self.epsilon)

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.name == other.name
            and self.epsilon == other.epsilon
        )

    def __hash__(self):
        return hash((self.name, self.epsilon))

    @property
    def exact(self):
        return self.name == "exact"

    @property
    def zero(self):
        return Fraction(0) if self.exact else 0.0

    @property
    def one(self):
        return Fraction(1) if self.exact else 1.0

    def coerce(self, value):
        if isinstance(value, str):
            return self.parse(value)
        if self.exact:
            if isinstance(value, float):
                # repr keeps the shortest decimal that round-trips
                return Fraction(repr(value))
            return Fraction(value)
        return float(value)

    def parse(self, text):
        try:
            value = Fraction(text.strip())
        except (ValueError, ZeroDivisionError):
            raise InvalidInput(message="not a number: %r" % (text,))
        if self.exact:
            return value
        try:
            return float(value)
        except OverflowError:
            raise InvalidInput(message="number out of float range: %r" % (text,))

    def is_zero(self, value):
        if isinstance(value, float):
            return abs(value) < self.epsilon
        return value == 0

    def equal(self, a, b):
        return self.is_zero(a - b)

    def sign(self, value):
        if self.is_zero(value):
            return 0
        return 1 if value > 0 else -1

    def sqrt(self, value):
        """Exact square root of a non-negative rational, or None."""
        if value < 0:
            return None
        if isinstance(value, float):
            return math.sqrt(value) if not self.exact else None
        value = Fraction(value)
        num = math.isqrt(value.numerator)
        den = math.isqrt(value.denominator)
        if num * num == value.numerator and den * den == value.denominator:
            return Fraction(num, den)
        return None

    def root(self, value, what="value"):
        """Square root; in exact mode falls back to float when the
        argument is not a perfect square and reports the switch."""
        exact_root = self.sqrt(value)
        if exact_root is not None:
            return exact_root
        if self.exact and not isinstance(value, float):
            notice("%s %s is not a perfect square, switching to float" % (what, value))
        return math.sqrt(value)

    def mode_of(self, value):
        return "exact" if isinstance(value, (Fraction, int)) else "float"

    def format(self, value):
        if isinstance(value, float):
            if value == 0:
                value = 0.0
            return format(value, ".17g")
        return str(Fraction(value))


EXACT = Field("exact")

FLOAT = Field("float", epsilon=1e-12)


def make_field(mode, epsilon=1e-12):
    if mode == "exact" and epsilon == EXACT.epsilon:
        return EXACT
    if mode == "float" and epsilon == FLOAT.epsilon:
        return FLOAT
    return Field(mode, epsilon)
