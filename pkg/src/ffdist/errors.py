"""Exception types shared across the package.

Every error raised by ffdist derives from FFDistError, so callers can
catch the whole family at once.  Cap violations get their own branch
because the CLI maps them to a dedicated exit code.
"""


class FFDistError(Exception):
    """Base class for all package errors."""


# --- modulus validation -----------------------------------------------------

class CompositeModulus(FFDistError):
    """q has a nontrivial factor."""


class EvenModulus(FFDistError):
    """q is even; only odd moduli are supported."""


class ModulusTooSmall(FFDistError):
    """q < 3."""


class ModulusTooLarge(FFDistError):
    """q exceeds the table-memory cap."""


# --- arithmetic -------------------------------------------------------------

class ZeroInverse(FFDistError):
    """Multiplicative inverse of 0 requested."""


# --- resource caps ----------------------------------------------------------

class CapError(FFDistError):
    """Common parent of the two cap violations (CLI exit code 3)."""


class CapExceeded(CapError):
    """Grid size q**s over the configured cap."""


class PairCapExceeded(CapError):
    """#E * #F over the configured pair cap."""


# --- set / distribution contracts -------------------------------------------

class FieldMismatch(FFDistError):
    """Two point sets built over different (q, s)."""


class RoundingDrift(FFDistError):
    """Spectral counts too far from integers; precision lost."""


class EmptyOffzeroSupport(FFDistError):
    """All off-zero counts vanish; support bound undefined."""


class OddDimension(FFDistError):
    """A checker restricted to even s received odd s."""


# --- generators and file I/O ------------------------------------------------

class BadGenerator(FFDistError):
    """Generator spec violates its preconditions."""


class SizeTooLarge(FFDistError):
    """Requested set size exceeds q**s (or the generator's support)."""


class ParseError(FFDistError):
    """Malformed point-set file; message carries the line number."""


class DuplicatePoint(FFDistError):
    """A point appears twice in a set."""


class CoordinateOutOfRange(FFDistError):
    """A file coordinate lies outside [0, q)."""
