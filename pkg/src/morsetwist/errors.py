"""Exception hierarchy shared across the package."""


class MorsetwistError(Exception):
    """Base class for all library errors."""


class ParseError(MorsetwistError):
    """Malformed textual input (element grammar, JSON envelope, facet file)."""


class ZeroElement(MorsetwistError):
    """Operation undefined on the zero element."""


class NotAUnit(MorsetwistError):
    """Inversion requested for a non-invertible element."""


class NonpositiveScale(MorsetwistError):
    """Exponent rescaling requires a strictly positive factor."""


class TooLarge(MorsetwistError):
    """Brute-force oracle invoked beyond its size bound."""


class InvalidComplex(MorsetwistError):
    """Chain complex failed the boundary-squared check."""


class NonInvertibleEntry(MorsetwistError):
    """Dualization hit a transport that cannot be inverted."""


class Indeterminate(MorsetwistError):
    """A result depends on a degree whose reduction got stuck."""


class MissingUnitTag(MorsetwistError):
    """Unit-representation system bound to a flow line without a unit tag."""


class NonUnit(MorsetwistError):
    """Gauge value or unit tag outside {+1, -1}."""


class MissingDeckTag(MorsetwistError):
    """Cover lift requested but some flow line carries no deck tag."""


class UnknownGroupElement(MorsetwistError):
    """Deck tag not an element of the declared deck group."""


class Disconnected(MorsetwistError):
    """Degree-zero closed forms need a connected 1-skeleton."""


class MissingHolonomy(MorsetwistError):
    """CW incidence lacks the holonomy data the bound system needs."""


class NotRegular(MorsetwistError):
    """CW complex failed a regularity check."""


class MalformedFacets(MorsetwistError):
    """Facet list is not a pure simplicial complex."""


class UnknownExample(MorsetwistError):
    """Catalog lookup for a name not in the registry."""


class ZeroClass(MorsetwistError):
    """Obstruction check requires a nonzero twisting class."""
