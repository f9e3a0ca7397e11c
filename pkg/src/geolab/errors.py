class GeolabError(Exception):
    pass


class WordParseError(GeolabError, ValueError):
    """Text does not follow the a/A/b/B grammar."""


class IdentityWordError(GeolabError, ValueError):
    """A word reduces to the identity where a nontrivial class is required."""


class NonPrimitiveError(GeolabError, ValueError):
    """The cyclic word is a proper power u^m, m >= 2."""


class SharedEndpointError(GeolabError, ValueError):
    """Two geodesics that must be distinct share an ideal endpoint."""


class DegeneratePairError(GeolabError, RuntimeError):
    """A lift pair canonicalizes into <w>; indicates an internal inconsistency."""


class ConfigInvalidError(GeolabError, ValueError):
    """The Schottky half-spaces D(e) are not pairwise disjoint."""


class BoundaryAmbiguityError(GeolabError, RuntimeError):
    """A numeric intersection point lies within tolerance of the boundary of P."""


class ConvergenceError(GeolabError, RuntimeError):
    pass


class CapExceededError(GeolabError, ValueError):
    pass
