"""Exception types shared across the engine."""

from __future__ import annotations


class QuasiError(Exception):
    """Base class for all domain errors raised by this package."""


class SizeLimitError(QuasiError):
    """An enumeration would exceed a configured size cap."""


class GroupInputError(QuasiError):
    """Malformed group data: bad permutation, bad table, bad file."""


class NonCommutingTupleError(QuasiError):
    """A tuple of group elements was required to commute pairwise."""


class VirtualCharacterError(QuasiError):
    """A class function was required to be a genuine character."""


class NonScalarError(QuasiError):
    """An element was required to act as a scalar on an irreducible."""


class NotRealizableError(QuasiError):
    """A character was required to come from a real representation."""


class HomomorphismError(QuasiError):
    """Generator images do not extend to a group homomorphism."""


class SelectorError(QuasiError):
    """An element/representation label did not match the loaded group."""
