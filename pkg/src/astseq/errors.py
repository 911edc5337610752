"""Exception types shared across the codec and pipeline modules."""


class AstseqError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedConstruct(AstseqError):
    """Source uses grammar outside the supported subset (explicit rejection,
    never silent mangling)."""

    def __init__(self, construct, detail=""):
        self.construct = construct
        self.detail = detail
        msg = construct if not detail else f"{construct}: {detail}"
        super().__init__(msg)


class MalformedTree(AstseqError):
    """A tree node cannot be rendered back to source."""


class LengthMismatch(AstseqError):
    """Frame/accessory sequences violate len(frames) == len(accessories) + 1."""


class MalformedSerialization(AstseqError):
    """The glued frame/accessory string is not a valid serialized tree.

    Typically signals a hallucinated model output; carries the offset of the
    first offending position when known.
    """

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)


class PoolExhausted(AstseqError):
    """A file defines more distinct user names than the name pool holds."""


class DuplicateEntry(AstseqError):
    """Vocabulary configuration lists the same entry twice."""


class UnknownId(AstseqError):
    """An id is outside the vocabulary's assigned range."""


class SlotArityMismatch(AstseqError):
    """I/O samples of one instance disagree on the number of value slots."""


class SchemaMismatch(AstseqError):
    """A generator mixture does not fit the inferred input schema."""


class BudgetExhaustedWarning(UserWarning):
    """Augmentation stopped at the attempt budget before reaching the
    requested pair count; carries the achieved count."""

    def __init__(self, message, achieved):
        self.achieved = achieved
        super().__init__(message)
