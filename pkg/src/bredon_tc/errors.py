"""Exception hierarchy shared by all modules."""


class BredonTCError(ValueError):
    """Base class for every error raised by this package."""


class GroupMismatch(BredonTCError):
    pass


class ElementNotInGroup(BredonTCError):
    pass


class RadiusTooLarge(BredonTCError):
    pass


class NotASubgroup(BredonTCError):
    pass


class EmptyTuple(BredonTCError):
    pass


class RankTooLarge(BredonTCError):
    pass


class IncompatibleRank(BredonTCError):
    pass


class DegreeTooLarge(BredonTCError):
    pass


class DegreeMismatch(BredonTCError):
    pass


class RankMismatch(BredonTCError):
    pass


class SizeTooLarge(BredonTCError):
    pass


class UnknownDescriptorCase(BredonTCError):
    """Raised when a descriptor operation hits a case outside the closed table."""
