"""Exception types shared across the package."""


class OortlabError(Exception):
    pass


class DegreeMismatch(OortlabError, ValueError):
    """Operands act on different point sets."""


class CapExceeded(OortlabError):
    """A computation would enumerate more elements than ENUM_CAP allows."""


class NonMember(OortlabError, ValueError):
    """A permutation was required to lie in a group and does not."""


class NonSubgroup(OortlabError, ValueError):
    """A group was required to be a subgroup of another and is not."""


class NotNormal(OortlabError, ValueError):
    """A subgroup was required to be normal and is not."""


class NotPGroup(OortlabError, ValueError):
    """A group was required to be a p-group and is not."""


class NotPrimePower(OortlabError, ValueError):
    """A field size must be a prime power."""


class TooLarge(OortlabError, ValueError):
    """A parameter exceeds the supported desk-scale range."""


class PreconditionFailed(OortlabError):
    """A structure report was requested for a group outside its hypotheses."""


class ConstructionError(OortlabError):
    """A constructor produced a group failing its closed-form order check."""
