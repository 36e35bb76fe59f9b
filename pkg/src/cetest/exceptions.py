"""Exception types raised by cetest."""


class DomainError(ValueError):
    """An argument lies outside the domain of a mathematical function."""


class DegenerateInputError(ValueError):
    """The data cannot support the requested estimate (e.g. constant columns)."""


class DuplicatePointError(DegenerateInputError):
    """Some points have a zero k-th neighbor distance.

    Attributes
    ----------
    indices : ndarray
        Row indices whose k-th neighbor distance is zero.
    """

    def __init__(self, indices):
        self.indices = indices
        shown = ", ".join(str(int(i)) for i in indices[:10])
        more = "" if len(indices) <= 10 else f", ... ({len(indices)} total)"
        super().__init__(
            f"zero k-th neighbor distance at rows [{shown}{more}]; "
            "duplicated rows must be removed or tie-broken before estimating entropy"
        )
