class FoldBoundError(Exception):
    """Base class for every error raised by the package."""


class WordParseError(FoldBoundError, ValueError):
    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"{reason} at position {position} in {text!r}")


class LengthCapExceeded(FoldBoundError):
    def __init__(self, cap: int, length: int):
        self.cap = cap
        self.length = length
        super().__init__(f"expansion would produce {length} letters, cap is {cap}")


class ReductionError(FoldBoundError):
    def __init__(self, word: str, index: int, reason: str):
        self.word = word
        self.index = index
        self.reason = reason
        super().__init__(f"cannot reduce {word!r}: {reason} (index {index})")


class ThinningError(FoldBoundError):
    pass


class InvalidFoldingCurveError(FoldBoundError):
    pass


class InvalidBoundarySystemError(FoldBoundError, ValueError):
    pass


class RegionError(FoldBoundError):
    pass


class CatalogFormatError(FoldBoundError):
    def __init__(self, record: int, reason: str):
        self.record = record
        self.reason = reason
        super().__init__(f"catalog record {record}: {reason}")
