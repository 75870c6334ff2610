"""Exception hierarchy shared by every detlab module."""


class DetlabError(Exception):
    """Base class for all detlab failures."""


class NotSquare(DetlabError):
    pass


class DimensionMismatch(DetlabError):
    pass


class TooLargeForCofactor(DetlabError):
    pass


class InternalInexactDivision(DetlabError):
    """A Bareiss division left a remainder. Always an implementation bug."""


class PrimePoolExhausted(DetlabError):
    def __init__(self, required_bits: int, available_bits: int):
        self.required_bits = required_bits
        self.available_bits = available_bits
        super().__init__(
            f"prime pool covers {available_bits} bits but the Hadamard bound "
            f"needs {required_bits} bits"
        )


class InvalidRange(DetlabError):
    pass


class DegreeOutOfRange(DetlabError):
    pass


class NodeIndexOutOfRange(DetlabError):
    pass


class InternalDisagreement(DetlabError):
    def __init__(self, values: dict):
        self.values = values
        super().__init__(f"determinant algorithms disagree: {sorted(values)}")


class FormatError(DetlabError):
    """Malformed detlab text file (matrix or measure)."""


class ParseFailure(DetlabError):
    def __init__(self, message: str, span: tuple[int, int]):
        self.span = span
        super().__init__(f"{message} at offset {span[0]}..{span[1]}")


class CorpusWriteFailure(DetlabError):
    pass
