"""Exception hierarchy shared by every module."""


class ChromaError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidGraphError(ChromaError):
    pass


class InvalidSubsetError(ChromaError):
    pass


class MissingEdgeError(ChromaError):
    pass


class InvalidPosetError(ChromaError):
    pass


class NotADagError(ChromaError):
    pass


class NotInImageError(ChromaError):
    """Weighted graph cannot come from a DAG weight assignment."""


class SizeLimitError(ChromaError):
    pass


class RegistryError(ChromaError):
    pass


class InvalidPermutationError(ChromaError):
    pass


class InvalidEdgeError(ChromaError):
    pass


class InvalidHostError(ChromaError):
    pass


class InvalidEmbeddingError(ChromaError):
    pass


class ParseError(ChromaError):
    pass
