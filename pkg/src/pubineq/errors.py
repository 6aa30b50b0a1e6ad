"""Exception types shared across the toolkit."""


class PubineqError(Exception):
    """Base class for all toolkit errors."""


class EmptyNameError(PubineqError):
    """A given name or surname is blank after trimming."""


class ParseError(PubineqError):
    """An input file row/line could not be parsed."""

    def __init__(self, message: str, row: int | None = None):
        self.row = row
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)


class SchemaError(PubineqError):
    """An input file is missing a required column or key."""


class MixedConferenceError(PubineqError):
    """An article's conference differs from the corpus being built."""


class EmptyInputError(PubineqError):
    """An operation received an empty value collection."""


class NegativeValueError(PubineqError):
    """A value collection contains a negative entry."""


class UndefinedRPDError(PubineqError):
    """Relative percentage difference of (0, 0) is undefined."""


class EmptyGroupError(PubineqError):
    """A grouping label has no members in the corpus."""


class EmptyMappingError(PubineqError):
    """A grouping file contains no usable rules."""


class EmptyCorpusError(PubineqError):
    """No documents were supplied to the topic model."""


class DegenerateVocabError(PubineqError):
    """Preprocessing left no vocabulary to model."""


class TopicOutOfRangeError(PubineqError):
    """A topic id is outside the fitted model's range."""


class NoAbstractsError(PubineqError):
    """No article in the group carries a non-empty abstract."""


class ProviderError(PubineqError):
    """The embedding provider failed or returned malformed output."""


class DimMismatchError(PubineqError):
    """Embedding vectors of inconsistent dimension were combined."""


class ZeroVectorError(PubineqError):
    """Cosine similarity is undefined for a zero vector."""


class ConfigError(PubineqError):
    """The run configuration is invalid or incomplete."""
