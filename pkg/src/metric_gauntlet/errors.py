"""Exception types raised by the toolkit."""


class GauntletError(Exception):
    """Base class for all toolkit errors."""


class EmptySentence(GauntletError, ValueError):
    """A line contained no tokens after trimming."""


class EmptyCorpus(GauntletError, ValueError):
    """A corpus-level metric was asked to score zero instances."""


class RaggedReferences(GauntletError, ValueError):
    """Parallel reference corpora do not all have the same length."""


class AlignmentError(GauntletError, ValueError):
    """Hypotheses and references could not be matched by id or line."""

    def __init__(self, message, offending_id=None):
        super().__init__(message)
        self.offending_id = offending_id


class EmbeddingDimError(GauntletError, ValueError):
    """Token embeddings with inconsistent dimensionality."""


class FractionUnreachable(GauntletError, ValueError):
    """Too few eligible tokens to reach the requested substitution fraction."""
