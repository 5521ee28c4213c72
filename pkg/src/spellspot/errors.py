"""Exception hierarchy.

Everything raised on purpose by this package derives from SpellspotError
so the CLI can turn any expected failure into a single-line error and a
nonzero exit code.
"""


class SpellspotError(Exception):
    """Base class for all errors raised by spellspot."""


class CorpusError(SpellspotError):
    """Document ingestion or segmentation failed."""


class LexiconError(SpellspotError):
    """Spell lexicon file is malformed or violates its invariants."""


class VocabError(SpellspotError):
    """Vocabulary file is malformed or misses required pieces."""


class TokenizationError(SpellspotError):
    """Tokenization input violates a precondition."""


class DatasetError(SpellspotError):
    """Dataset construction or (de)serialization failed."""


class ModelError(SpellspotError):
    """Invalid model configuration or forward-pass input."""


class TrainingError(SpellspotError):
    """Training diverged or produced non-finite values."""


class CheckpointError(SpellspotError):
    """Checkpoint file is corrupt or incompatible with the vocabulary."""


class EvalError(SpellspotError):
    """Predictions and gold data cannot be aligned or scored."""


class AttributionError(SpellspotError):
    """Attribution produced non-finite weights."""
