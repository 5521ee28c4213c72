"""spellspot: context-based phrase recognition for fantasy-novel spells.

Pipeline modules:

* :mod:`spellspot.corpus`      - ingestion and the three segmentation strategies
* :mod:`spellspot.spellbook`   - spell lexicon and string-comparison labeling
* :mod:`spellspot.tokenizer`   - WordPiece tokenization and vocabulary extension
* :mod:`spellspot.dataset`     - sequence / IOB token dataset builders
* :mod:`spellspot.model`       - trainable transformer encoder with swappable heads
* :mod:`spellspot.evaluate`    - confusion-matrix metrics, soft matching, baseline
* :mod:`spellspot.attribution` - gradient-times-input token influence reports
* :mod:`spellspot.cli`         - batch command-line surface
"""

from ._data import data_path
from .errors import SpellspotError

__version__ = "0.1.0"

__all__ = ["SpellspotError", "data_path", "__version__"]
