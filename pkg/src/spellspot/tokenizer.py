"""WordPiece tokenization with a fixed, line-ordered vocabulary.

The vocabulary file is a bit-exact contract: one piece per line, token
id equal to the zero-based line number.  Continuation pieces carry the
``##`` prefix.  Unknown words map to ``[UNK]`` as a whole.  Encoding
wraps a segment in ``[CLS]`` ... ``[SEP]``, truncates to the model
length and pads with ``[PAD]``.

``extend_vocab`` appends every lexicon word that is not already a whole
piece, so spells tokenize to a single piece afterwards while all
existing ids stay valid for saved checkpoints.
"""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .errors import TokenizationError, VocabError

PAD_PIECE = "[PAD]"
UNK_PIECE = "[UNK]"
CLS_PIECE = "[CLS]"
SEP_PIECE = "[SEP]"
SPECIAL_PIECES = (PAD_PIECE, UNK_PIECE, CLS_PIECE, SEP_PIECE)
CONTINUATION_PREFIX = "##"

_MAX_WORD_CHARS = 100


@dataclass(frozen=True, eq=False)
class Vocabulary:
    pieces: tuple[str, ...]
    piece_ids: dict[str, int]
    pad_id: int
    unk_id: int
    cls_id: int
    sep_id: int

    def __len__(self) -> int:
        return len(self.pieces)

    @property
    def continuation_prefix(self) -> str:
        return CONTINUATION_PREFIX


@dataclass(frozen=True)
class Encoding:
    """Fixed-length encoding of one segment.

    All four tuples have length ``max_len``; ``word_ids`` holds the
    source word index per piece and None for special/pad positions.
    """

    ids: tuple[int, ...]
    pieces: tuple[str, ...]
    word_ids: tuple[int | None, ...]
    attention_mask: tuple[int, ...]


def vocabulary_from_pieces(pieces: list[str]) -> Vocabulary:
    piece_ids: dict[str, int] = {}
    for i, piece in enumerate(pieces):
        if piece in piece_ids:
            raise VocabError(f"duplicate piece {piece!r}")
        piece_ids[piece] = i
    for special in SPECIAL_PIECES:
        if special not in piece_ids:
            raise VocabError(f"vocabulary lacks required piece {special}")
    return Vocabulary(
        pieces=tuple(pieces),
        piece_ids=piece_ids,
        pad_id=piece_ids[PAD_PIECE],
        unk_id=piece_ids[UNK_PIECE],
        cls_id=piece_ids[CLS_PIECE],
        sep_id=piece_ids[SEP_PIECE],
    )


def load_vocab(path: Path | str) -> Vocabulary:
    """Load a vocabulary file; id = zero-based line number."""
    with open(path, "r", encoding="utf-8") as fh:
        pieces = [line.rstrip("\n") for line in fh]
    pieces = [p for p in pieces if p]
    if not pieces:
        raise VocabError(f"{path}: empty vocabulary file")
    try:
        return vocabulary_from_pieces(pieces)
    except VocabError as exc:
        raise VocabError(f"{path}: {exc}") from exc


def save_vocab(vocab: Vocabulary, path: Path | str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for piece in vocab.pieces:
            fh.write(piece + "\n")


def vocab_hash(vocab: Vocabulary) -> str:
    digest = hashlib.sha256("\n".join(vocab.pieces).encode("utf-8"))
    return digest.hexdigest()


def split_words_with_offsets(text: str) -> list[tuple[str, int, int]]:
    """Whitespace split with punctuation detached: alphanumeric runs stay
    together, every other visible character is its own word.  Returns
    (word, start, end) with character offsets into ``text``."""
    words: list[tuple[str, int, int]] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isalnum():
            j = i + 1
            while j < n and text[j].isalnum():
                j += 1
            words.append((text[i:j], i, j))
            i = j
        else:
            words.append((ch, i, i + 1))
            i += 1
    return words


def split_words(text: str) -> list[str]:
    return [w for w, _, _ in split_words_with_offsets(text)]


def tokenize_word(word: str, vocab: Vocabulary) -> list[str]:
    """Greedy longest-prefix-first WordPiece decomposition.

    Pieces after the first carry the ``##`` prefix.  If no piece matches
    at any step the whole word becomes ``[UNK]``.
    """
    if not word or any(c.isspace() for c in word):
        raise TokenizationError(f"tokenize_word needs a single non-empty word, got {word!r}")
    if len(word) > _MAX_WORD_CHARS:
        return [UNK_PIECE]
    pieces: list[str] = []
    start = 0
    n = len(word)
    while start < n:
        end = n
        found = None
        while end > start:
            candidate = word[start:end]
            if start > 0:
                candidate = CONTINUATION_PREFIX + candidate
            if candidate in vocab.piece_ids:
                found = candidate
                break
            end -= 1
        if found is None:
            return [UNK_PIECE]
        pieces.append(found)
        start = end
    return pieces


def count_tokens(text: str, vocab: Vocabulary) -> int:
    """Piece count of a segment text, excluding special and pad tokens."""
    return sum(len(tokenize_word(w, vocab)) for w in split_words(text))


def encode_words(words: list[str], vocab: Vocabulary, max_len: int) -> Encoding:
    """Encode pre-split words: CLS + pieces + SEP, truncated and padded."""
    if max_len < 3:
        raise TokenizationError(f"max_len must be >= 3, got {max_len}")
    pieces: list[str] = []
    word_ids: list[int | None] = []
    for wi, word in enumerate(words):
        for piece in tokenize_word(word, vocab):
            pieces.append(piece)
            word_ids.append(wi)
    budget = max_len - 2  # room for CLS and SEP
    pieces = pieces[:budget]
    word_ids = word_ids[:budget]

    full_pieces = [CLS_PIECE] + pieces + [SEP_PIECE]
    full_word_ids: list[int | None] = [None] + word_ids + [None]
    ids = [vocab.piece_ids[p] for p in full_pieces]
    mask = [1] * len(ids)
    while len(ids) < max_len:
        ids.append(vocab.pad_id)
        full_pieces.append(PAD_PIECE)
        full_word_ids.append(None)
        mask.append(0)
    return Encoding(
        ids=tuple(ids),
        pieces=tuple(full_pieces),
        word_ids=tuple(full_word_ids),
        attention_mask=tuple(mask),
    )


def encode_segment(segment, vocab: Vocabulary, max_len: int) -> Encoding:
    """Encode anything with a ``text`` attribute (Segment, SeqExample)."""
    return encode_words(split_words(segment.text), vocab, max_len)


@dataclass(frozen=True)
class ExtendResult:
    vocab: Vocabulary
    added: int


def extend_vocab(vocab: Vocabulary, lexicon) -> ExtendResult:
    """Append every lexicon word that is not already a whole piece.

    Append-only: existing ids are unchanged, so checkpoints saved against
    the base vocabulary stay id-compatible after an embedding resize.
    """
    new_pieces = list(vocab.pieces)
    added = 0
    for word in lexicon.all_words():  # already distinct, first-occurrence order
        if word not in vocab.piece_ids:
            new_pieces.append(word)
            added += 1
    if added == 0:
        return ExtendResult(vocab=vocab, added=0)
    return ExtendResult(vocab=vocabulary_from_pieces(new_pieces), added=added)


def detokenize(pieces: list[str]) -> list[str]:
    """Merge continuation pieces back into words."""
    words: list[str] = []
    for piece in pieces:
        if piece.startswith(CONTINUATION_PREFIX):
            if not words:
                raise TokenizationError(
                    f"continuation piece {piece!r} without a word start"
                )
            words[-1] += piece[len(CONTINUATION_PREFIX):]
        else:
            words.append(piece)
    return words


def build_vocab(texts: list[str], size: int = 8192, exclude=()) -> Vocabulary:
    """Frequency-heuristic vocabulary over a text collection.

    Specials first, then every observed character (whole and ``##``
    form) so any word over the corpus alphabet tokenizes without
    unknowns, then whole words and 2-6 character n-gram pieces by
    descending frequency until ``size`` pieces.  Words in ``exclude``
    (and start n-grams equal to them) are withheld so vocabulary
    extension has a controlled baseline.
    """
    excluded = {w.lower() for w in exclude}
    word_counts: Counter[str] = Counter()
    for text in texts:
        word_counts.update(split_words(text.lower()))

    char_counts: Counter[str] = Counter()
    start_grams: Counter[str] = Counter()
    cont_grams: Counter[str] = Counter()
    for word, count in word_counts.items():
        for ch in word:
            char_counts[ch] += count
        for length in (2, 3, 4, 5, 6):
            for i in range(len(word) - length + 1):
                gram = word[i : i + length]
                if i == 0:
                    start_grams[gram] += count
                else:
                    cont_grams[gram] += count

    pieces = list(SPECIAL_PIECES)
    seen = set(pieces)

    def add(piece: str) -> None:
        if piece not in seen:
            seen.add(piece)
            pieces.append(piece)

    for ch in sorted(char_counts, key=lambda c: (-char_counts[c], c)):
        add(ch)
        add(CONTINUATION_PREFIX + ch)

    # whole words outrank equally-frequent n-grams
    candidates: list[tuple[int, int, str, str]] = []
    for word, count in word_counts.items():
        if len(word) >= 2 and word not in excluded:
            candidates.append((-count, 0, word, word))
    for gram, count in start_grams.items():
        if gram not in excluded:
            candidates.append((-count, 1, gram, gram))
    for gram, count in cont_grams.items():
        candidates.append((-count, 1, gram, CONTINUATION_PREFIX + gram))
    for key in sorted(candidates):
        if len(pieces) >= size:
            break
        add(key[3])
    return vocabulary_from_pieces(pieces)
