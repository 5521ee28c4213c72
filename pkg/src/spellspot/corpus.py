"""Corpus ingestion and segmentation.

Novels arrive as one UTF-8 plain-text file per document.  After
normalization (lowercasing, newline cleanup) a corpus is cut into
segments by one of three strategies:

* ``sentence_split``  - one sentence per segment,
* ``paragraph_split`` - one blank-line-delimited paragraph per segment,
* ``sequence_split``  - consecutive sentences greedily packed until a
  token budget is reached; a new pack always starts with the first
  sentence that did not fit.

Sentence boundaries are found by a deterministic rule table instead of a
third-party sentence tokenizer: a sentence ends at ``.``, ``!`` or ``?``
followed by whitespace, except that (a) a trailing ``.`` on a word from
the abbreviation list ("mr.", "dr.", ...) never ends a sentence and
(b) ``!`` or ``?`` directly followed by a closing quote or bracket binds
inside the quotation, so ``"avada kedavra!" he cried.`` stays one
sentence.  A ``.`` followed by closing quotes ends the sentence after
the quotes.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from itertools import groupby
from pathlib import Path

from ._data import data_path
from .errors import CorpusError

SENTENCE = "sentence"
PARAGRAPH = "paragraph"
PACKED = "packed"

SENTENCE_SPLIT = "sentence_split"
PARAGRAPH_SPLIT = "paragraph_split"
SEQUENCE_SPLIT = "sequence_split"
SPLIT_VARIANTS = (SENTENCE_SPLIT, PARAGRAPH_SPLIT, SEQUENCE_SPLIT)

_CLOSERS = "\"')]’”»"

_SEGMENT_FIELDS = ("seg_id", "doc_id", "kind", "text", "sentence_indices")


@dataclass(frozen=True)
class RawDocument:
    """One normalized plain-text document."""

    doc_id: str
    text: str
    role: str = "train"  # train | eval


@dataclass(frozen=True)
class Segment:
    """One unit of corpus text with provenance.

    ``sentence_indices`` are the zero-based ordinals, within the source
    document, of the sentences the segment covers.  ``oversized`` marks a
    single sentence above the packing budget; it is advisory and not
    serialized (the encoder truncates such segments).
    """

    seg_id: str
    doc_id: str
    kind: str
    text: str
    sentence_indices: tuple[int, ...]
    oversized: bool = False


@dataclass(frozen=True)
class SplitStrategy:
    """Which segmentation rule to apply; ``max_tokens`` only matters for
    ``sequence_split``."""

    variant: str
    max_tokens: int = 384

    def __post_init__(self) -> None:
        if self.variant not in SPLIT_VARIANTS:
            raise CorpusError(f"unknown split strategy: {self.variant!r}")
        if self.variant == SEQUENCE_SPLIT and self.max_tokens < 8:
            raise CorpusError(f"max_tokens must be >= 8, got {self.max_tokens}")


def load_abbreviations(path: Path | None = None) -> frozenset[str]:
    """Load the abbreviation exception list, one entry per line."""
    path = Path(path) if path is not None else data_path("abbreviations.txt")
    entries = []
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line:
            entries.append(line.lower())
    return frozenset(entries)


_DEFAULT_ABBREVIATIONS: frozenset[str] | None = None


def _abbreviations(abbreviations: frozenset[str] | None) -> frozenset[str]:
    global _DEFAULT_ABBREVIATIONS
    if abbreviations is not None:
        return abbreviations
    if _DEFAULT_ABBREVIATIONS is None:
        _DEFAULT_ABBREVIATIONS = load_abbreviations()
    return _DEFAULT_ABBREVIATIONS


def normalize_text(raw: str) -> str:
    """Lowercase ``raw``, normalize line endings to ``\\n`` and trim each line.

    No other characters are altered.  Raises CorpusError for documents
    with no visible content.
    """
    text = raw.replace("\r\n", "\n").replace("\r", "\n")
    out = "\n".join(line.strip() for line in text.split("\n")).lower()
    if not out.strip():
        raise CorpusError("empty document")
    return out


def load_documents(source: Path | str, role: str = "train") -> list[RawDocument]:
    """Read every ``*.txt`` file under ``source`` (or the single file) as a
    normalized document; doc_id is the file stem.  Files are taken in
    sorted name order so corpora hash identically across runs."""
    source = Path(source)
    files = sorted(source.glob("*.txt")) if source.is_dir() else [source]
    if not files:
        raise CorpusError(f"no .txt documents found in {source}")
    docs = []
    for path in files:
        try:
            raw = path.read_bytes().decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CorpusError(f"{path}: invalid utf-8 at byte {exc.start}") from exc
        try:
            text = normalize_text(raw)
        except CorpusError as exc:
            raise CorpusError(f"{path}: {exc}") from exc
        docs.append(RawDocument(doc_id=path.stem, text=text, role=role))
    if len({d.doc_id for d in docs}) != len(docs):
        raise CorpusError("duplicate doc_id (file stems must be unique)")
    return docs


def _paragraph_texts(text: str) -> list[str]:
    """Maximal runs of non-blank lines, inner newlines joined by spaces."""
    paragraphs: list[str] = []
    current: list[str] = []
    for line in text.split("\n"):
        if line.strip():
            current.append(line.strip())
        elif current:
            paragraphs.append(" ".join(current))
            current = []
    if current:
        paragraphs.append(" ".join(current))
    return paragraphs


def _ends_sentence(token: str, abbreviations: frozenset[str]) -> bool:
    core = token.rstrip(_CLOSERS)
    if not core:
        return False
    last = core[-1]
    if last == ".":
        return core not in abbreviations
    if last in "!?":
        # closing quote after ! or ? binds the mark inside the quotation
        return len(core) == len(token)
    return False


def _sentences_in_paragraph(paragraph: str, abbreviations: frozenset[str]) -> list[str]:
    sentences: list[str] = []
    current: list[str] = []
    for token in paragraph.split():
        current.append(token)
        if _ends_sentence(token, abbreviations):
            sentences.append(" ".join(current))
            current = []
    if current:
        sentences.append(" ".join(current))
    return sentences


def split_sentences(
    doc: RawDocument, abbreviations: frozenset[str] | None = None
) -> list[Segment]:
    """One segment per sentence.  Sentences never span a blank line, so a
    paragraph always contributes at least one sentence."""
    abbreviations = _abbreviations(abbreviations)
    segments = []
    ordinal = 0
    for paragraph in _paragraph_texts(doc.text):
        for sentence in _sentences_in_paragraph(paragraph, abbreviations):
            segments.append(
                Segment(
                    seg_id=f"{doc.doc_id}:{SENTENCE}:{ordinal}",
                    doc_id=doc.doc_id,
                    kind=SENTENCE,
                    text=sentence,
                    sentence_indices=(ordinal,),
                )
            )
            ordinal += 1
    return segments


def split_paragraphs(
    doc: RawDocument, abbreviations: frozenset[str] | None = None
) -> list[Segment]:
    """One segment per blank-line-delimited paragraph.

    ``sentence_indices`` cover the paragraph's sentences, numbered
    globally within the document so the three strategies agree on
    sentence ordinals.
    """
    abbreviations = _abbreviations(abbreviations)
    segments = []
    sentence_ordinal = 0
    for i, paragraph in enumerate(_paragraph_texts(doc.text)):
        n_sentences = len(_sentences_in_paragraph(paragraph, abbreviations))
        text = " ".join(paragraph.split())
        segments.append(
            Segment(
                seg_id=f"{doc.doc_id}:{PARAGRAPH}:{i}",
                doc_id=doc.doc_id,
                kind=PARAGRAPH,
                text=text,
                sentence_indices=tuple(
                    range(sentence_ordinal, sentence_ordinal + n_sentences)
                ),
            )
        )
        sentence_ordinal += n_sentences
    return segments


def pack_sequences(sentences: list[Segment], max_tokens: int, vocab) -> list[Segment]:
    """Greedy left-to-right packing of sentence segments.

    A sentence joins the current pack iff the pack's token count plus the
    sentence's token count stays within ``max_tokens``; otherwise it
    starts a new pack.  Token counts use the vocabulary's piece count
    without special or padding tokens.  Packing restarts at document
    boundaries.  A single sentence above the budget becomes its own pack,
    flagged oversized.
    """
    from . import tokenizer

    packs: list[Segment] = []
    for doc_id, group in groupby(sentences, key=lambda s: s.doc_id):
        ordinal = 0
        current: list[Segment] = []
        current_count = 0

        def flush() -> None:
            nonlocal ordinal, current, current_count
            if not current:
                return
            packs.append(
                Segment(
                    seg_id=f"{doc_id}:{PACKED}:{ordinal}",
                    doc_id=doc_id,
                    kind=PACKED,
                    text=" ".join(s.text for s in current),
                    sentence_indices=tuple(
                        i for s in current for i in s.sentence_indices
                    ),
                    oversized=len(current) == 1 and current_count > max_tokens,
                )
            )
            ordinal += 1
            current = []
            current_count = 0

        for sentence in group:
            count = tokenizer.count_tokens(sentence.text, vocab)
            if current and current_count + count <= max_tokens:
                current.append(sentence)
                current_count += count
            else:
                flush()
                current = [sentence]
                current_count = count
        flush()
    return packs


def segment_corpus(
    docs: list[RawDocument],
    strategy: SplitStrategy,
    vocab=None,
    abbreviations: frozenset[str] | None = None,
) -> list[Segment]:
    """Segment every document with the given strategy, preserving document
    order.  ``vocab`` is required for ``sequence_split``."""
    segments: list[Segment] = []
    if strategy.variant == SENTENCE_SPLIT:
        for doc in docs:
            segments.extend(split_sentences(doc, abbreviations))
    elif strategy.variant == PARAGRAPH_SPLIT:
        for doc in docs:
            segments.extend(split_paragraphs(doc, abbreviations))
    else:
        if vocab is None:
            raise CorpusError("sequence_split requires a vocabulary for token counts")
        for doc in docs:
            sentences = split_sentences(doc, abbreviations)
            segments.extend(pack_sequences(sentences, strategy.max_tokens, vocab))
    return segments


def segment_record(segment: Segment) -> dict:
    """Wire-format record with fixed field order."""
    return {
        "seg_id": segment.seg_id,
        "doc_id": segment.doc_id,
        "kind": segment.kind,
        "text": segment.text,
        "sentence_indices": list(segment.sentence_indices),
    }


def write_segments(segments: list[Segment], path: Path | str) -> None:
    """Write segments as line-delimited records."""
    with open(path, "w", encoding="utf-8") as fh:
        for segment in segments:
            fh.write(json.dumps(segment_record(segment), ensure_ascii=False) + "\n")


def read_segments(path: Path | str) -> list[Segment]:
    """Read a segment file written by :func:`write_segments`."""
    segments = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
                segments.append(
                    Segment(
                        seg_id=rec["seg_id"],
                        doc_id=rec["doc_id"],
                        kind=rec["kind"],
                        text=rec["text"],
                        sentence_indices=tuple(rec["sentence_indices"]),
                    )
                )
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise CorpusError(f"{path}: malformed segment record at line {lineno}") from exc
    return segments


def segments_hash(segments: list[Segment]) -> str:
    """sha256 over the canonical wire form; stable across runs and loads."""
    digest = hashlib.sha256()
    for segment in segments:
        digest.update(
            json.dumps(segment_record(segment), ensure_ascii=False).encode("utf-8")
        )
        digest.update(b"\n")
    return digest.hexdigest()
