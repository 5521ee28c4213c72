"""Spell lexicon and string-comparison labeling.

A lexicon holds incantations (the pronounced phrase), spell names (the
literary designation), action-as-spell families (travel/mind-magic terms
treated as spells, with their morphological variants enumerated
explicitly) and an excluded list of generic category phrases that are
never counted ("defensive spells").

Matching is exact lowercase string comparison at word boundaries: a
phrase matches only when bordered by non-alphanumeric characters or the
segment edge, so "patronus" never fires inside "patronuses".  At a given
start offset the longest phrase wins, and matches never overlap.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

from .errors import LexiconError

INCANTATION_WITH_NAME = "incantation_with_name"
INCANTATION_ONLY = "incantation_only"
NAME_ONLY = "name_only"
ACTION_AS_SPELL = "action_as_spell"
CATEGORIES = (INCANTATION_WITH_NAME, INCANTATION_ONLY, NAME_ONLY, ACTION_AS_SPELL)

INCANTATIONS_ONLY = "incantations_only"
COMBINED = "combined"
MATCH_MODES = (INCANTATIONS_ONLY, COMBINED)


@dataclass(frozen=True)
class SpellEntry:
    incantation: str | None
    names: tuple[str, ...]
    category: str


@dataclass(frozen=True)
class MatchSpan:
    """A phrase occurrence: segment text in [start, end) equals phrase."""

    phrase: str
    start: int
    end: int
    entry_ref: int


@dataclass(frozen=True)
class SegmentLabel:
    positive: bool
    spans: tuple[MatchSpan, ...]


def _check_phrase(value: str, context: str) -> str:
    if not isinstance(value, str) or not value.strip():
        raise LexiconError(f"{context}: empty phrase")
    if value != value.lower():
        raise LexiconError(f"{context}: phrase {value!r} is not lowercase")
    if value != " ".join(value.split()):
        raise LexiconError(f"{context}: phrase {value!r} has irregular whitespace")
    return value


class SpellLexicon:
    """Immutable lexicon with per-mode phrase indexes."""

    def __init__(self, entries: list[SpellEntry], excluded_phrases: list[str]):
        self.entries = tuple(entries)
        self.excluded_phrases = tuple(excluded_phrases)
        self._validate()
        self._by_mode = {
            INCANTATIONS_ONLY: self._build_index(include_names=False),
            COMBINED: self._build_index(include_names=True),
        }

    def _validate(self) -> None:
        seen: dict[str, str] = {}
        for entry in self.entries:
            if entry.category not in CATEGORIES:
                raise LexiconError(f"unknown category {entry.category!r}")
            if entry.category == NAME_ONLY and entry.incantation is not None:
                raise LexiconError(
                    f"name_only entry carries an incantation: {entry.names}"
                )
            phrases = list(entry.names)
            if entry.incantation is not None:
                phrases.append(entry.incantation)
            if not phrases:
                raise LexiconError("entry with neither incantation nor names")
            for phrase in phrases:
                if phrase in seen:
                    raise LexiconError(f"duplicate phrase {phrase!r}")
                seen[phrase] = entry.category
        for phrase in self.excluded_phrases:
            if phrase in seen:
                raise LexiconError(
                    f"excluded phrase {phrase!r} collides with a match phrase"
                )
        if len(set(self.excluded_phrases)) != len(self.excluded_phrases):
            raise LexiconError("duplicate excluded phrase")

    def _build_index(self, include_names: bool) -> list[tuple[str, int]]:
        phrases = []
        for ref, entry in enumerate(self.entries):
            if entry.incantation is not None:
                phrases.append((entry.incantation, ref))
            if include_names:
                for name in entry.names:
                    phrases.append((name, ref))
        # longest first so longest-match wins at equal start offsets
        phrases.sort(key=lambda p: (-len(p[0]), p[0]))
        return phrases

    def phrases(self, mode: str) -> list[tuple[str, int]]:
        if mode not in MATCH_MODES:
            raise LexiconError(f"unknown match mode: {mode!r}")
        return self._by_mode[mode]

    def all_words(self) -> list[str]:
        """Distinct whitespace-separated words of every match phrase, in
        first-occurrence order (incantation before names, entry order)."""
        words: list[str] = []
        seen: set[str] = set()
        for entry in self.entries:
            parts = []
            if entry.incantation is not None:
                parts.append(entry.incantation)
            parts.extend(entry.names)
            for phrase in parts:
                for word in phrase.split():
                    if word not in seen:
                        seen.add(word)
                        words.append(word)
        return words

    def content_hash(self) -> str:
        digest = hashlib.sha256()
        for entry in self.entries:
            digest.update(
                json.dumps(
                    {
                        "category": entry.category,
                        "incantation": entry.incantation,
                        "names": list(entry.names),
                    }
                ).encode("utf-8")
            )
        digest.update(json.dumps(list(self.excluded_phrases)).encode("utf-8"))
        return digest.hexdigest()


def load_lexicon(path: Path | str) -> SpellLexicon:
    """Load a line-delimited lexicon file.

    Entry records: ``{"category": ..., "incantation": ..., "names": [...]}``
    (incantation optional).  Excluded records: ``{"excluded": "phrase"}``.
    """
    entries: list[SpellEntry] = []
    excluded: list[str] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            context = f"{path}:{lineno}"
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise LexiconError(f"{context}: invalid record") from exc
            if "excluded" in rec:
                excluded.append(_check_phrase(rec["excluded"], context))
                continue
            category = rec.get("category")
            incantation = rec.get("incantation")
            if incantation is not None:
                incantation = _check_phrase(incantation, context)
            names = tuple(_check_phrase(n, context) for n in rec.get("names", []))
            entries.append(
                SpellEntry(incantation=incantation, names=names, category=category)
            )
    return SpellLexicon(entries, excluded)


def save_lexicon(lexicon: SpellLexicon, path: Path | str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for entry in lexicon.entries:
            rec: dict = {"category": entry.category}
            if entry.incantation is not None:
                rec["incantation"] = entry.incantation
            rec["names"] = list(entry.names)
            fh.write(json.dumps(rec, ensure_ascii=False) + "\n")
        for phrase in lexicon.excluded_phrases:
            fh.write(json.dumps({"excluded": phrase}, ensure_ascii=False) + "\n")


def _boundary_before(text: str, pos: int) -> bool:
    return pos == 0 or not text[pos - 1].isalnum()


def _boundary_after(text: str, pos: int) -> bool:
    return pos >= len(text) or not text[pos].isalnum()


def find_matches(segment, lexicon: SpellLexicon, mode: str) -> list[MatchSpan]:
    """All non-overlapping lexicon matches in the segment, left to right."""
    text = segment.text
    phrases = lexicon.phrases(mode)
    by_first: dict[str, list[tuple[str, int]]] = {}
    for phrase, ref in phrases:
        by_first.setdefault(phrase[0], []).append((phrase, ref))

    spans: list[MatchSpan] = []
    pos = 0
    n = len(text)
    while pos < n:
        candidates = by_first.get(text[pos])
        if candidates and _boundary_before(text, pos):
            for phrase, ref in candidates:  # longest first
                end = pos + len(phrase)
                if text.startswith(phrase, pos) and _boundary_after(text, end):
                    spans.append(MatchSpan(phrase=phrase, start=pos, end=end, entry_ref=ref))
                    pos = end
                    break
            else:
                pos += 1
        else:
            pos += 1
    return spans


def label_segment(segment, lexicon: SpellLexicon, mode: str) -> SegmentLabel:
    """Positive iff the segment contains at least one lexicon match."""
    spans = tuple(find_matches(segment, lexicon, mode))
    return SegmentLabel(positive=bool(spans), spans=spans)
