"""Acceptance rules for raw short-form/long-form matches.

Rule ids, in evaluation order:

a  short form contains a currency symbol
b  short form contains punctuation other than hyphens and internal periods,
   a quotation mark, or ends with an apostrophe
c  short form starts with a single letter followed by a space
d  short form has no uppercase letter
e  long form is a single word (no internal whitespace)
f  short form is on the stoplist
"""

from __future__ import annotations

import logging
import unicodedata
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Optional

log = logging.getLogger(__name__)

RULES = ("a", "b", "c", "d", "e", "f")

_HYPHENS = frozenset("-‐‑")
_QUOTES = frozenset("\"'`´‘’‚‛“”„‟«»‹›")
_APOSTROPHES = frozenset("'’")


@dataclass(frozen=True)
class Stoplist:
    entries: frozenset

    @property
    def size(self) -> int:
        return len(self.entries)

    def __contains__(self, sf: str) -> bool:
        return sf in self.entries

    @classmethod
    def from_words(cls, words: Iterable[str]) -> "Stoplist":
        return cls(frozenset(words))


EMPTY_STOPLIST = Stoplist(frozenset())


@dataclass(frozen=True)
class FilterVerdict:
    accepted: bool
    rejected_by: Optional[str] = None

    def __post_init__(self):
        if self.accepted != (self.rejected_by is None):
            raise ValueError("accepted iff rejected_by is None")


ACCEPT = FilterVerdict(True)


def _parse_stoplist(lines: Iterable[str]) -> set:
    entries = set()
    for line in lines:
        word = line.strip()
        if word and not word.startswith("#"):
            entries.add(word)
    return entries


def load_stoplist(path) -> Stoplist:
    """Read a stoplist file: one entry per line, ``#`` comments, blank lines skipped.

    A missing file raises ``OSError``. An empty result is logged as a warning.
    """
    with open(path, encoding="utf-8") as fh:
        entries = _parse_stoplist(fh)
    if not entries:
        log.warning("stoplist %s has no entries", path)
    return Stoplist(frozenset(entries))


def default_stoplist() -> Stoplist:
    text = resources.files("acronym_miner").joinpath("data/stoplist.txt").read_text("utf-8")
    return Stoplist(frozenset(_parse_stoplist(text.splitlines())))


def has_currency(sf: str) -> bool:
    return any(unicodedata.category(ch) == "Sc" for ch in sf)


def has_bad_punctuation(sf: str) -> bool:
    if sf and sf[-1] in _APOSTROPHES:
        return True
    for i, ch in enumerate(sf):
        if ch in _QUOTES:
            return True
        if not unicodedata.category(ch).startswith("P") or ch in _HYPHENS:
            continue
        # "U.N.O." keeps its periods: each follows a letter or digit
        if ch == "." and i > 0 and sf[i - 1].isalnum():
            continue
        return True
    return False


def starts_with_single_letter(sf: str) -> bool:
    return len(sf) >= 2 and sf[0].isalpha() and sf[1].isspace()


def has_uppercase(sf: str) -> bool:
    return any(ch.isupper() for ch in sf)


def failing_sf_rules(sf: str, stoplist: Stoplist) -> list:
    """All short-form rules that ``sf`` fails, in rule order."""
    failed = []
    if has_currency(sf):
        failed.append("a")
    if has_bad_punctuation(sf):
        failed.append("b")
    if starts_with_single_letter(sf):
        failed.append("c")
    if not has_uppercase(sf):
        failed.append("d")
    if sf in stoplist:
        failed.append("f")
    return failed


def check_sf(sf: str, stoplist: Stoplist = EMPTY_STOPLIST) -> FilterVerdict:
    failed = failing_sf_rules(sf, stoplist)
    return FilterVerdict(False, failed[0]) if failed else ACCEPT


def check_lf(lf: str) -> FilterVerdict:
    if len(lf.split()) < 2:
        return FilterVerdict(False, "e")
    return ACCEPT


def check_pair(sf: str, lf: str, stoplist: Stoplist = EMPTY_STOPLIST) -> FilterVerdict:
    """Combined verdict; the alphabetically first failing rule wins."""
    failed = failing_sf_rules(sf, stoplist)
    if not check_lf(lf).accepted:
        failed.append("e")
    if failed:
        return FilterVerdict(False, min(failed))
    return ACCEPT
