"""Article ingestion plus sentence and token segmentation.

Offsets everywhere are Python string indices, i.e. Unicode code points.
"""

from __future__ import annotations

import datetime as dt
import io
import json
import re
import unicodedata
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

_LANGUAGE_RE = re.compile(r"[a-z]{2}\Z")
_RECORD_KEYS = ("id", "language", "date", "source", "category", "text")

# A word is a run of letters/digits joined by internal hyphens, apostrophes or
# periods. A trailing period is kept only when the word already has an
# internal one ("U.P.", "e.g.").
_WORD_RE = re.compile(r"[^\W_]+(?:[-'’.][^\W_]+)*")

_OPENERS = "\"'(“„«‘‚‹["
_SPLIT_CANDIDATE_RE = re.compile(r"[().!?]")

WORD = "word"
PUNCTUATION = "punctuation"
PAREN_OPEN = "paren-open"
PAREN_CLOSE = "paren-close"
OTHER = "other"


@dataclass(frozen=True)
class Article:
    id: str
    language: str
    date: dt.date
    source: str
    category: str
    text: str

    def __post_init__(self):
        if not self.id:
            raise ValueError("article id must be non-empty")
        if not _LANGUAGE_RE.match(self.language):
            raise ValueError(f"bad language code {self.language!r}")


@dataclass(frozen=True)
class SentenceSpan:
    start: int
    end: int


@dataclass(frozen=True)
class TokenSpan:
    start: int
    end: int
    kind: str


@dataclass(frozen=True)
class Diagnostic:
    line: int
    reason: str

    def __str__(self):
        return f"line {self.line}: {self.reason}"


def article_from_record(record: dict) -> Article:
    """Build an Article from a decoded record, raising ValueError on bad data."""
    if not isinstance(record, dict):
        raise ValueError("record is not an object")
    missing = [k for k in _RECORD_KEYS if k not in record]
    if missing:
        raise ValueError(f"missing key(s): {', '.join(missing)}")
    for key in _RECORD_KEYS:
        if not isinstance(record[key], str):
            raise ValueError(f"field {key!r} is not a string")
    try:
        date = dt.date.fromisoformat(record["date"])
    except ValueError:
        raise ValueError(f"bad date {record['date']!r}") from None
    return Article(
        id=record["id"],
        language=record["language"],
        date=date,
        source=record["source"],
        category=record["category"],
        text=record["text"],
    )


def article_to_record(article: Article) -> dict:
    return {
        "id": article.id,
        "language": article.language,
        "date": article.date.isoformat(),
        "source": article.source,
        "category": article.category,
        "text": article.text,
    }


def parse_article_stream(
    stream: IO[bytes] | Iterable[bytes], diagnostics: list[Diagnostic] | None = None
) -> Iterator[Article]:
    """Yield articles from newline-delimited JSON records.

    Malformed records are skipped; a :class:`Diagnostic` for each is appended
    to ``diagnostics`` when a list is supplied. Blank lines and lines starting
    with ``#`` are ignored. I/O errors from ``stream`` propagate.
    """
    for lineno, raw in enumerate(stream, start=1):
        try:
            line = raw.decode("utf-8") if isinstance(raw, bytes) else raw
        except UnicodeDecodeError as exc:
            if diagnostics is not None:
                diagnostics.append(Diagnostic(lineno, f"invalid UTF-8: {exc.reason}"))
            continue
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            article = article_from_record(json.loads(stripped))
        except (json.JSONDecodeError, ValueError) as exc:
            if diagnostics is not None:
                diagnostics.append(Diagnostic(lineno, str(exc)))
            continue
        yield article


def read_articles(path, diagnostics: list[Diagnostic] | None = None) -> list[Article]:
    with open(path, "rb") as fh:
        return list(parse_article_stream(fh, diagnostics))


def write_articles(articles: Iterable[Article], fh: IO[str]) -> None:
    for article in articles:
        fh.write(json.dumps(article_to_record(article), ensure_ascii=False))
        fh.write("\n")


def parse_article_bytes(data: bytes, diagnostics: list[Diagnostic] | None = None) -> list[Article]:
    return list(parse_article_stream(io.BytesIO(data), diagnostics))


def _is_boundary(text: str, i: int) -> bool:
    # text[i] is a terminator; split when whitespace then an uppercase letter,
    # quote or bracket follows.
    j = i + 1
    n = len(text)
    if j >= n or not text[j].isspace():
        return False
    while j < n and text[j].isspace():
        j += 1
    if j >= n:
        return False
    nxt = text[j]
    return nxt.isupper() or nxt in _OPENERS


def segment_sentences(text: str) -> list[SentenceSpan]:
    """Split ``text`` into sentence spans with surrounding whitespace trimmed.

    A sentence ends after ``.``, ``!`` or ``?`` followed by whitespace and an
    uppercase letter or an opening quote/bracket. No split happens inside
    parentheses.
    """
    spans: list[SentenceSpan] = []
    start = 0
    depth = 0
    for m in _SPLIT_CANDIDATE_RE.finditer(text):
        ch = m.group()
        if ch == "(":
            depth += 1
        elif ch == ")":
            if depth:
                depth -= 1
        elif depth == 0 and _is_boundary(text, m.start()):
            _add_span(text, start, m.end(), spans)
            start = m.end()
    _add_span(text, start, len(text), spans)
    return spans


def _add_span(text: str, start: int, end: int, spans: list[SentenceSpan]) -> None:
    while start < end and text[start].isspace():
        start += 1
    while end > start and text[end - 1].isspace():
        end -= 1
    if start < end:
        spans.append(SentenceSpan(start, end))


def _char_kind(ch: str) -> str:
    if ch == "(":
        return PAREN_OPEN
    if ch == ")":
        return PAREN_CLOSE
    if unicodedata.category(ch).startswith("P"):
        return PUNCTUATION
    return OTHER


def tokenize(sentence: str) -> list[TokenSpan]:
    tokens: list[TokenSpan] = []
    pos = 0
    n = len(sentence)
    while pos < n:
        ch = sentence[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _WORD_RE.match(sentence, pos)
        if m:
            end = m.end()
            if end < n and sentence[end] == "." and "." in m.group():
                end += 1
            tokens.append(TokenSpan(pos, end, WORD))
            pos = end
        else:
            tokens.append(TokenSpan(pos, pos + 1, _char_kind(ch)))
            pos += 1
    return tokens


def words(sentence: str) -> list[str]:
    return [sentence[t.start:t.end] for t in tokenize(sentence) if t.kind == WORD]
