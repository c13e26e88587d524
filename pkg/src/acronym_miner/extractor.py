"""Recognition of ``Long Form (SF)`` definitions.

Short-form candidates are innermost parenthesised expressions of one or two
words and 2-10 characters. The long form is searched for right to left in
the words preceding the opening parenthesis, Schwartz-Hearst style: every
letter or digit of the short form must be found, in order, and the first one
must start a word.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass
from typing import Optional, Sequence

from .corpus import PAREN_CLOSE, PAREN_OPEN, WORD, Article, TokenSpan, segment_sentences, tokenize
from .filters import EMPTY_STOPLIST, Stoplist, check_pair

MIN_SF_CHARS = 2
MAX_SF_CHARS = 10
MAX_SF_WORDS = 2


@dataclass(frozen=True)
class SfCandidate:
    text: str
    char_count: int
    word_count: int
    sentence_index: int
    paren_open_offset: int
    paren_close_offset: int
    # offset of the (stripped) short form inside the sentence
    text_offset: int = 0


@dataclass(frozen=True)
class LfSpan:
    text: str
    start_word_index: int
    end: int


@dataclass(frozen=True)
class PairOccurrence:
    sf: str
    lf: str
    article_id: str
    language: str
    date: dt.date
    source: str
    category: str
    sf_offsets: tuple
    lf_offsets: tuple

    @property
    def key(self) -> tuple:
        return (self.language, self.sf, self.lf)


@dataclass(frozen=True)
class Rejection:
    article_id: str
    language: str
    sf: str
    lf: str
    rule: str


def window_size(sf: str) -> int:
    """Maximum number of words searched for the long form: min(|A|+5, 2|A|)."""
    n = len(sf)
    return min(n + 5, n * 2)


def find_sf_candidates(
    sentence: str, tokens: Sequence[TokenSpan], sentence_index: int = 0
) -> list[SfCandidate]:
    candidates = []
    open_stack: list[int] = []
    # index of the last parenthesis token seen, to detect nesting
    last_paren = -1
    for i, tok in enumerate(tokens):
        if tok.kind == PAREN_OPEN:
            open_stack.append(i)
            last_paren = i
        elif tok.kind == PAREN_CLOSE:
            if not open_stack:
                last_paren = i
                continue
            j = open_stack.pop()
            innermost = last_paren == j
            last_paren = i
            if not innermost:
                continue
            cand = _make_candidate(sentence, tokens[j], tok, sentence_index)
            if cand is not None:
                candidates.append(cand)
    return candidates


def _make_candidate(sentence, open_tok, close_tok, sentence_index) -> Optional[SfCandidate]:
    raw = sentence[open_tok.end:close_tok.start]
    text = raw.strip()
    n_chars = len(text)
    if not MIN_SF_CHARS <= n_chars <= MAX_SF_CHARS:
        return None
    n_words = len(text.split())
    if n_words > MAX_SF_WORDS:
        return None
    if not any(ch.isalpha() for ch in text):
        return None
    lead = len(raw) - len(raw.lstrip())
    return SfCandidate(
        text=text,
        char_count=n_chars,
        word_count=n_words,
        sentence_index=sentence_index,
        paren_open_offset=open_tok.start,
        paren_close_offset=close_tok.start,
        text_offset=open_tok.end + lead,
    )


def match_long_form(window_words: Sequence[str], sf: str) -> Optional[LfSpan]:
    """Find the shortest long form for ``sf`` at the end of ``window_words``.

    Letters and digits of ``sf`` are matched case-insensitively from right to
    left, each at the rightmost position left of the previous match; other
    characters of ``sf`` are skipped. The first letter must match at a
    position not preceded by a letter or digit. The long form runs from the
    word holding that match to the end of the window.
    """
    chars = [ch.lower() for ch in sf if ch.isalnum()]
    if not chars or not window_words:
        return None
    text = " ".join(window_words)
    lowered = [ch.lower() for ch in text]
    pos = len(text)
    for k in range(len(chars) - 1, -1, -1):
        target = chars[k]
        pos -= 1
        if k:
            while pos >= 0 and lowered[pos] != target:
                pos -= 1
        else:
            while pos >= 0 and not (
                lowered[pos] == target and (pos == 0 or not text[pos - 1].isalnum())
            ):
                pos -= 1
        if pos < 0:
            return None
    # words are joined by single spaces, so find the word holding ``pos``
    start = 0
    for index, word in enumerate(window_words):
        if pos < start + len(word):
            return LfSpan(" ".join(window_words[index:]), index, len(text))
        start += len(word) + 1
    raise AssertionError("match position outside window")


def _window_tokens(sentence: str, tokens: Sequence[TokenSpan], cand: SfCandidate) -> list[TokenSpan]:
    """Word tokens adjacent to and left of the candidate's opening parenthesis."""
    before = [t for t in tokens if t.end <= cand.paren_open_offset]
    if not before or before[-1].kind != WORD:
        return []
    gap = sentence[before[-1].end:cand.paren_open_offset]
    if len(gap) > 1 or (gap and not gap.isspace()):
        return []
    word_toks = [t for t in before if t.kind == WORD]
    return word_toks[-window_size(cand.text):]


def extract_pairs(
    article: Article,
    stoplist: Stoplist = EMPTY_STOPLIST,
    rejects: Optional[list] = None,
) -> list[PairOccurrence]:
    """Recognise and filter all acronym pairs in ``article``, in text order.

    Pairs that match but fail a filter rule are appended to ``rejects`` as
    :class:`Rejection` records when a list is given.
    """
    text = article.text
    if "(" not in text:
        return []
    found = []
    for s_index, span in enumerate(segment_sentences(text)):
        sentence = text[span.start:span.end]
        if "(" not in sentence:
            continue
        tokens = tokenize(sentence)
        for cand in find_sf_candidates(sentence, tokens, s_index):
            window = _window_tokens(sentence, tokens, cand)
            if not window:
                continue
            lf_span = match_long_form([sentence[t.start:t.end] for t in window], cand.text)
            if lf_span is None:
                continue
            lf_start = window[lf_span.start_word_index].start
            lf_end = window[-1].end
            lf = sentence[lf_start:lf_end]
            verdict = check_pair(cand.text, lf, stoplist)
            if not verdict.accepted:
                if rejects is not None:
                    rejects.append(
                        Rejection(article.id, article.language, cand.text, lf, verdict.rejected_by)
                    )
                continue
            sf_start = span.start + cand.text_offset
            found.append(
                PairOccurrence(
                    sf=cand.text,
                    lf=lf,
                    article_id=article.id,
                    language=article.language,
                    date=article.date,
                    source=article.source,
                    category=article.category,
                    sf_offsets=(sf_start, sf_start + cand.char_count),
                    lf_offsets=(span.start + lf_start, span.start + lf_end),
                )
            )
    return found
