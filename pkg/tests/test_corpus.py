import datetime as dt
import io
import json

import pytest
from hypothesis import given, strategies as st

from acronym_miner.corpus import (
    PAREN_CLOSE,
    PAREN_OPEN,
    PUNCTUATION,
    WORD,
    Article,
    parse_article_bytes,
    parse_article_stream,
    segment_sentences,
    tokenize,
    words,
    write_articles,
)

RECORD = {
    "id": "x1", "language": "en", "date": "2011-05-02", "source": "bbc",
    "category": "economy", "text": "The International Monetary Fund (IMF) lent money.",
}


def _line(rec):
    return (json.dumps(rec) + "\n").encode()


def test_single_record_round_trip():
    [a] = parse_article_bytes(_line(RECORD))
    assert a == Article("x1", "en", dt.date(2011, 5, 2), "bbc", "economy", RECORD["text"])
    out = io.StringIO()
    write_articles([a], out)
    assert parse_article_bytes(out.getvalue().encode()) == [a]


def test_empty_input():
    diags = []
    assert parse_article_bytes(b"", diags) == []
    assert diags == []


def test_middle_record_missing_text_is_skipped():
    bad = {k: v for k, v in RECORD.items() if k != "text"}
    data = _line(RECORD) + _line(bad) + _line(dict(RECORD, id="x3"))
    diags = []
    arts = parse_article_bytes(data, diags)
    assert [a.id for a in arts] == ["x1", "x3"]
    assert len(diags) == 1
    assert diags[0].line == 2
    assert "text" in diags[0].reason


@pytest.mark.parametrize("bad", [
    b"{not json\n",
    _line(dict(RECORD, language="EN")),
    _line(dict(RECORD, language="eng")),
    _line(dict(RECORD, id="")),
    _line(dict(RECORD, date="2011-13-01")),
    _line(dict(RECORD, source=3)),
    b"[1, 2]\n",
    b"\xff\xfe\n",
])
def test_malformed_records_produce_diagnostics(bad):
    diags = []
    assert parse_article_bytes(bad, diags) == []
    assert [d.line for d in diags] == [1]


def test_comments_and_blank_lines_ignored():
    data = b"# header\n\n" + _line(RECORD)
    diags = []
    assert len(list(parse_article_stream(io.BytesIO(data), diags))) == 1
    assert diags == []


def _texts(text):
    return [text[s.start:s.end] for s in segment_sentences(text)]


def test_segment_examples():
    assert _texts("A. B.") == ["A.", "B."]
    assert segment_sentences("") == []
    assert _texts("no terminator here") == ["no terminator here"]


def test_segment_rules():
    assert _texts("It rose 3.5 percent. Then it fell.") == ["It rose 3.5 percent.", "Then it fell."]
    assert _texts("He left. and came back.") == ["He left. and came back."]
    # a closing quote or bracket right after the terminator blocks the split
    assert _texts('Done! "Really?" (Yes.) Ok? Fine') == ["Done!", '"Really?" (Yes.) Ok?', "Fine"]
    assert _texts("Why? «Because» he said. (Later) more") == [
        "Why?", "«Because» he said.", "(Later) more",
    ]
    # no split inside parentheses
    assert _texts("See (Fig. A. Below) now. Next") == ["See (Fig. A. Below) now.", "Next"]


def test_tokenize_examples():
    s = "Fund (IMF)"
    toks = tokenize(s)
    assert [(s[t.start:t.end], t.kind) for t in toks] == [
        ("Fund", WORD), ("(", PAREN_OPEN), ("IMF", WORD), (")", PAREN_CLOSE),
    ]
    assert tokenize("") == []
    assert [(t.start, t.end, t.kind) for t in tokenize("U.P.")] == [(0, 4, WORD)]


def test_tokenize_word_shapes():
    assert words("l'energia atomica, e.g. well-known") == ["l'energia", "atomica", "e.g.", "well-known"]
    # a lone trailing period is punctuation, not part of the word
    s = "end."
    assert [(s[t.start:t.end], t.kind) for t in tokenize(s)] == [("end", WORD), (".", PUNCTUATION)]
    assert words("snake_case") == ["snake", "case"]


text_st = st.text(
    alphabet=st.sampled_from("aZé1 .!?()'-\n\"«AB"), max_size=80,
)


@given(text_st)
def test_sentences_partition_non_whitespace(text):
    spans = segment_sentences(text)
    prev_end = 0
    for s in spans:
        assert prev_end <= s.start < s.end <= len(text)
        assert not text[s.start].isspace() and not text[s.end - 1].isspace()
        assert not text[prev_end:s.start].strip()
        prev_end = s.end
    assert not text[prev_end:].strip()
    # concatenation reconstructs the text minus inter-sentence whitespace
    kept = sum(s.end - s.start for s in spans)
    assert kept == len(text.strip()) - sum(
        len(text[a.end:b.start]) for a, b in zip(spans, spans[1:])
    )


@given(text_st)
def test_tokens_ordered_and_cover_alphanumerics(text):
    toks = tokenize(text)
    assert toks == tokenize(text)
    covered = set()
    prev = 0
    for t in toks:
        assert prev <= t.start < t.end <= len(text)
        prev = t.end
        piece = text[t.start:t.end]
        if t.kind == WORD:
            assert any(c.isalnum() for c in piece)
            covered.update(range(t.start, t.end))
        elif piece in "()":
            assert t.kind == (PAREN_OPEN if piece == "(" else PAREN_CLOSE)
    alnum = {i for i, c in enumerate(text) if c.isalnum()}
    assert alnum <= covered


@given(text_st)
def test_word_round_trip(text):
    ws = words(text)
    assert words(" ".join(ws)) == ws
