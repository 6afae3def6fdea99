import json
from fractions import Fraction

import pytest

from arrcoh.documents import (
    ArrangementDocument,
    DocumentError,
    corpus_names,
    load_document,
    parse_document,
    parse_rational,
)

GOOD = """{
  "name": "demo",
  "dimension": 2,
  "hyperplanes": [
    {"normal": ["1", "0"], "offset": "1/2"},
    {"normal": [0, "-3/6"], "offset": "0"}
  ],
  "local_system": [-1, 1]
}
"""


def test_parse_good_document():
    doc = parse_document(GOOD)
    hs = doc.arrangement.hyperplanes
    assert hs[0].offset == Fraction(1, 2)
    assert hs[1].normal == (0, Fraction(-1, 2))
    assert doc.local_system.signs == (-1, 1)
    assert doc.name == "demo"


def test_round_trip():
    doc = parse_document(GOOD)
    again = parse_document(json.dumps(doc.to_dict()))
    assert again.arrangement == doc.arrangement
    assert again.local_system == doc.local_system


@pytest.mark.parametrize("text, value", [("3", 3), ("-2/4", Fraction(-1, 2)), (" 7 / 3 ", Fraction(7, 3)), (5, 5)])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", [0.5, "0.5", "1/0", "x", True, None])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def _error(text):
    with pytest.raises(DocumentError) as exc:
        parse_document(text, "doc.json")
    return exc.value


def test_float_coefficient_reports_its_line():
    err = _error(GOOD.replace('"1/2"', "0.5"))
    assert err.line == 5 and "hyperplane 1" in str(err)
    assert str(err).startswith("doc.json:5:")


def test_wrong_normal_length_reports_its_line():
    err = _error(GOOD.replace('[0, "-3/6"]', '["1"]'))
    assert err.line == 6 and "2 entries" in str(err)


def test_zero_normal():
    assert _error(GOOD.replace('[0, "-3/6"]', '[0, "0"]')).line == 6


def test_duplicate_hyperplane():
    text = GOOD.replace('{"normal": [0, "-3/6"], "offset": "0"}', '{"normal": ["2", "0"], "offset": "1"}')
    err = _error(text)
    assert err.line == 6 and "coincides" in str(err)


def test_bad_json_line():
    assert _error('{\n  "dimension": 2,\n  "hyperplanes": [\n}').line == 4


def test_local_system_length():
    err = _error(GOOD.replace("[-1, 1]", "[-1, 1, 1]"))
    assert err.line == 8


def test_local_system_values():
    assert _error(GOOD.replace("[-1, 1]", "[-1, 0]")).line == 8


def test_missing_dimension():
    assert "dimension" in str(_error('{"hyperplanes": []}'))


def test_local_system_optional():
    doc = parse_document(GOOD.replace(',\n  "local_system": [-1, 1]', ""))
    assert doc.local_system is None


def test_missing_file(tmp_path):
    with pytest.raises(DocumentError):
        load_document(tmp_path / "nope.json")


def test_corpus_shape(corpus):
    assert len(corpus) >= 10
    assert set(corpus) == set(corpus_names())
    for doc in corpus.values():
        assert isinstance(doc, ArrangementDocument)
        assert doc.dimension <= 3 and len(doc.arrangement) <= 7
        assert doc.local_system is not None and len(doc.local_system) == len(doc.arrangement)
