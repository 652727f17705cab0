"""JSON document format: round-trips, located parse errors, canonical text."""

import json

import pytest

from spherezone.documents import (
    document_from_line_set,
    document_to_dict,
    parse_document,
    serialize_document,
)
from spherezone.errors import DocumentError
from spherezone.generate import icosahedral_example, random_arrangement

GOOD = {
    "ring": "rational",
    "lines": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    "name": "coordinate triangle",
}


class TestParse:
    def test_from_dict(self):
        doc = parse_document(GOOD)
        assert doc.name == "coordinate triangle"
        assert [l.coeffs for l in doc.lines] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]

    def test_from_text(self):
        doc = parse_document(json.dumps(GOOD))
        assert doc.line_set().n == 3

    def test_invalid_json(self):
        with pytest.raises(DocumentError):
            parse_document("{not json")

    def test_not_an_object(self):
        with pytest.raises(DocumentError):
            parse_document("[1, 2]")

    def test_missing_lines(self):
        with pytest.raises(DocumentError):
            parse_document({"ring": "rational"})

    def test_unknown_ring(self):
        with pytest.raises(DocumentError):
            parse_document({"ring": "gaussian", "lines": GOOD["lines"]})

    def test_bad_triple_is_located(self):
        bad = {"ring": "rational", "lines": [["1", "0", "0"], ["1", "2"]]}
        with pytest.raises(DocumentError) as exc:
            parse_document(bad)
        assert exc.value.line_index == 1

    def test_bad_number_is_located(self):
        bad = {"ring": "rational", "lines": [["1", "0", "0"], ["x", "0", "1"]]}
        with pytest.raises(DocumentError) as exc:
            parse_document(bad)
        assert exc.value.line_index == 1

    def test_quadratic_in_rational_ring_rejected(self):
        bad = {"ring": "rational",
               "lines": [["1", "0", "0"], [{"a": "0", "b": "1"}, "1", "0"]]}
        with pytest.raises(DocumentError) as exc:
            parse_document(bad)
        assert exc.value.line_index == 1

    def test_degenerate_rejected_unless_unchecked(self):
        concurrent = {"ring": "rational",
                      "lines": [["1", "0", "0"], ["0", "1", "0"],
                                ["1", "-1", "0"]]}
        with pytest.raises(DocumentError):
            parse_document(concurrent)
        doc = parse_document(concurrent, check=False)
        assert len(doc.lines) == 3


class TestRoundTrip:
    @pytest.mark.parametrize("n,seed", [(4, 0), (7, 3), (10, 1)])
    def test_random_rational(self, n, seed):
        ls = random_arrangement(n, 50, seed)
        doc = document_from_line_set(ls, name="t", seed=seed)
        back = parse_document(document_to_dict(doc))
        assert [l.coeffs for l in back.lines] == [l.coeffs for l in ls.lines]

    def test_quadratic(self):
        ls = icosahedral_example()
        doc = document_from_line_set(ls, name="icosahedral")
        text = serialize_document(doc)
        back = parse_document(text)
        assert back.ring == "q-sqrt5"
        assert [l.coeffs for l in back.lines] == [l.coeffs for l in ls.lines]

    def test_serialization_is_canonical(self):
        ls = random_arrangement(5, 50, 4)
        doc = document_from_line_set(ls)
        assert serialize_document(doc) == serialize_document(doc)
        assert serialize_document(doc).endswith("\n")
