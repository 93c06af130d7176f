import csv
import io
import json

import pytest

from circiso.classify import confirm_with_oracle, enumerate_type2
from circiso.graphs import ConnectionSet
from circiso.report import (
    CSV_HEADER,
    emit_census,
    parse_census_json,
    render_theta_table,
    theta_table_rows,
)

from reference_data import THETA_TABLES_24


@pytest.fixture(scope="module")
def census16():
    return enumerate_type2(16, 3, 8)


def test_json_round_trip(census16):
    text = emit_census(census16, format="json")
    back = parse_census_json(text)
    assert back.pairs == census16.pairs
    assert back.witnesses == census16.witnesses
    assert back.counts == census16.counts


def test_json_round_trip_with_oracle_flags():
    census = enumerate_type2(16, 3, 3)
    confirm_with_oracle(census)
    back = parse_census_json(emit_census(census, format="json"))
    assert back.oracle_confirmed == census.oracle_confirmed


def test_canonical_json_is_byte_deterministic(census16):
    a = emit_census(census16, format="json", canonical=True)
    b = emit_census(census16, format="json", canonical=True)
    assert a == b
    assert "generated_at" not in a
    assert "generated_at" in emit_census(census16, format="json")


def test_json_schema_fields(census16):
    doc = json.loads(emit_census(census16, format="json", canonical=True))
    assert doc["schema_version"] == 1
    assert doc["n"] == 16
    assert doc["pair_count"] == 8 == len(doc["pairs"])
    assert doc["counts_by_size"] == {"3": 2, "4": 4, "5": 2}
    first = doc["pairs"][0]
    assert set(first) == {"left", "right", "witnesses", "oracle_confirmed"}


def test_parse_rejects_unknown_schema(census16):
    doc = json.loads(emit_census(census16, format="json"))
    doc["schema_version"] = 99
    with pytest.raises(ValueError):
        parse_census_json(json.dumps(doc))


def test_csv_shape(census16):
    text = emit_census(census16, format="csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == CSV_HEADER
    assert len(rows) == 1 + 8
    assert rows[1][0] == "16"
    left = [r[1] for r in rows[1:]]
    assert "1,2,7" in left
    m_witnesses = {r[3] for r in rows[1:]}
    assert m_witnesses == {"2"}


def test_text_mode(census16):
    text = emit_census(census16, format="text")
    assert text.splitlines()[0].endswith("8")
    assert "C_16(1,2,7), C_16(2,3,5)" in text


def test_empty_census_documents():
    census = enumerate_type2(9, 3, 4)
    assert census.pairs == ()
    doc = json.loads(emit_census(census, format="json"))
    assert doc["pair_count"] == 0 and doc["pairs"] == []
    assert len(emit_census(census, format="csv").splitlines()) == 1
    back = parse_census_json(emit_census(census, format="json"))
    assert back.pairs == ()


def test_unknown_format_rejected(census16):
    with pytest.raises(ValueError):
        emit_census(census16, format="yaml")


@pytest.mark.parametrize("jumps", sorted(THETA_TABLES_24))
def test_table_rows_match_published_tables(jumps):
    rows = theta_table_rows(ConnectionSet(24, jumps), 2)
    expected = THETA_TABLES_24[jumps]
    assert len(rows) == len(expected) == 11
    for row, (t, images, (verdict, unit)) in zip(rows, expected):
        assert row.t == t
        assert row.images == images
        assert row.verdict == verdict
        assert row.unit == unit


def test_render_theta_table_text():
    text = render_theta_table(ConnectionSet(24, (1, 2, 3)), 2)
    lines = text.splitlines()
    assert len(lines) == 2 + 11
    assert "Yes (Type-1, x=11)" in lines[2 + 6 - 1]
    assert lines[2].endswith("Not")


def test_render_theta_table_marks_self_rows():
    text = render_theta_table(ConnectionSet(24, (2, 3, 9)), 2)
    assert "Yes (same)" in text
