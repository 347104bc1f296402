import json

import pytest

from zclrp import (BoundsRow, InvariantViolationError, SizeLimitError,
                   Witness, build_row, build_table, cache_get, cache_put,
                   emit, explicit_witness, known_tc)
from zclrp.bounds import CSV_HEADER, ENGINE_VERSION, _entry_to_json


def test_known_tc_sources():
    assert known_tc(1, 5) == (4, "hopf")
    assert known_tc(7, 3) == (14, "hopf")
    assert known_tc(3, 2) == (3, "hopf")
    assert known_tc(2, 3) == (6, "even-stable")
    assert known_tc(4, 5) == (20, "even-stable")
    assert known_tc(2, 2) is None     # s > m required
    assert known_tc(5, 3) is None
    assert known_tc(9, 9) is None


def test_build_row_exact_examples():
    row = build_row(2, 3)
    assert (row.upper, row.zcl, row.known_tc, row.equality) == (6, 6, 6, True)
    assert row.zcl_method == "exact"

    row42 = build_row(4, 2)
    assert (row42.upper, row42.zcl, row42.known_tc, row42.equality) == \
        (8, 7, None, False)


def test_build_row_witness_only():
    row = build_row(5, 3, "witness_only")
    assert row.zcl == 14 and row.zcl_method == "witness_lower_bound"
    assert row.upper == 15 and not row.equality

    # no construction applies at (5, 2): generic floor (s-1)m
    row52 = build_row(5, 2, "witness_only")
    assert row52.zcl == 5 and row52.zcl_method == "generic_lower_bound"

    with pytest.raises(ValueError):
        build_row(2, 3, "guess")


def test_build_row_size_cap():
    with pytest.raises(SizeLimitError):
        build_row(9, 9, bit_limit=10 ** 6)


def test_row_validation():
    bad = BoundsRow(m=2, s=3, upper=6, zcl=7, zcl_method="exact",
                    known_tc=None, tc_source=None, equality=False)
    with pytest.raises(InvariantViolationError):
        bad.validate()
    bad_tc = BoundsRow(m=2, s=3, upper=6, zcl=4, zcl_method="exact",
                       known_tc=3, tc_source="hopf", equality=False)
    with pytest.raises(InvariantViolationError):
        bad_tc.validate()
    bad_flag = BoundsRow(m=2, s=3, upper=6, zcl=6, zcl_method="exact",
                         known_tc=6, tc_source="even-stable", equality=False)
    with pytest.raises(InvariantViolationError):
        bad_flag.validate()


def test_emit_csv():
    assert emit([], "csv") == (CSV_HEADER + "\n").encode()
    row = build_row(1, 2)
    body = emit([row], "csv").decode()
    assert body.splitlines() == [CSV_HEADER, "1,2,2,1,exact,1,hopf,false"]


def test_emit_json_and_determinism():
    rows = [build_row(m, s) for m in (1, 2) for s in (2, 3)]
    out1 = emit(rows, "json")
    out2 = emit(list(reversed(rows)), "json")
    assert out1 == out2          # sorted by (m, s), byte-identical
    parsed = [json.loads(line) for line in out1.decode().splitlines()]
    assert [(p["m"], p["s"]) for p in parsed] == [(1, 2), (1, 3), (2, 2), (2, 3)]
    assert parsed[2]["known_tc"] is None and parsed[2]["tc_source"] is None
    assert parsed[3]["equality"] is True
    with pytest.raises(ValueError):
        emit(rows, "yaml")


def test_equality_rows_for_even_m():
    for m, s in [(2, 3), (2, 4), (4, 5)]:
        row = build_row(m, s)
        assert row.equality and row.zcl == m * s, (m, s)


def test_gap_nonincreasing_across_rows():
    for m in range(1, 6):
        gaps = [m * s - build_row(m, s).zcl for s in range(2, 6)]
        assert all(a >= b for a, b in zip(gaps, gaps[1:])), (m, gaps)


def test_build_table_skips_oversized_rows():
    rows, skipped = build_table((1, 2), (2, 12), bit_limit=3000)
    assert all((m + 1) ** s <= 3000 for m, s, *_ in
               [(r.m, r.s) for r in rows])
    assert {(m, s) for m, s, _ in skipped} == \
        {(m, s) for m in (1, 2) for s in range(2, 13) if (m + 1) ** s > 3000}


# -- cache -----------------------------------------------------------------------

def test_cache_roundtrip(tmp_path):
    path = str(tmp_path / "zcl.jsonl")
    assert cache_get(path, 5, 3) is None
    w = explicit_witness(5, 3)
    cache_put(path, 5, 3, w.length, "witness_lower_bound", w)
    entry = cache_get(path, 5, 3)
    assert entry is not None
    assert (entry.zcl, entry.method) == (14, "witness_lower_bound")
    assert entry.witness == w
    assert cache_get(path, 5, 4) is None


def test_cache_ignores_corrupt_lines(tmp_path):
    path = str(tmp_path / "zcl.jsonl")
    w = explicit_witness(3, 3)
    cache_put(path, 3, 3, w.length, "witness_lower_bound", w)
    with open(path, "a") as fh:
        fh.write("{not json\n")
    with pytest.warns(UserWarning):
        entry = cache_get(path, 3, 3)
    assert entry is not None and entry.zcl == 6


def test_cache_rejects_failing_witness(tmp_path):
    path = str(tmp_path / "zcl.jsonl")
    # certificate monomial that does not occur in the product
    fake = Witness(2, 3, ((1, 3, 1),), (0, 2, 0))
    cache_put(path, 2, 3, 1, "witness_lower_bound", fake)
    with pytest.warns(UserWarning):
        assert cache_get(path, 2, 3) is None


def test_cache_rejects_other_engine_version(tmp_path):
    path = str(tmp_path / "zcl.jsonl")
    w = explicit_witness(3, 3)
    entry = cache_put(path, 3, 3, w.length, "witness_lower_bound", w)
    stale = _entry_to_json(entry).replace(
        f'"engine_version":"{ENGINE_VERSION}"', '"engine_version":"0"')
    with open(path, "w") as fh:
        fh.write(stale + "\n")
    assert cache_get(path, 3, 3) is None


def test_cache_takes_newest_verified(tmp_path):
    path = str(tmp_path / "zcl.jsonl")
    w = explicit_witness(3, 3)
    cache_put(path, 3, 3, w.length, "witness_lower_bound", w)
    fake = Witness(3, 3, ((1, 3, 1),), (0, 0, 2))
    cache_put(path, 3, 3, 1, "witness_lower_bound", fake)
    with pytest.warns(UserWarning):
        entry = cache_get(path, 3, 3)
    assert entry is not None and entry.zcl == 6


def test_build_row_uses_cache(tmp_path):
    path = str(tmp_path / "zcl.jsonl")
    row1 = build_row(5, 3, cache_path=path)
    with open(path) as fh:
        assert len(fh.readlines()) == 1
    row2 = build_row(5, 3, cache_path=path)
    assert row1 == row2
    with open(path) as fh:
        assert len(fh.readlines()) == 1  # cache hit, nothing appended
