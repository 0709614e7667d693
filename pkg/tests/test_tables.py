import os

import pytest

from gaussperiods import (DomainError, IntegrityError, SignedPrimePower,
                          TableRecord, diff_reference, generate_records,
                          parse_records, recheck_record,
                          records_for_reference, serialize_records,
                          table_discriminants, table_polynomials)
from gaussperiods.numtheory import aux_primes

REFS = os.path.join(os.path.dirname(__file__), "..", "references")


def test_record_json_round_trip():
    rec = TableRecord(3, 1, 7, ("1", "1", "-2", "-1"),
                      SignedPrimePower(1, 7, 2), "1", True)
    assert TableRecord.from_json(rec.to_json()) == rec
    rec = TableRecord(2, 4, 29, None, SignedPrimePower(1, 29, 1), None, None)
    assert TableRecord.from_json(rec.to_json()) == rec
    with pytest.raises(DomainError):
        TableRecord.from_json('{"degree": 3}')


def test_parse_records_reports_location(tmp_path):
    path = tmp_path / "bad.jsonl"
    good = TableRecord(3, 1, 7, None, SignedPrimePower(1, 7, 2), None, None)
    path.write_text(good.to_json() + "\n\n{broken\n")
    with pytest.raises(DomainError, match="bad.jsonl:3"):
        parse_records(str(path))


def test_table_discriminants():
    recs = table_discriminants(2, 8)
    assert [r.q for r in recs] == [5, 13, 17, 29, 37, 41, 53, 61]
    assert all(r.disc == SignedPrimePower(1, r.q, 1) for r in recs)
    assert all(r.coeffs is None for r in recs)
    with pytest.raises(DomainError):
        table_discriminants(4, 2)
    recs = table_discriminants(4, 2, allow_composite=True)
    assert [r.q for r in recs] == [17, 41]


def test_table_polynomials():
    recs = table_polynomials(3, 3)
    assert [r.q for r in recs] == [7, 13, 19]
    assert recs[0].coeffs == ("1", "1", "-2", "-1")
    assert recs[0].index_k == "1" and recs[0].monogenic
    assert recs[1].coeffs == ("1", "1", "-4", "1")


def test_generate_records_jobs_invariant():
    work = []
    for degree in (2, 3, 5):
        for ell, cfg in enumerate(aux_primes(degree, 2), start=1):
            work.append((degree, ell, cfg))
    seq = generate_records(work, jobs=1)
    par = generate_records(list(reversed(work)), jobs=2)
    assert seq == par
    assert serialize_records(seq) == serialize_records(par)


def test_diff_reference_reflexive(tmp_path):
    recs = table_polynomials(5, 4)
    path = tmp_path / "ref.jsonl"
    path.write_text(serialize_records(recs))
    report = diff_reference(recs, str(path))
    assert not report.has_mismatch
    assert all(e.status == "MATCH" for e in report.entries)


def test_diff_reference_detects_fault(tmp_path):
    recs = table_polynomials(5, 3)
    broken = list(recs)
    rec = broken[1]
    coeffs = list(rec.coeffs)
    coeffs[2] = str(int(coeffs[2]) + 1)
    broken[1] = TableRecord(rec.degree, rec.ell, rec.q, tuple(coeffs),
                            rec.disc, rec.index_k, rec.monogenic)
    path = tmp_path / "ref.jsonl"
    path.write_text(serialize_records(broken))
    report = diff_reference(recs, str(path))
    assert report.has_mismatch
    statuses = {(e.degree, e.ell): e.status for e in report.entries}
    assert statuses[(5, 2)] == "MISMATCH"
    assert statuses[(5, 1)] == "MATCH"
    assert "coeffs" in str(report)


def test_diff_reference_missing_rows(tmp_path):
    recs = table_discriminants(3, 3)
    path = tmp_path / "ref.jsonl"
    path.write_text(serialize_records(recs[:2]))
    report = diff_reference(recs, str(path))
    statuses = {(e.degree, e.ell): e.status for e in report.entries}
    assert statuses[(3, 3)] == "MISSING_IN_REFERENCE"
    report = diff_reference(recs[:1], str(path))
    statuses = {(e.degree, e.ell): e.status for e in report.entries}
    assert statuses[(3, 2)] == "MISSING_IN_RUN"
    assert not report.has_mismatch


def test_expected_exponent_override(tmp_path):
    """A reference row may keep a printed exponent verbatim while
    declaring the value the run must produce."""
    rec = table_discriminants(3, 1)[0]  # q=7, exponent 2
    printed = TableRecord(3, 1, 7, None, SignedPrimePower(1, 7, 5),
                          None, None, expected_exponent=2)
    path = tmp_path / "ref.jsonl"
    path.write_text(printed.to_json() + "\n")
    report = diff_reference([rec], str(path))
    assert not report.has_mismatch
    assert "typo" in report.entries[0].detail
    # and the override still fails when the run disagrees with it
    wrong = TableRecord(3, 1, 7, None, SignedPrimePower(1, 7, 5), None, None)
    report = diff_reference([wrong], str(path))
    assert report.has_mismatch


def test_recheck_record():
    rec = table_polynomials(3, 2)[1]
    assert recheck_record(rec) == int(rec.index_k)
    tampered = TableRecord(rec.degree, rec.ell, rec.q, rec.coeffs, rec.disc,
                           str(int(rec.index_k) + 1), rec.monogenic)
    with pytest.raises(IntegrityError):
        recheck_record(tampered)
    no_coeffs = TableRecord(3, 1, 7, None, SignedPrimePower(1, 7, 2),
                            None, None)
    with pytest.raises(DomainError):
        recheck_record(no_coeffs)


def test_records_for_reference_shipped_table1():
    path = os.path.join(REFS, "table1.jsonl")
    recs = records_for_reference(path)
    assert len(recs) == 72
    report = diff_reference(recs, path)
    assert not report.has_mismatch


def test_shipped_table4_self_consistent():
    path = os.path.join(REFS, "table4.jsonl")
    refs = parse_records(path)
    assert len(refs) == 16
    assert sorted(r.degree for r in refs) == \
        [29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]
    for rec in refs:
        assert rec.ell == 1
        assert rec.disc.exponent == rec.degree - 1
    # exact recheck of one moderately sized row from its stored strings
    rec = next(r for r in refs if r.degree == 43)
    assert recheck_record(rec) == int(rec.index_k)
