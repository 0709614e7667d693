"""Table generation and golden-reference diffing.

Records are serialized as JSON Lines, one record per line, with all big
integers as decimal strings. Reference files under references/ transcribe
published tables; two entries there carry an expected_exponent override
marking suspected typos (printed exponent kept verbatim, corrected value
used for matching).
"""

import json
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Optional

from .discriminant import SignedPrimePower, field_discriminant, index_k, poly_discriminant
from .errors import DomainError, IntegrityError
from .numtheory import aux_primes, is_prime
from .periodpoly import IntPoly, period_polynomial

_KEYS = ("degree", "ell", "q", "coeffs", "disc_base", "disc_exp",
         "disc_sign", "index_k", "monogenic")


@dataclass(frozen=True)
class TableRecord:
    degree: int
    ell: int
    q: int
    coeffs: Optional[tuple]  # decimal strings, descending powers
    disc: SignedPrimePower
    index_k: Optional[str]
    monogenic: Optional[bool]
    expected_exponent: Optional[int] = None  # typo override, references only

    def key(self):
        return (self.degree, self.ell)

    def to_json(self):
        d = {
            "degree": self.degree,
            "ell": self.ell,
            "q": self.q,
            "coeffs": list(self.coeffs) if self.coeffs is not None else None,
            "disc_base": self.disc.base,
            "disc_exp": self.disc.exponent,
            "disc_sign": self.disc.sign,
            "index_k": self.index_k,
            "monogenic": self.monogenic,
        }
        if self.expected_exponent is not None:
            d["expected_exponent"] = self.expected_exponent
        return json.dumps(d, separators=(", ", ": "))

    @classmethod
    def from_json(cls, line):
        d = json.loads(line)
        for key in _KEYS:
            if key not in d:
                raise DomainError(f"missing key {key!r}")
        return cls(
            degree=d["degree"],
            ell=d["ell"],
            q=d["q"],
            coeffs=tuple(d["coeffs"]) if d["coeffs"] is not None else None,
            disc=SignedPrimePower(d["disc_sign"], d["disc_base"], d["disc_exp"]),
            index_k=d["index_k"],
            monogenic=d["monogenic"],
            expected_exponent=d.get("expected_exponent"),
        )


def _check_degree(degree, allow_composite):
    if not allow_composite and not is_prime(degree):
        raise DomainError("table mode expects a prime degree "
                          "(pass allow_composite to override)")


def _disc_record(degree, ell, cfg):
    return TableRecord(degree, ell, cfg.q, None, field_discriminant(cfg),
                       None, None)


def _full_record(args):
    degree, ell, cfg = args
    poly = period_polynomial(cfg)
    pdisc = poly_discriminant(poly)
    fdisc = field_discriminant(cfg)
    k = index_k(pdisc, fdisc)
    coeffs = tuple(str(c) for c in poly.coeffs_descending())
    return TableRecord(degree, ell, cfg.q, coeffs, fdisc, str(k), k == 1)


def table_discriminants(degree, count, allow_composite=False):
    """Field-discriminant records for ell = 1..count (no coefficients)."""
    _check_degree(degree, allow_composite)
    cfgs = aux_primes(degree, count, totally_real=True)
    return [_disc_record(degree, ell, cfg)
            for ell, cfg in enumerate(cfgs, start=1)]


def table_polynomials(degree, count, allow_composite=False, jobs=1):
    """Full records, including exact coefficients, polynomial
    discriminant index and monogenicity, for ell = 1..count."""
    _check_degree(degree, allow_composite)
    cfgs = aux_primes(degree, count, totally_real=True)
    work = [(degree, ell, cfg) for ell, cfg in enumerate(cfgs, start=1)]
    return generate_records(work, jobs)


def generate_records(work, jobs=1):
    """Compute full records for (degree, ell, cfg) triples; output is
    always sorted by (degree, ell), independent of the schedule."""
    if jobs > 1 and len(work) > 1:
        with Pool(jobs) as pool:
            records = pool.map(_full_record, work)
    else:
        records = [_full_record(w) for w in work]
    return sorted(records, key=TableRecord.key)


def serialize_records(records):
    return "".join(r.to_json() + "\n" for r in records)


def parse_records(path):
    records = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                records.append(TableRecord.from_json(line))
            except (DomainError, ValueError, KeyError, TypeError) as exc:
                raise DomainError(f"{path}:{lineno}: bad record: {exc}") from exc
    return records


def recheck_record(record):
    """Self-consistency check: rebuild the polynomial from the stored
    coefficient strings and confirm field discriminant and index."""
    if record.coeffs is None:
        raise DomainError("record has no coefficients to recheck")
    poly = IntPoly.from_descending(int(c) for c in record.coeffs)
    pdisc = poly_discriminant(poly)
    fdisc = SignedPrimePower(record.disc.sign, record.disc.base,
                             record.disc.exponent)
    k = index_k(pdisc, fdisc)
    if record.index_k is not None and str(k) != record.index_k:
        raise IntegrityError(f"stored index {record.index_k} != recomputed {k}")
    return k


@dataclass(frozen=True)
class DiffEntry:
    degree: int
    ell: int
    status: str  # MATCH / MISMATCH / MISSING_IN_REFERENCE / MISSING_IN_RUN
    detail: str = ""

    def __str__(self):
        line = f"{self.status} degree={self.degree} ell={self.ell}"
        return f"{line} {self.detail}" if self.detail else line


@dataclass(frozen=True)
class DiffReport:
    entries: tuple

    @property
    def has_mismatch(self):
        return any(e.status == "MISMATCH" for e in self.entries)

    def __str__(self):
        return "\n".join(str(e) for e in self.entries)


def _compare(run, ref):
    problems = []
    notes = []
    if run.q != ref.q:
        problems.append(f"q: run={run.q} ref={ref.q}")
    if run.disc.base != ref.disc.base:
        problems.append(f"disc base: run={run.disc.base} ref={ref.disc.base}")
    if run.disc.sign != ref.disc.sign:
        problems.append(f"disc sign: run={run.disc.sign} ref={ref.disc.sign}")
    if ref.expected_exponent is not None:
        if run.disc.exponent != ref.expected_exponent:
            problems.append(f"disc exp: run={run.disc.exponent} "
                            f"expected={ref.expected_exponent}")
        else:
            notes.append(f"exponent {ref.disc.exponent} in reference treated "
                         f"as typo for {ref.expected_exponent}")
    elif run.disc.exponent != ref.disc.exponent:
        problems.append(f"disc exp: run={run.disc.exponent} "
                        f"ref={ref.disc.exponent}")
    if run.coeffs is not None and ref.coeffs is not None \
            and run.coeffs != ref.coeffs:
        problems.append(f"coeffs: run={','.join(run.coeffs)} "
                        f"ref={','.join(ref.coeffs)}")
    if run.index_k is not None and ref.index_k is not None \
            and run.index_k != ref.index_k:
        problems.append(f"index_k: run={run.index_k} ref={ref.index_k}")
    if run.monogenic is not None and ref.monogenic is not None \
            and run.monogenic != ref.monogenic:
        problems.append(f"monogenic: run={run.monogenic} ref={ref.monogenic}")
    if problems:
        return "MISMATCH", "; ".join(problems)
    return "MATCH", "; ".join(notes)


def diff_reference(records, reference_path):
    """Diff generated records against a stored JSONL reference."""
    refs = {r.key(): r for r in parse_records(reference_path)}
    runs = {r.key(): r for r in records}
    entries = []
    for key in sorted(set(refs) | set(runs)):
        if key not in refs:
            entries.append(DiffEntry(*key, "MISSING_IN_REFERENCE"))
        elif key not in runs:
            entries.append(DiffEntry(*key, "MISSING_IN_RUN"))
        else:
            status, detail = _compare(runs[key], refs[key])
            entries.append(DiffEntry(*key, status, detail))
    return DiffReport(tuple(entries))


def records_for_reference(reference_path, jobs=1):
    """Regenerate exactly the (degree, ell) pairs a reference file
    contains; coefficients are computed only for entries that store them."""
    refs = parse_records(reference_path)
    by_degree = {}
    for r in refs:
        by_degree.setdefault(r.degree, []).append(r)
    out = []
    heavy = []
    for degree, rows in by_degree.items():
        max_ell = max(r.ell for r in rows)
        cfgs = aux_primes(degree, max_ell, totally_real=True)
        for r in rows:
            cfg = cfgs[r.ell - 1]
            if r.coeffs is None and r.index_k is None:
                out.append(_disc_record(degree, r.ell, cfg))
            else:
                heavy.append((degree, r.ell, cfg))
    out.extend(generate_records(heavy, jobs))
    return sorted(out, key=TableRecord.key)
