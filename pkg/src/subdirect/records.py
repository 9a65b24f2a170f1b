"""Analysis records and the line-oriented report format.

A report file holds one JSON object per line.  The first line is a
header documenting the schema version and the element encoding; every
following line is one analysis record.  All values are plain JSON types
chosen so that a parsed record compares equal to the one that was
written, and identical inputs always serialise to identical bytes (the
timing field is therefore forced to null on disk).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Optional, Union

from .errors import ParseError
from .extensibility import build_report, is_extensible
from .groups import FiniteGroup, Subgroup, abelian_invariants, prime_factors
from .homoracle import (
    coefficient_modulus,
    oracle_is_p_extensible,
    raw_oracle_is_p_extensible,
)
from .presets import identify_small_group
from .products import (
    certify,
    goursat_quintuple,
    is_section,
    product_of,
    projections_kernels,
    star_product,
)

RECORD_SCHEMA = "subdirect-analysis/1"
HEADER_SCHEMA = "subdirect-report/1"
ENCODING_NOTE = ("element (g, h) of G x H has index g*|H| + h; "
                 "'pairs' lists [g, h] factor index pairs")

ORACLE_ABELIANIZATION = "abelianization"
ORACLE_RAW = "raw-value-table"


@dataclass
class AnalysisRecord:
    """One analysed subgroup of a direct product, JSON-ready.

    per_prime maps the decimal prime string to a verdict object with
    the criterion verdict, the deciding methods, the witness orders and
    the oracle verdict (null when the oracle was skipped).
    """

    schema: str
    left: dict
    right: dict
    pairs: list
    subdirect: bool
    projections: dict
    quotient: Optional[dict]
    contains_diagonal: Optional[bool]
    primes: list
    per_prime: dict
    extensible: Optional[bool]
    oracle_extensible: Optional[bool]
    oracle_mode: Optional[str]
    inconsistent: bool
    star: Optional[dict]
    timing_ms: Optional[float] = field(default=None, compare=False)

    def to_dict(self) -> dict:
        data = {f.name: getattr(self, f.name) for f in fields(self)}
        data["timing_ms"] = None
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True,
                          separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "AnalysisRecord":
        names = {f.name for f in fields(cls)}
        unknown = set(data) - names
        if unknown:
            raise ParseError(f"unknown record fields {sorted(unknown)}")
        missing = names - set(data)
        if missing:
            raise ParseError(f"record is missing fields {sorted(missing)}")
        if data.get("schema") != RECORD_SCHEMA:
            raise ParseError(f"unsupported record schema {data.get('schema')!r}")
        return cls(**data)


def _group_summary(G: FiniteGroup) -> dict:
    return {"label": G.label, "order": G.order}


def _quotient_summary(q: FiniteGroup) -> dict:
    name = identify_small_group(q)
    invariants = None
    if q.is_abelian:
        invariants = list(abelian_invariants(q).divisors)
    return {"order": q.order, "name": name,
            "abelian_invariants": invariants}


def _witnesses_to_json(witnesses: dict) -> dict:
    out = {}
    for key, value in sorted(witnesses.items()):
        if isinstance(value, tuple):
            out[key] = list(value)
        else:
            out[key] = value
    return out


def analyze_subgroup(U: Subgroup, primes=None, *,
                     with_oracle: bool = True,
                     raw_oracle: bool = False) -> AnalysisRecord:
    """Full analysis of one subgroup U of a direct product.

    Non-subdirect subgroups are not an error here: the record carries
    the projection orders and no verdicts.
    """
    start = time.perf_counter()
    info = product_of(U)
    cert = certify(U)
    proj = projections_kernels(U)
    projections = {
        "p1_order": proj.p1.order,
        "k1_order": proj.k1.order,
        "p2_order": proj.p2.order,
        "k2_order": proj.k2.order,
    }
    quotient = None
    if cert.is_subdirect:
        quotient = _quotient_summary(goursat_quintuple(U).q1)
    contains_diag = None
    if info.left is info.right:
        contains_diag = cert.diagonal_witness is not None
    if primes is None:
        primes = prime_factors(info.group.order)
    primes = sorted(set(int(p) for p in primes))

    per_prime: dict = {}
    extensible = None
    oracle_overall = None
    inconsistent = False
    mode = None
    if cert.is_subdirect:
        report = build_report(U, primes)
        extensible = report.overall()
        if with_oracle:
            mode = ORACLE_RAW if raw_oracle else ORACLE_ABELIANIZATION
            oracle_overall = True
        for p in primes:
            verdict = report.per_prime[p]
            entry = {
                "extensible": verdict.extensible,
                "methods": list(verdict.methods),
                "coefficient_modulus": coefficient_modulus(U, p),
                "witnesses": _witnesses_to_json(verdict.witnesses),
                "oracle": None,
            }
            if with_oracle:
                if raw_oracle:
                    entry["oracle"] = raw_oracle_is_p_extensible(U, p)
                else:
                    entry["oracle"] = oracle_is_p_extensible(U, p)
                oracle_overall = oracle_overall and entry["oracle"]
                if entry["oracle"] != verdict.extensible:
                    inconsistent = True
            per_prime[str(p)] = entry

    return AnalysisRecord(
        schema=RECORD_SCHEMA,
        left=_group_summary(info.left),
        right=_group_summary(info.right),
        pairs=[list(pair) for pair in info.pairs(U.elements)],
        subdirect=cert.is_subdirect,
        projections=projections,
        quotient=quotient,
        contains_diagonal=contains_diag,
        primes=primes,
        per_prime=per_prime,
        extensible=extensible,
        oracle_extensible=oracle_overall,
        oracle_mode=mode,
        inconsistent=inconsistent,
        star=None,
        timing_ms=(time.perf_counter() - start) * 1000.0,
    )


def star_analysis(U: Subgroup, V: Subgroup, primes=None, *,
                  with_oracle: bool = True,
                  raw_oracle: bool = False) -> AnalysisRecord:
    """Analysis of U*V decorated with composition facts.

    Always checks that the composite quotient is a section of both input
    quotients; evaluates the kernel preservation condition when both
    inputs contain a plain diagonal and are extensible.
    """
    from .extensibility import star_preservation_condition
    from .products import contains_twisted_diagonal, goursat_quotient

    def has_plain_diagonal(X: Subgroup) -> bool:
        witness = contains_twisted_diagonal(X)
        return witness is not None and witness.is_identity

    W = star_product(U, V)
    record = analyze_subgroup(W, primes, with_oracle=with_oracle,
                              raw_oracle=raw_oracle)
    star: dict = {
        "left_input": _input_summary(U),
        "right_input": _input_summary(V),
        "composite_order": W.order,
    }
    qw = goursat_quotient(W)
    star["section_of_left"] = is_section(qw, goursat_quotient(U))
    star["section_of_right"] = is_section(qw, goursat_quotient(V))

    condition = None
    info_u = product_of(U)
    info_v = product_of(V)
    square = (info_u.left is info_u.right is info_v.left is info_v.right)
    if square and _subdirect(U) and _subdirect(V):
        if (has_plain_diagonal(U) and has_plain_diagonal(V)
                and is_extensible(U) and is_extensible(V)):
            condition = {
                "side1": star_preservation_condition(U, V, side=1),
                "side2": star_preservation_condition(U, V, side=2),
            }
    star["preservation_condition"] = condition
    record.star = star
    return record


def _input_summary(U: Subgroup) -> dict:
    info = product_of(U)
    proj = projections_kernels(U)
    return {
        "left": _group_summary(info.left),
        "right": _group_summary(info.right),
        "order": U.order,
        "subdirect": proj.p1.is_whole and proj.p2.is_whole,
        "extensible": (is_extensible(U)
                       if proj.p1.is_whole and proj.p2.is_whole else None),
    }


def _subdirect(U: Subgroup) -> bool:
    proj = projections_kernels(U)
    return proj.p1.is_whole and proj.p2.is_whole


# -- report files --------------------------------------------------------------


def report_header(extra: Optional[dict] = None) -> dict:
    header = {
        "schema": HEADER_SCHEMA,
        "record_schema": RECORD_SCHEMA,
        "encoding": ENCODING_NOTE,
    }
    if extra:
        header.update(extra)
    return {key: header[key] for key in sorted(header)}


def write_records(path: Union[str, Path], records, *,
                  extra_header: Optional[dict] = None) -> int:
    """Stream records to a report file; returns the record count."""
    path = Path(path)
    count = 0
    with path.open("w", encoding="utf-8") as fh:
        fh.write(json.dumps(report_header(extra_header), sort_keys=True,
                            separators=(",", ":")) + "\n")
        for record in records:
            fh.write(record.to_json() + "\n")
            count += 1
    return count


def read_records(path: Union[str, Path]) -> tuple[dict, list]:
    """Parse a report file back into (header, records)."""
    path = Path(path)
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines:
        raise ParseError(f"{path} is empty")
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad header line: {exc}") from exc
    if not isinstance(header, dict) or header.get("schema") != HEADER_SCHEMA:
        raise ParseError("first line is not a report header")
    records = []
    for i, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            payload = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad record on line {i}: {exc}") from exc
        records.append(AnalysisRecord.from_dict(payload))
    return header, records
