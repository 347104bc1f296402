"""Bound tables for the motion-planning complexity of (RP^m)^s.

For each (m, s) the chain  s*m >= TC_s >= secat >= zcl  is populated with
the computed zcl (exact or a certified lower bound) and, where one of the
quotable sources applies, the known TC value.  The table never invents TC
numbers: the only sources are the Hopf dimensions m in {1, 3, 7} (TC =
m(s-1)) and even m with s > m (the chain collapses to s*m).

Rows serialize deterministically (JSON lines or CSV ordered by (m, s));
computed values can be persisted in an append-only JSON-lines cache whose
entries are re-verified through ring arithmetic on load.
"""

from __future__ import annotations

import json
import time
import warnings
from dataclasses import dataclass

from .cuplength import (DEFAULT_SEARCH_BUDGET, Witness, zcl_exact,
                        explicit_witness, verify_witness)
from .errors import InvariantViolationError, SizeLimitError
from .ring import DEFAULT_BIT_LIMIT, RingSpec, monomial_from_text

ENGINE_VERSION = "1"
"""Bumped whenever the search criterion or witness format changes; cache
entries from other versions are ignored."""

METHOD_EXACT = "exact"
METHOD_WITNESS = "witness_lower_bound"
METHOD_GENERIC = "generic_lower_bound"  # the (s-1)m floor, no witness kept

SOURCE_HOPF = "hopf"
SOURCE_EVEN = "even-stable"


def known_tc(m: int, s: int) -> tuple[int, str] | None:
    """Known exact TC value with its source tag, or None.

    Only quotable claims are used: m in {1, 3, 7} gives m(s-1) ("hopf"),
    and even m with s > m gives s*m ("even-stable", the collapsed chain).
    """
    if m in (1, 3, 7):
        return m * (s - 1), SOURCE_HOPF
    if m % 2 == 0 and s > m:
        return s * m, SOURCE_EVEN
    return None


@dataclass(frozen=True)
class BoundsRow:
    """One (m, s) row of the bound table.

    upper is the trivial bound s*m; zcl carries its method tag; known_tc is
    None unless a quotable source applies.  equality means zcl == upper, in
    which case the whole chain collapses (even when zcl is only a lower
    bound, since it is then squeezed).  secat itself is never computed, only
    bracketed by [zcl, upper].
    """

    m: int
    s: int
    upper: int
    zcl: int
    zcl_method: str
    known_tc: int | None
    tc_source: str | None
    equality: bool

    def validate(self) -> None:
        if self.upper != self.m * self.s:
            raise InvariantViolationError(f"row ({self.m},{self.s}): bad upper bound")
        if not 0 <= self.zcl <= self.upper:
            raise InvariantViolationError(
                f"row ({self.m},{self.s}): zcl {self.zcl} outside [0, {self.upper}]")
        if self.known_tc is not None and not (
                self.zcl <= self.known_tc <= self.upper):
            raise InvariantViolationError(
                f"row ({self.m},{self.s}): chain zcl <= TC <= s*m violated: "
                f"{self.zcl} <= {self.known_tc} <= {self.upper}")
        if self.equality != (self.zcl == self.upper):
            raise InvariantViolationError(
                f"row ({self.m},{self.s}): equality flag inconsistent")

    def as_dict(self) -> dict:
        return {"m": self.m, "s": self.s, "upper": self.upper, "zcl": self.zcl,
                "zcl_method": self.zcl_method, "known_tc": self.known_tc,
                "tc_source": self.tc_source, "equality": self.equality}


# -- result cache ---------------------------------------------------------------

@dataclass(frozen=True)
class CacheEntry:
    """One cached zcl computation; the witness re-verifies on load."""

    m: int
    s: int
    zcl: int
    method: str
    witness: Witness
    engine_version: str
    timestamp: float


def _entry_to_json(entry: CacheEntry) -> str:
    return json.dumps({
        "m": entry.m, "s": entry.s, "zcl": entry.zcl, "method": entry.method,
        "witness": entry.witness.as_dict(),
        "engine_version": entry.engine_version,
        "timestamp": entry.timestamp,
    }, separators=(",", ":"))


def _entry_from_json(line: str) -> CacheEntry:
    raw = json.loads(line)
    m, s = int(raw["m"]), int(raw["s"])
    spec_like = RingSpec(m, s)  # validates ranges; cache is desk-scale only
    factors = tuple((int(i), int(j), int(e)) for i, j, e in raw["witness"]["factors"])
    certificate = monomial_from_text(spec_like, raw["witness"]["certificate"])
    witness = Witness(m, s, factors, certificate)
    return CacheEntry(m, s, int(raw["zcl"]), str(raw["method"]), witness,
                      str(raw["engine_version"]), float(raw["timestamp"]))


def cache_put(path: str, m: int, s: int, zcl: int, method: str,
              witness: Witness) -> CacheEntry:
    """Append one entry; whole-line writes keep concurrent appends intact."""
    entry = CacheEntry(m, s, zcl, method, witness, ENGINE_VERSION, time.time())
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(_entry_to_json(entry) + "\n")
    return entry


def cache_get(path: str, m: int, s: int, *,
              bit_limit: int | None = None) -> CacheEntry | None:
    """Newest verified entry for (m, s) at the current engine version.

    Corrupt lines are skipped with a warning; an entry whose witness fails
    ring re-verification is distrusted (warning, then older entries are
    tried).  Anything else -- absent file, no matching key, version
    mismatch -- is simply a miss.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except FileNotFoundError:
        return None
    matches = []
    for n, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            entry = _entry_from_json(line)
        except (ValueError, KeyError, TypeError) as exc:
            warnings.warn(f"{path}:{n}: skipping corrupt cache line ({exc})")
            continue
        if (entry.m, entry.s) == (m, s) and entry.engine_version == ENGINE_VERSION:
            matches.append((n, entry))
    for n, entry in reversed(matches):
        if entry.zcl != entry.witness.length and entry.method == METHOD_EXACT:
            warnings.warn(f"{path}:{n}: cached zcl does not match witness length")
            continue
        if verify_witness(entry.witness, bit_limit=bit_limit):
            return entry
        warnings.warn(f"{path}:{n}: cached witness failed re-verification")
    return None


# -- row construction ------------------------------------------------------------

def build_row(m: int, s: int, policy: str = "exact", *,
              cache_path: str | None = None,
              bit_limit: int | None = None,
              max_candidates: int = DEFAULT_SEARCH_BUDGET) -> BoundsRow:
    """Compute one table row under the given policy.

    policy "exact" runs the certified search (the witness is additionally
    re-verified through ring arithmetic -- a disagreement would be a bug and
    raises).  policy "witness_only" uses the closed-form construction when
    it applies and otherwise falls back to the generic (s-1)m lower bound.
    Rows whose ring would exceed the basis-size cap raise SizeLimitError.
    """
    if policy not in ("exact", "witness_only"):
        raise ValueError(f"unknown policy {policy!r}")
    limit = DEFAULT_BIT_LIMIT if bit_limit is None else bit_limit
    if (m + 1) ** s > limit:
        raise SizeLimitError(
            f"(m+1)^s = {(m + 1) ** s} exceeds the cap of {limit}; row ({m},{s}) skipped")

    zcl = method = witness = None
    if cache_path is not None:
        entry = cache_get(cache_path, m, s, bit_limit=limit)
        if entry is not None and (policy == "witness_only"
                                  or entry.method == METHOD_EXACT):
            zcl, method, witness = entry.zcl, entry.method, entry.witness

    if zcl is None:
        if policy == "exact":
            result = zcl_exact(m, s, max_candidates=max_candidates)
            if not verify_witness(result.witness, bit_limit=limit):
                raise InvariantViolationError(
                    f"criterion and ring disagree on the ({m},{s}) witness; "
                    "this is a bug")
            zcl, method, witness = result.value, METHOD_EXACT, result.witness
        else:
            w = explicit_witness(m, s, bit_limit=limit)
            if w is not None:
                zcl, method, witness = w.length, METHOD_WITNESS, w
            else:
                zcl, method = (s - 1) * m, METHOD_GENERIC
        if cache_path is not None and witness is not None:
            cache_put(cache_path, m, s, zcl, method, witness)

    tc = known_tc(m, s)
    row = BoundsRow(m=m, s=s, upper=s * m, zcl=zcl, zcl_method=method,
                    known_tc=tc[0] if tc else None,
                    tc_source=tc[1] if tc else None,
                    equality=zcl == s * m)
    row.validate()
    return row


def build_table(m_range: tuple[int, int], s_range: tuple[int, int],
                policy: str = "exact", *,
                cache_path: str | None = None,
                bit_limit: int | None = None,
                max_candidates: int = DEFAULT_SEARCH_BUDGET,
                ) -> tuple[list[BoundsRow], list[tuple[int, int, str]]]:
    """All rows over inclusive ranges; rows over a resource cap are skipped
    and reported as (m, s, reason) instead of aborting the table."""
    rows, skipped = [], []
    for m in range(m_range[0], m_range[1] + 1):
        for s in range(s_range[0], s_range[1] + 1):
            try:
                rows.append(build_row(m, s, policy, cache_path=cache_path,
                                      bit_limit=bit_limit,
                                      max_candidates=max_candidates))
            except SizeLimitError as exc:
                skipped.append((m, s, str(exc)))
    return rows, skipped


# -- emission ---------------------------------------------------------------------

CSV_HEADER = "m,s,upper,zcl,zcl_method,known_tc,tc_source,equality"


def emit(rows: list[BoundsRow], fmt: str = "json") -> bytes:
    """Serialize rows ordered by (m, s); byte-identical across runs.

    JSON output is one object per line; CSV uses the fixed header above with
    empty fields for absent values and lowercase booleans.
    """
    ordered = sorted(rows, key=lambda r: (r.m, r.s))
    for row in ordered:
        row.validate()
    if fmt == "json":
        body = "".join(json.dumps(r.as_dict(), separators=(",", ":")) + "\n"
                       for r in ordered)
        return body.encode()
    if fmt == "csv":
        lines = [CSV_HEADER]
        for r in ordered:
            lines.append(",".join([
                str(r.m), str(r.s), str(r.upper), str(r.zcl), r.zcl_method,
                "" if r.known_tc is None else str(r.known_tc),
                "" if r.tc_source is None else r.tc_source,
                "true" if r.equality else "false",
            ]))
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown format {fmt!r}")
