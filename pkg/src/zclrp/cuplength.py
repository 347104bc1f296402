"""Zero-divisor cup-length of (RP^m)^s: certified search and explicit witnesses.

The cup-length zcl is the maximal number of zero-divisors with nonzero
product.  Since the zero-divisor ideal is generated by the degree-1 elements
y_i = x_i + x_s, expanding any nonzero k-fold product of zero-divisors over
the generators exhibits a nonzero product of k generators, and conversely
every generator is itself a zero-divisor.  The search therefore ranges over
"generator words": exponent vectors b with product  prod_i (x_i + x_s)^b_i.
This reduction is cross-checked against a brute-force enumeration over
arbitrary kernel elements in the test suite.

Nonvanishing of a generator word is decided without ring arithmetic:

    prod_i (x_i + x_s)^b_i  =  sum over j of  prod_i C(b_i, j_i)
                               x_1^j_1 ... x_(s-1)^j_(s-1) x_s^(sum(b_i - j_i))

and distinct j-vectors give distinct basis monomials, so there is no
cancellation; the word is nonzero iff some j has every C(b_i, j_i) odd,
every j_i <= m and the residue sum <= m.  By the parity constraint the
admissible residues b_i - j_i are exactly the binary submasks of b_i, so the
word is nonzero iff the per-coordinate minimal residues sum to at most m.
The full ring product is kept as an independent oracle (verify_witness).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvariantViolationError, UndeterminedError
from .parity import trailing_ones
from .ring import get_ring, monomial_to_text, rank

DEFAULT_SEARCH_BUDGET = 5_000_000
"""Candidate-word cap for one zcl_exact call; exceeding it raises
UndeterminedError rather than ever returning an uncertified number."""


@functools.lru_cache(maxsize=None)
def _min_residues(m: int) -> tuple[int, ...]:
    """For v = 0..2m: the least r with r a submask of v and v - r <= m.

    r ranges over submasks of v exactly when C(v, v - r) is odd; v - r is
    the factor's exponent on its own variable, capped at m.  A factor power
    with v > 2m has every admissible residue > m and kills the product,
    hence the 2m cap on word exponents.
    """
    out = []
    for v in range(2 * m + 1):
        if v <= m:
            out.append(0)
            continue
        best = v
        sub = v
        while sub:
            sub = (sub - 1) & v
            if v - sub <= m and sub < best:
                best = sub
        out.append(best)
    return tuple(out)


@dataclass(frozen=True)
class GeneratorWord:
    """Multiset of pivot-form factors: exponents[i-1] copies of (x_i + x_s)."""

    m: int
    s: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1 or self.s < 2:
            raise ValueError("need m >= 1 and s >= 2")
        if len(self.exponents) != self.s - 1:
            raise ValueError(
                f"expected {self.s - 1} exponents, got {len(self.exponents)}")
        for b in self.exponents:
            if not 0 <= b <= 2 * self.m:
                raise ValueError(f"factor exponent {b} outside [0, {2 * self.m}]")
        if self.length > self.s * self.m:
            raise ValueError(
                f"word length {self.length} exceeds the top degree {self.s * self.m}")

    @property
    def length(self) -> int:
        return sum(self.exponents)


def word_nonzero(m: int, s: int,
                 exponents: Sequence[int]) -> tuple[bool, tuple[int, ...] | None]:
    """Decide whether prod_i (x_i + x_s)^b_i is nonzero in A(m, s).

    Returns (True, certificate-exponent-vector) or (False, None).  The
    certificate is the surviving basis monomial built from the minimal
    residues, x_1^j_1 ... x_s^(total residue).
    """
    word = GeneratorWord(m, s, tuple(exponents))
    table = _min_residues(m)
    residues = [table[b] for b in word.exponents]
    total = sum(residues)
    if total > m:
        return False, None
    certificate = tuple(b - r for b, r in zip(word.exponents, residues)) + (total,)
    return True, certificate


@dataclass(frozen=True)
class Witness:
    """A product of binomial factors with a surviving basis monomial.

    factors: multiset of (i, j, exponent) encoding (x_i + x_j)^exponent with
    1 <= i < j <= s.  certificate: the exponent vector of a basis monomial
    asserted to occur in the fully expanded, truncated product; checked by
    verify_witness via plain ring arithmetic.
    """

    m: int
    s: int
    factors: tuple[tuple[int, int, int], ...]
    certificate: tuple[int, ...]

    def __post_init__(self):
        for i, j, e in self.factors:
            if not 1 <= i < j <= self.s:
                raise ValueError(f"factor indices ({i},{j}) need 1 <= i < j <= {self.s}")
            if e < 1:
                raise ValueError(f"factor exponent {e} must be >= 1")
        if len(self.certificate) != self.s:
            raise ValueError("certificate length differs from s")
        for e in self.certificate:
            if not 0 <= e <= self.m:
                raise ValueError(f"certificate exponent {e} outside [0, {self.m}]")

    @property
    def length(self) -> int:
        """Number of zero-divisor factors counted with multiplicity."""
        return sum(e for _, _, e in self.factors)

    @property
    def certificate_text(self) -> str:
        return monomial_to_text(self.certificate)

    def as_dict(self) -> dict:
        return {"factors": [list(f) for f in self.factors],
                "certificate": self.certificate_text}


@dataclass(frozen=True)
class ZclResult:
    """A zcl value with its provenance and certifying witness.

    method "exact" asserts both directions: the witness product is nonzero
    and the completed search found no longer nonzero word.  A lower-bound
    method asserts only the witness.
    """

    m: int
    s: int
    value: int
    method: str  # "exact" | "witness_lower_bound"
    witness: Witness

    @property
    def g(self) -> int:
        """Gap s*m - value between the top degree and the cup-length.

        Exact when method == "exact"; otherwise an upper bound for the gap
        (a zcl lower bound under-counts nothing on the other side).
        """
        return self.s * self.m - self.value

    @property
    def is_exact(self) -> bool:
        return self.method == "exact"


def _sorted_words(total: int, parts: int, cap: int,
                  floor: int = 0) -> Iterator[tuple[int, ...]]:
    """Nondecreasing tuples with the given sum, entries in [floor, cap],
    in ascending lexicographic order."""
    if parts == 1:
        if floor <= total <= cap:
            yield (total,)
        return
    for v in range(max(floor, total - cap * (parts - 1)), total // parts + 1):
        for rest in _sorted_words(total - v, parts - 1, cap, v):
            yield (v,) + rest


def zcl_exact(m: int, s: int, *,
              max_candidates: int = DEFAULT_SEARCH_BUDGET) -> ZclResult:
    """Exact zero-divisor cup-length by descending certified search.

    Word lengths descend from s*m; within one length the sorted exponent
    vectors are enumerated lexicographically (the criterion is symmetric in
    the coordinates, so sorted words lose nothing).  The first nonzero word
    is returned, making the witness the lexicographically smallest sorted
    one of maximal length.  Exceeding max_candidates raises
    UndeterminedError; no best-effort value is ever reported as exact.
    """
    if m < 1 or s < 2:
        raise ValueError("need m >= 1 and s >= 2")
    checked = 0
    for k in range(s * m, -1, -1):
        for b in _sorted_words(k, s - 1, 2 * m):
            checked += 1
            if checked > max_candidates:
                raise UndeterminedError(
                    f"zcl({m},{s}): candidate budget {max_candidates} exhausted "
                    f"at word length {k}")
            ok, certificate = word_nonzero(m, s, b)
            if ok:
                factors = tuple((i + 1, s, e) for i, e in enumerate(b) if e)
                witness = Witness(m, s, factors, certificate)
                return ZclResult(m, s, k, "exact", witness)
    raise InvariantViolationError(f"zcl({m},{s}): no nonzero word found at all")


def verify_witness(w: Witness, *, bit_limit: int | None = None) -> bool:
    """Check a witness by plain ring arithmetic: multiply the factor powers
    and test the certificate monomial's coefficient.

    Independent of word_nonzero -- this is the oracle that cross-validates
    the combinatorial criterion.  Needs the dense ring, so the basis-size
    cap applies.
    """
    ring = get_ring(w.m, w.s, bit_limit)
    product = ring.one
    for i, j, e in w.factors:
        if product.is_zero:
            break
        product = ring.mul(product, ring.binomial_pow(i, j, e))
    return bool((product.bits >> rank(ring.spec, w.certificate)) & 1)


def explicit_witness(m: int, s: int, *,
                     bit_limit: int | None = None) -> Witness | None:
    """Best closed-form witness available from the dyadic shape of m.

    With e = trailing_ones(m):

    * m = 2^e - 1: the word (x_1 + x_s)^m ... (x_(s-1) + x_s)^m of length
      m(s-1) survives on x_1^m ... x_(s-1)^m.
    * otherwise, with sigma = (m+1)/2^e and s >= sigma: the block
      (x_1 + x_sigma)^(m + 2^e) ... (x_(sigma-1) + x_sigma)^(m + 2^e)
      survives on x_1^m ... x_(sigma-1)^m x_sigma^((sigma-1) 2^e) -- the
      parity C(m + 2^e, 2^e) is odd, so each factor contributes its top
      x_i^m term -- and each additional variable t > sigma appends one
      factor (x_1 + x_t)^m whose x_t^m term extends the product without
      cancellation.  Total length s*m - (2^e - 1).
    * s < sigma (and m not of the first shape): no construction; None.

    The witness is verified through the ring before being returned; a
    verification failure is a defect, not a data condition.
    """
    if m < 1 or s < 2:
        raise ValueError("need m >= 1 and s >= 2")
    e = trailing_ones(m)
    if m == (1 << e) - 1:
        factors = tuple((i, s, m) for i in range(1, s))
        certificate = (m,) * (s - 1) + (0,)
    else:
        sigma = (m + 1) >> e
        if s < sigma:
            return None
        factors = tuple((i, sigma, m + (1 << e)) for i in range(1, sigma))
        factors += tuple((1, t, m) for t in range(sigma + 1, s + 1))
        certificate = [0] * s
        for i in range(1, sigma):
            certificate[i - 1] = m
        certificate[sigma - 1] = (sigma - 1) << e
        for t in range(sigma + 1, s + 1):
            certificate[t - 1] = m
        certificate = tuple(certificate)
    w = Witness(m, s, factors, certificate)
    if not verify_witness(w, bit_limit=bit_limit):
        raise InvariantViolationError(
            f"explicit witness for (m={m}, s={s}) failed ring verification; "
            "this is a bug")
    return w


def g_value(m: int, s: int, result: ZclResult) -> int:
    """The gap s*m - zcl for one result; exact iff the result is."""
    if (result.m, result.s) != (m, s):
        raise ValueError(f"result is for (m={result.m}, s={result.s}), "
                         f"not (m={m}, s={s})")
    return result.g


@dataclass(frozen=True)
class GapProbe:
    """The gap sequence g(s) = s*m - zcl for s = 2..s_max.

    The sequence is nonincreasing and nonnegative (each extra variable adds
    a factor (x_1 + x_(s+1))^m to any nonzero product); reached_stable
    records whether the last value equals 2^e - 1, the known stable value.
    """

    m: int
    s_max: int
    zcl_values: tuple[int, ...]
    g_values: tuple[int, ...]
    stable_gap: int
    reached_stable: bool

    def as_dict(self) -> dict:
        return {"m": self.m, "s_max": self.s_max,
                "zcl": list(self.zcl_values), "g": list(self.g_values),
                "stable_gap": self.stable_gap,
                "reached_stable": self.reached_stable}


def g_stabilization_probe(m: int, s_max: int, *,
                          max_candidates: int = DEFAULT_SEARCH_BUDGET) -> GapProbe:
    """Exact gap sequence over s = 2..s_max with monotonicity asserted."""
    if s_max < 2:
        raise ValueError("need s_max >= 2")
    results = [zcl_exact(m, s, max_candidates=max_candidates)
               for s in range(2, s_max + 1)]
    gs = tuple(r.g for r in results)
    for a, b in zip(gs, gs[1:]):
        if b > a:
            raise InvariantViolationError(
                f"gap sequence for m={m} increased: {gs}; this is a bug")
    if gs and gs[-1] < 0:
        raise InvariantViolationError(f"negative gap for m={m}: {gs}")
    stable = (1 << trailing_ones(m)) - 1
    return GapProbe(m, s_max, tuple(r.value for r in results), gs,
                    stable, bool(gs) and gs[-1] == stable)
