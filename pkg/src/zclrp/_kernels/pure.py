"""Pure-Python compute kernels.

Bit vectors are plain Python ints: bit r is the basis monomial of rank r,
rows of an F2 matrix are ints with bit c for column c.  The compiled twin in
``_fast.pyx`` implements the same contracts on machine words; the two must
produce identical outputs (covered by the kernel equivalence tests).
"""

from __future__ import annotations

BACKEND_NAME = "pure"


def _tile(unit: int, period: int, reps: int) -> int:
    """Concatenate reps copies of a period-bit pattern, by doubling."""
    out = unit
    have = 1
    while have < reps:
        take = min(have, reps - have)
        out |= (out & ((1 << (take * period)) - 1)) << (have * period)
        have += take
    return out


class RingKernel:
    """Product and squaring in F2[x_1..x_s]/(x_i^(m+1)) on rank-indexed bits.

    A product is computed by scanning the set bits of the sparser operand.
    For a factor monomial with digit vector d, the surviving monomials of the
    other operand are AND_i masks[i][m - d_i], where masks[i][c] keeps the
    ranks whose i-th digit is <= c; the surviving block then shifts by the
    factor's rank, which adds digit vectors in mixed radix without carries
    (every digit sum is <= m by construction).
    """

    def __init__(self, m: int, s: int):
        self.m = m
        self.s = s
        self.size = (m + 1) ** s
        radix = m + 1
        masks = []
        block = 1
        for _ in range(s):
            period = block * radix
            row = []
            for c in range(radix):
                unit = (1 << ((c + 1) * block)) - 1
                row.append(_tile(unit, period, self.size // period))
            masks.append(tuple(row))
            block = period
        self.masks = tuple(masks)
        sq = masks[0][m // 2]
        for i in range(1, s):
            sq &= masks[i][m // 2]
        self._square_mask = sq

    def mul(self, a: int, b: int) -> int:
        if a.bit_count() > b.bit_count():
            a, b = b, a
        m = self.m
        radix = m + 1
        masks = self.masks
        acc = 0
        while a:
            low = a & -a
            a ^= low
            r = low.bit_length() - 1
            allowed = b
            rest = r
            i = 0
            while rest:
                rest, d = divmod(rest, radix)
                if d:
                    allowed &= masks[i][m - d]
                i += 1
            if allowed:
                acc ^= allowed << r
        return acc

    def square(self, a: int) -> int:
        # (sum M_i)^2 = sum M_i^2 over F2; M^2 survives truncation exactly
        # when every doubled digit still fits, i.e. on the square-mask ranks.
        # Doubling all digits doubles the mixed-radix rank, so M at rank r
        # lands at rank 2r.
        a &= self._square_mask
        out = 0
        while a:
            low = a & -a
            a ^= low
            out |= 1 << (2 * (low.bit_length() - 1))
        return out


def rref(rows: list[int], width: int) -> list[int]:
    """Reduced row echelon form over F2.

    The pivot of a row is its lowest set bit (column order 0, 1, 2, ...).
    Returns the nonzero rows sorted by pivot column; this form is unique, so
    two lists of rows span the same subspace iff their rrefs are equal.
    """
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            c = (row & -row).bit_length() - 1
            if c in pivots:
                row ^= pivots[c]
            else:
                pivots[c] = row
                break
    # Back-substitution, highest pivot first so cleared columns stay cleared.
    for c in sorted(pivots, reverse=True):
        row = pivots[c]
        for c2 in pivots:
            if c2 != c and (pivots[c2] >> c) & 1:
                pivots[c2] ^= row
    return [pivots[c] for c in sorted(pivots)]
