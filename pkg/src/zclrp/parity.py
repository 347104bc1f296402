"""Dyadic utilities: binomial parity, trailing-ones length, and derived profiles.

Everything here is exact integer bit arithmetic; no floating point is used
anywhere (``z_of`` in particular is computed from bit lengths).
"""

from __future__ import annotations

from dataclasses import dataclass


def binom_parity(n: int, k: int) -> bool:
    """True iff C(n, k) is odd.

    C(n, k) is odd exactly when every binary digit of k is at most the
    corresponding digit of n.  Out-of-range arguments (k < 0, k > n, n < 0)
    give C(n, k) = 0 and hence False, so callers can sum binomial expansions
    without pre-filtering.
    """
    if n < 0 or k < 0 or k > n:
        return False
    return n & k == k


def trailing_ones(m: int) -> int:
    """Length e of the block of consecutive 1 bits ending the binary expansion.

    Equivalently the largest e with m = 2^e - 1 (mod 2^(e+1)); e = 0 iff m is
    even.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return (m ^ (m + 1)).bit_length() - 1


def z_of(m: int) -> int:
    """The exponent z with 2^z <= 2m < 2^(z+1)."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return (2 * m).bit_length() - 1


def sigma_of(m: int) -> int | None:
    """(m+1) / 2^trailing_ones(m), or None when m + 1 is a power of two.

    When defined, the value is an odd integer >= 3.
    """
    e = trailing_ones(m)
    if m == (1 << e) - 1:
        return None
    return (m + 1) >> e


@dataclass(frozen=True)
class TwoAdicProfile:
    """The dyadic data attached to m: e, z and (when defined) sigma."""

    m: int
    e: int
    z: int
    sigma: int | None

    def as_dict(self) -> dict:
        return {"m": self.m, "e": self.e, "z": self.z, "sigma": self.sigma}


def two_adic_profile(m: int) -> TwoAdicProfile:
    return TwoAdicProfile(m=m, e=trailing_ones(m), z=z_of(m), sigma=sigma_of(m))
