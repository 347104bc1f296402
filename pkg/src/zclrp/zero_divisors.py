"""The ideal of diagonal zero-divisors in A(m, s).

An element is a zero-divisor when it dies under the substitution
x_i -> x into F2[x]/(x^(m+1)).  The ideal is generated by the degree-1
elements x_i + x_s (1 <= i <= s-1); this module computes per-degree bases of
both the substitution kernel and of the span of generator multiples, and
checks that they agree -- a linear-algebra fact the rest of the package
leans on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import nullspace, rref
from .ring import Poly, Ring, RingSpec, get_ring, poly_to_text


def _ring(spec: RingSpec) -> Ring:
    return get_ring(spec.m, spec.s, spec.bit_limit)


def generator(spec: RingSpec, i: int) -> Poly:
    """The i-th ideal generator x_i + x_s, for 1 <= i <= s-1."""
    if not 1 <= i <= spec.s - 1:
        raise ValueError(f"generator index {i} outside [1, {spec.s - 1}]")
    ring = _ring(spec)
    return ring.gen(i) + ring.gen(spec.s)


def is_zero_divisor(p: Poly) -> bool:
    """True iff p vanishes under the substitution x_i -> x."""
    return p.ring.diagonal_restriction(p).is_zero


@dataclass(frozen=True)
class DegreeSlice:
    """The graded piece of one total degree: its monomial ranks, increasing."""

    spec: RingSpec
    degree: int
    ranks: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.ranks)


def degree_slice(spec: RingSpec, degree: int) -> DegreeSlice:
    if not 0 <= degree <= spec.s * spec.m:
        raise ValueError(f"degree {degree} outside [0, {spec.s * spec.m}]")
    return DegreeSlice(spec, degree, _ring(spec).degree_ranks(degree))


@dataclass(frozen=True)
class SubspaceBasis:
    """Rref basis of a subspace of one graded slice, in slice coordinates.

    Bit c of a row refers to slice.ranks[c].  Rows are the unique reduced
    echelon form, so two SubspaceBasis over the same slice describe the same
    subspace iff their rows are equal.
    """

    slice: DegreeSlice
    rows: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def row_as_poly(self, row: int) -> Poly:
        ring = _ring(self.slice.spec)
        bits = 0
        for c in range(row.bit_length()):
            if (row >> c) & 1:
                bits |= 1 << self.slice.ranks[c]
        return ring.poly(bits)

    def polys(self) -> list[Poly]:
        return [self.row_as_poly(r) for r in self.rows]


def kernel_basis(spec: RingSpec, degree: int) -> SubspaceBasis:
    """Basis of the degree-d zero-divisors, as the substitution nullspace.

    Every monomial of total degree d substitutes to x^d, so the matrix of
    the substitution on the slice is a single all-ones row for d <= m and
    empty for d > m.
    """
    sl = degree_slice(spec, degree)
    if degree <= spec.m:
        matrix = [(1 << sl.dimension) - 1] if sl.dimension else []
    else:
        matrix = []
    return SubspaceBasis(sl, tuple(nullspace(matrix, sl.dimension)))


def ideal_degree_basis(spec: RingSpec, degree: int) -> SubspaceBasis:
    """Basis of the degree-d span of { (x_i + x_s) * M : M of degree d-1 }."""
    if not 1 <= degree <= spec.s * spec.m:
        raise ValueError(f"degree {degree} outside [1, {spec.s * spec.m}]")
    ring = _ring(spec)
    sl = degree_slice(spec, degree)
    position = {r: c for c, r in enumerate(sl.ranks)}
    rows = []
    for i in range(1, spec.s):
        gen = generator(spec, i)
        for mono_rank in ring.degree_ranks(degree - 1):
            prod = ring.mul(gen, ring.poly(1 << mono_rank))
            row = 0
            for r in prod.support():
                row |= 1 << position[r]
            if row:
                rows.append(row)
    return SubspaceBasis(sl, tuple(rref(rows, sl.dimension)))


@dataclass(frozen=True)
class DegreeCheck:
    """Per-degree comparison of kernel vs generator-span bases."""

    degree: int
    dim_kernel: int
    dim_ideal: int
    passed: bool
    mismatch: str | None = None

    def as_dict(self) -> dict:
        return {"degree": self.degree, "dim_kernel": self.dim_kernel,
                "dim_ideal": self.dim_ideal, "pass": self.passed}


def verify_generators_lemma(spec: RingSpec,
                            max_degree: int | None = None) -> list[DegreeCheck]:
    """Check kernel == generator span in every degree 1..max_degree.

    Both sides are canonical rref bases, so subspace equality is row
    equality.  A failing degree reports one vector present on exactly one
    side (this would disprove the generation fact, i.e. flag a bug).
    """
    top = spec.s * spec.m if max_degree is None else max_degree
    checks = []
    for d in range(1, top + 1):
        ker = kernel_basis(spec, d)
        ideal = ideal_degree_basis(spec, d)
        passed = ker.rows == ideal.rows
        mismatch = None
        if not passed:
            diff = set(ker.rows).symmetric_difference(ideal.rows)
            mismatch = poly_to_text(ker.row_as_poly(min(diff)))
        checks.append(DegreeCheck(d, ker.dimension, ideal.dimension,
                                  passed, mismatch))
    return checks


def even_summands_check(p: Poly) -> bool:
    """For homogeneous p of degree <= m: does p have an even number of terms?

    Every zero-divisor in degrees <= m must, since all its monomials
    substitute to the same x^d.  Inputs of higher degree or mixed degrees
    are rejected.
    """
    if p.is_zero:
        return True
    if not p.is_homogeneous():
        raise ValueError("element is not homogeneous")
    d = p.degree()
    if d > p.spec.m:
        raise ValueError(f"degree {d} exceeds m = {p.spec.m}")
    return p.bits.bit_count() % 2 == 0
