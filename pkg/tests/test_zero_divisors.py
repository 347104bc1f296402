import pytest

from zclrp import (RingSpec, degree_slice, even_summands_check, generator,
                   get_ring, ideal_degree_basis, is_zero_divisor,
                   kernel_basis, verify_generators_lemma)


def test_generator_examples():
    spec = RingSpec(1, 2)
    ring = get_ring(1, 2)
    assert generator(spec, 1) == ring.gen(1) + ring.gen(2)

    spec23 = RingSpec(2, 3)
    ring23 = get_ring(2, 3)
    assert generator(spec23, 2) == ring23.gen(2) + ring23.gen(3)
    for i in range(1, spec23.s):
        assert ring23.diagonal_restriction(generator(spec23, i)).is_zero

    with pytest.raises(ValueError):
        generator(spec23, 3)
    with pytest.raises(ValueError):
        generator(spec23, 0)


def test_is_zero_divisor():
    ring = get_ring(2, 3)
    assert is_zero_divisor(ring.gen(1) + ring.gen(3))
    assert not is_zero_divisor(ring.gen(1))
    # any monomial of total degree > m
    assert is_zero_divisor(ring.monomial((2, 1, 0)))
    assert is_zero_divisor(ring.monomial((2, 2, 2)))


def test_degree_slice():
    spec = RingSpec(2, 2)
    sl = degree_slice(spec, 2)
    assert sl.ranks == (2, 4, 6)  # x1^2, x1*x2, x2^2
    assert degree_slice(spec, 0).ranks == (0,)
    assert sum(degree_slice(spec, d).dimension for d in range(5)) == spec.size
    with pytest.raises(ValueError):
        degree_slice(spec, 5)


def test_kernel_basis_small():
    spec = RingSpec(1, 2)
    ring = get_ring(1, 2)
    ker1 = kernel_basis(spec, 1)
    assert ker1.dimension == 1
    assert ker1.polys() == [ring.gen(1) + ring.gen(2)]

    assert kernel_basis(spec, 0).dimension == 0

    ker2 = kernel_basis(spec, 2)
    assert ker2.dimension == 1
    assert ker2.polys() == [ring.monomial((1, 1))]


def test_kernel_dimension_formula():
    # image of the substitution has dimension 1 for d <= m and 0 above
    for m, s in [(1, 2), (2, 2), (2, 3), (3, 2)]:
        spec = RingSpec(m, s)
        for d in range(0, s * m + 1):
            ker = kernel_basis(spec, d)
            expected = degree_slice(spec, d).dimension - (1 if d <= m else 0)
            assert ker.dimension == expected, (m, s, d)


def test_kernel_rows_are_zero_divisors():
    for m, s in [(2, 2), (2, 3), (3, 2)]:
        spec = RingSpec(m, s)
        for d in range(1, s * m + 1):
            for p in kernel_basis(spec, d).polys():
                assert is_zero_divisor(p)


def test_ideal_basis_small():
    spec = RingSpec(1, 2)
    ring = get_ring(1, 2)
    ib2 = ideal_degree_basis(spec, 2)
    assert ib2.polys() == [ring.monomial((1, 1))]

    # degree 1: the s-1 generators, linearly independent
    for m, s in [(1, 2), (2, 3), (1, 4)]:
        assert ideal_degree_basis(RingSpec(m, s), 1).dimension == s - 1

    spec22 = RingSpec(2, 2)
    ib4 = ideal_degree_basis(spec22, 4)
    assert ib4.dimension == degree_slice(spec22, 4).dimension == 1
    assert ib4.polys() == [get_ring(2, 2).monomial((2, 2))]

    with pytest.raises(ValueError):
        ideal_degree_basis(spec, 0)


def test_ideal_contained_in_kernel_with_equal_dims():
    for m, s in [(1, 2), (2, 2), (2, 3), (3, 2), (1, 4)]:
        spec = RingSpec(m, s)
        for d in range(1, s * m + 1):
            ker = kernel_basis(spec, d)
            ideal = ideal_degree_basis(spec, d)
            assert ideal.rows == ker.rows, (m, s, d)
            for p in ideal.polys():
                assert is_zero_divisor(p)


def test_verify_generators_lemma_passes():
    for m, s in [(1, 2), (2, 3)]:
        checks = verify_generators_lemma(RingSpec(m, s))
        assert len(checks) == s * m
        assert all(c.passed and c.mismatch is None for c in checks)
        assert [c.degree for c in checks] == list(range(1, s * m + 1))
        d = checks[0].as_dict()
        assert set(d) == {"degree", "dim_kernel", "dim_ideal", "pass"}


def test_verify_generators_lemma_max_degree():
    checks = verify_generators_lemma(RingSpec(2, 3), max_degree=3)
    assert [c.degree for c in checks] == [1, 2, 3]


def test_even_summands_check():
    ring = get_ring(2, 3)
    assert even_summands_check(ring.gen(1) + ring.gen(2))
    assert not even_summands_check(ring.gen(1))
    assert even_summands_check(ring.zero)
    with pytest.raises(ValueError):
        even_summands_check(ring.one + ring.gen(1))       # not homogeneous
    with pytest.raises(ValueError):
        even_summands_check(ring.monomial((2, 1, 0)))     # degree > m


def test_low_degree_kernel_has_even_summands():
    for m, s in [(2, 2), (2, 3), (3, 2), (3, 3)]:
        spec = RingSpec(m, s)
        for d in range(1, m + 1):
            for p in kernel_basis(spec, d).polys():
                assert even_summands_check(p)
