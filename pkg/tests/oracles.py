"""Independent reference implementations used as test oracles.

Deliberately naive: polynomials are sets of exponent tuples, products are
formed pairwise with explicit truncation, and the cup-length brute force
enumerates arbitrary kernel elements.  Nothing here shares code with the
bit-packed implementation under test.
"""

from __future__ import annotations

from zclrp import RingSpec, get_ring, kernel_basis, rank


def poly_to_set(p):
    return set(p.monomials())


def set_to_poly(ring, monos):
    bits = 0
    for exps in monos:
        bits ^= 1 << rank(ring.spec, exps)
    return ring.poly(bits)


def naive_mul(m, a, b):
    """Product of two sets of exponent tuples, truncating at x_i^(m+1)."""
    out = set()
    for ea in a:
        for eb in b:
            e = tuple(x + y for x, y in zip(ea, eb))
            if all(v <= m for v in e):
                out ^= {e}
    return out


def naive_pow(m, s, a, k):
    out = {(0,) * s}
    for _ in range(k):
        out = naive_mul(m, out, a)
    return out


def naive_diagonal(m, a):
    """Substitute x_i -> x; returns the set of surviving degrees mod 2."""
    out = set()
    for e in a:
        d = sum(e)
        if d <= m:
            out ^= {d}
    return out


def random_poly_set(rng, m, s, max_terms=6):
    monos = set()
    for _ in range(rng.randint(0, max_terms)):
        monos.add(tuple(rng.randint(0, m) for _ in range(s)))
    return monos


def all_kernel_elements(m, s):
    """Every nonzero homogeneous zero-divisor, from the kernel spans."""
    spec = RingSpec(m, s)
    elements = []
    for d in range(1, s * m + 1):
        basis = kernel_basis(spec, d)
        rows = basis.rows
        for mask in range(1, 1 << len(rows)):
            row = 0
            for t in range(len(rows)):
                if (mask >> t) & 1:
                    row ^= rows[t]
            elements.append(basis.row_as_poly(row))
    return elements


def brute_force_zcl(m, s):
    """Largest multiset of nonzero homogeneous zero-divisors with nonzero
    product, by depth-first enumeration with live products."""
    ring = get_ring(m, s)
    elements = all_kernel_elements(m, s)
    best = 0

    def extend(product, start, depth):
        nonlocal best
        if depth > best:
            best = depth
        for idx in range(start, len(elements)):
            q = ring.mul(product, elements[idx])
            if q.bits:
                extend(q, idx, depth + 1)

    extend(ring.one, 0, 0)
    return best
