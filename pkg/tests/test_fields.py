import itertools

import pytest
from hypothesis import given, strategies as st

from drinfeld_weil import embed, make_field
from drinfeld_weil.fields import RelativeBasis, min_poly_over
from drinfeld_weil import linalg


def test_prime_field_elements():
    F3 = make_field(3, 1)
    assert sorted(int(x.coeffs[0]) for x in F3.elements()) == [0, 1, 2]


def test_f4_default_modulus_is_unique_quadratic():
    F4 = make_field(2, 2)
    assert F4.modulus == (1, 1, 1)  # y^2 + y + 1


def test_f9_default_modulus():
    # y^2 + 1 has no root in F_3: 0^2+1=1, 1^2+1=2, 2^2+1=2
    F9 = make_field(3, 2)
    assert F9.modulus == (1, 0, 1)
    for c in range(3):
        assert (c * c + 1) % 3 != 0


def test_explicit_modulus_accepted():
    F4 = make_field(2, 2, [1, 1, 1])
    w = F4.gen()
    assert w * w == w + 1


def test_default_modulus_is_lex_smallest():
    # degree-3 candidates over F_2 in lex order on (a_0, a_1, a_2): those
    # with a_0 = 0 have root 0, (1,0,0) has root 1, (1,0,1) is the first
    # with no root, i.e. y^3 + y^2 + 1
    assert make_field(2, 3).modulus == (1, 0, 1, 1)


def test_irreducibility_matches_trial_division():
    # cross-check the deterministic test against brute-force factor search
    from drinfeld_weil.fields import _is_irreducible
    for p in (2, 3):
        monic = {1: [[a, 1] for a in range(p)]}
        for d in (2, 3, 4):
            monic[d] = [list(lows) + [1]
                        for lows in itertools.product(range(p), repeat=d)]
        def divides(small, big):
            big = list(big)
            while len(big) >= len(small):
                c = big[-1]
                shift = len(big) - len(small)
                for j, s in enumerate(small):
                    big[shift + j] = (big[shift + j] - c * s) % p
                while big and big[-1] == 0:
                    big.pop()
                if not big:
                    return True
            return False
        for d in (2, 3, 4):
            for cand in monic[d]:
                has_factor = any(divides(g, cand)
                                 for dd in range(1, d // 2 + 1)
                                 for g in monic[dd])
                assert _is_irreducible(cand, p) == (not has_factor), (p, cand)


def test_non_prime_p_rejected():
    with pytest.raises(ValueError):
        make_field(4)


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        make_field(3, 2, [0, 0, 1])  # y^2 = y*y
    with pytest.raises(ValueError):
        make_field(2, 2, [1, 0, 1])  # y^2 + 1 = (y+1)^2


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2), (2, 4)])
def test_field_axioms_exhaustive(p, e):
    F = make_field(p, e)
    xs = list(F.elements())
    assert len(xs) == p ** e
    for a, b in itertools.product(xs, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
    for a, b, c in itertools.islice(itertools.product(xs, repeat=3), 4096):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
    one = F.one()
    for a in xs:
        if not a.is_zero():
            assert a * a.inverse() == one
        assert (a + (-a)).is_zero()


@given(st.integers(0, 8), st.integers(0, 8))
def test_f9_matches_structure_constants(i, j):
    F9 = make_field(3, 2)
    a = F9.elem([i % 3, i // 3])
    b = F9.elem([j % 3, j // 3])
    # multiply residue polynomials mod y^2 + 1 by hand
    a0, a1 = a.coeffs
    b0, b1 = b.coeffs
    c0 = (a0 * b0 - a1 * b1) % 3
    c1 = (a0 * b1 + a1 * b0) % 3
    assert a * b == F9.elem([c0, c1])


def test_embedding_is_ring_hom():
    F4 = make_field(2, 2)
    F16 = make_field(2, 4)
    emb = embed(F4, F16)
    img = emb(F4.gen())
    assert (img * img + img + F16.one()).is_zero()
    for a in F4.elements():
        for b in F4.elements():
            assert emb(a * b) == emb(a) * emb(b)
            assert emb(a + b) == emb(a) + emb(b)


def test_relative_basis_roundtrip_and_minpoly():
    F4 = make_field(2, 2)
    F16 = make_field(2, 4)
    rel = RelativeBasis(F16, F4, embed(F4, F16))
    for k in (0, 1, 5, 7, 11):
        el = F16.gen() ** k
        assert rel.lift(rel.coords(el)) == el
    mp = min_poly_over(F16.gen(), rel)
    assert len(mp) - 1 == 2  # the generator is quadratic over F_4


def test_nullspace_and_rank():
    F3 = make_field(3)
    e = F3.elem
    mat = [[e(1), e(2), e(0)], [e(0), e(1), e(1)]]
    ns = linalg.nullspace(mat, F3)
    assert len(ns) == 1
    for row in mat:
        acc = F3.zero()
        for a, b in zip(row, ns[0]):
            acc = acc + a * b
        assert acc.is_zero()
    assert linalg.rank(mat, F3) == 2
    inv = linalg.inverse([[e(1), e(1)], [e(1), e(2)]], F3)
    assert inv is not None
