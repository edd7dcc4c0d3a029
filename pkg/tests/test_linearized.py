import pytest
from hypothesis import given, strategies as st

from aespoly import gf256, linearized as lz, permpoly as pp
from aespoly.linearized import FieldBasis, LinearizedPoly

P = gf256.parse
ALPHA, BETA = P("z^5+1"), P("z^5+z^4+z^2+1")
NORMAL = lz.normal_basis(ALPHA)

LAMBDA = tuple(P(s) for s in (
    "z^2+1", "z^3+1", "z^7+z^6+z^5+z^4+z^3+1", "z^5+z^2+1",
    "z^7+z^6+z^5+z^4+z^2", "1", "z^7+z^5+z^4+z^2+1", "z^7+z^3+z^2+z+1",
))
# coefficients of u, u^2, u^4, ..., u^128
L_INV = tuple(P(s) for s in (
    "z^2+1", "z^7+z^6+z^5+z^4+z^3+z^2+z", "z^6+z^5+z^4+z^3+z^2+z+1", "z^6+z^4+z^3+z",
    "z^6+z^5+z^4+z^3", "z^6+z^4+z^3+1", "z^7+z^6+z^4+z^3+z+1", "z^6+z^5+z^3+z^2+z",
))

PRINTED_L = [
    [1, 0, 0, 0, 1, 1, 1, 1],
    [1, 1, 0, 0, 0, 1, 1, 1],
    [1, 1, 1, 0, 0, 0, 1, 1],
    [1, 1, 1, 1, 0, 0, 0, 1],
    [1, 1, 1, 1, 1, 0, 0, 0],
    [0, 1, 1, 1, 1, 1, 0, 0],
    [0, 0, 1, 1, 1, 1, 1, 0],
    [0, 0, 0, 1, 1, 1, 1, 1],
]
PRINTED_S = [
    [1, 0, 0, 0, 0, 1, 0, 0],
    [1, 0, 1, 1, 0, 1, 1, 0],
    [0, 1, 1, 0, 1, 0, 0, 1],
    [1, 0, 1, 0, 1, 0, 0, 1],
    [0, 0, 0, 0, 1, 0, 0, 1],
    [1, 0, 0, 0, 0, 0, 0, 1],
    [1, 1, 0, 1, 1, 0, 0, 1],
    [0, 0, 1, 0, 0, 0, 1, 1],
]


def polymul_mod_z8_plus_1(a, b):
    """Oracle: schoolbook product in Z2[z], then fold z^8 -> 1."""
    prod = 0
    for k in range(8):
        if b >> k & 1:
            prod ^= a << k
    return (prod & 0xFF) ^ (prod >> 8)


def test_l_map_examples():
    assert lz.l_map(0) == 0
    assert lz.l_map(1) == 0x1F
    for a in range(256):
        assert lz.l_map(a) == polymul_mod_z8_plus_1(a, 0x1F)


def test_l_map_matrix_is_printed_circulant():
    assert lz.L_MATRIX == PRINTED_L
    for a in range(256):
        col = [[b] for b in lz.coordinates(a)]
        image = [row[0] for row in lz.bit_matmul(PRINTED_L, col)]
        assert lz.from_coordinates(image) == lz.l_map(a)


def test_l_map_bijective_with_inverse():
    assert sorted(lz.l_map(a) for a in range(256)) == list(range(256))
    assert all(lz.l_inv_map(lz.l_map(a)) == a for a in range(256))


def test_eval_linearized_basics():
    ident = LinearizedPoly((1, 0, 0, 0, 0, 0, 0, 0))
    assert all(lz.eval_linearized(ident, a) == a for a in range(256))
    assert lz.eval_linearized(LinearizedPoly(LAMBDA), 0) == 0
    assert all(lz.eval_linearized(LinearizedPoly(LAMBDA), a) == lz.l_map(a) for a in range(256))


@given(st.lists(st.integers(0, 255), min_size=8, max_size=8), st.integers(0, 255), st.integers(0, 255))
def test_eval_linearized_is_additive(lams, a, b):
    p = LinearizedPoly(tuple(lams))
    assert p(a ^ b) == p(a) ^ p(b)


def test_eval_linearized_on_basis_pairs():
    p = LinearizedPoly(LAMBDA)
    for i in range(8):
        for j in range(8):
            a, b = 1 << i, NORMAL.elements[j]
            assert p(a ^ b) == p(a) ^ p(b)


def test_first_primitive_normal_is_z5_plus_1():
    assert lz.find_first_primitive_normal() == 0x21
    assert lz.is_normal(0x21)
    for a in range(0x21):
        assert not (gf256.is_primitive(a) and lz.is_normal(a))


def test_change_of_basis_matches_printed_s():
    assert lz.change_of_basis(NORMAL) == PRINTED_S


def test_dual_of_normal_basis():
    dual = lz.dual_basis(NORMAL)
    assert dual == lz.normal_basis(BETA)
    for i, a in enumerate(NORMAL.elements):
        for j, b in enumerate(dual.elements):
            assert gf256.trace(gf256.mul(a, b)) == int(i == j)
    a_mat = lz.frobenius_matrix_rows(NORMAL.elements)
    b_mat = lz.frobenius_matrix_cols(dual.elements)
    assert lz.field_matmul(a_mat, b_mat) == lz.bit_identity()


def test_dual_is_an_involution(rng):
    for basis in (NORMAL, lz.POLYNOMIAL_BASIS):
        assert lz.dual_basis(lz.dual_basis(basis)) == basis
    for _ in range(5):
        while True:
            elems = tuple(rng.randrange(1, 256) for _ in range(8))
            try:
                b = FieldBasis(elems)
                break
            except lz.BasisError:
                continue
        assert lz.dual_basis(lz.dual_basis(b)) == b


def test_dependent_basis_rejected():
    with pytest.raises(lz.BasisError):
        FieldBasis((1, 2, 3, 4, 8, 16, 32, 64))
    with pytest.raises(lz.BasisError):
        lz.normal_basis(0x01)


def test_normal_basis_of_z5_plus_1_is_not_self_dual():
    assert BETA not in gf256.conjugates(ALPHA)
    assert not lz.is_self_dual(NORMAL)


def test_no_self_dual_primitive_normal_basis():
    assert lz.self_dual_primitive_normal_search() is None
    assert lz.self_dual_normal_search(primitive=True, orbit=True) is None


def test_self_dual_search_without_primitivity():
    # exhaustive oracle: for every normal element, compare its dual generator directly
    found = []
    for a in range(1, 256):
        if lz.is_normal(a):
            nb = lz.normal_basis(a)
            if all(gf256.trace(gf256.mul(x, y)) == int(i == j)
                   for i, x in enumerate(nb.elements) for j, y in enumerate(nb.elements)):
                found.append(a)
    result = lz.self_dual_normal_search(primitive=False)
    assert result == (found[0] if found else None)
    # degree 8 is divisible by 4, so GF(256) has no self-dual normal basis at all
    assert found == []


def test_linearize_l_map_in_both_bases():
    table = [lz.l_map(a) for a in range(256)]
    assert lz.linearize(table, lz.POLYNOMIAL_BASIS).lambdas == LAMBDA
    assert lz.linearize(table, NORMAL).lambdas == LAMBDA


def test_lambda_are_sbox_coefficients():
    phi = pp.phi_polynomial()
    # L(u^254) mod u^256 + u puts lambda_i on u^(254 * 2^i mod 255)
    for i, lam in enumerate(LAMBDA):
        assert phi.coeffs[(254 << i) % 255] == lam


def test_linearize_inverse_map():
    assert lz.l_inv_polynomial().lambdas == L_INV
    assert lz.l_inv_polynomial(NORMAL).lambdas == L_INV
    l, linv = lz.l_polynomial(), lz.l_inv_polynomial()
    assert all(linv(l(a)) == a for a in range(256))


@pytest.mark.parametrize("name,f,expected", [
    ("identity", lambda a: a, (1, 0, 0, 0, 0, 0, 0, 0)),
    ("frobenius", lambda a: gf256.mul(a, a), (0, 1, 0, 0, 0, 0, 0, 0)),
    ("scale", lambda a: gf256.mul(0x57, a), (0x57, 0, 0, 0, 0, 0, 0, 0)),
])
def test_linearize_simple_maps(name, f, expected):
    table = [f(a) for a in range(256)]
    for basis in (lz.POLYNOMIAL_BASIS, NORMAL):
        p = lz.linearize(table, basis)
        assert p.lambdas == expected
        assert all(p(a) == table[a] for a in range(256))


def test_linearize_rejects_nonlinear_map():
    table = [gf256.mul(a, a) ^ 1 for a in range(256)]
    with pytest.raises(lz.NotLinear) as info:
        lz.linearize(table)
    a, b = info.value.pair
    assert table[a ^ b] != table[a] ^ table[b]
    with pytest.raises(lz.NotLinear):
        lz.linearize([gf256.inv(a) if a else 0 for a in range(256)])


def test_affine_rho():
    rho = lz.affine_rho()
    assert rho.coeffs[0] == P("z^2+1")
    assert set(rho.terms()) <= {0, 1, 2, 4, 8, 16, 32, 64, 128}
    assert rho.degree() == 128
    for a in range(256):
        assert pp.evaluate(rho, lz.l_map(a) ^ 0x63) == a


def test_bit_matrix_helpers(rng):
    for _ in range(20):
        m = [[rng.randrange(2) for _ in range(8)] for _ in range(8)]
        if lz.bit_rank(m) == 8:
            assert lz.bit_matmul(m, lz.bit_inverse(m)) == lz.bit_identity()
        else:
            with pytest.raises(lz.BasisError):
                lz.bit_inverse(m)
    assert lz.format_bit_matrix(PRINTED_L).splitlines()[0] == "10001111"
    assert str(NORMAL).splitlines()[0] == "z^5+1"
