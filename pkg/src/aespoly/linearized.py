"""Linearized polynomials sum_i lambda_i u^(2^i) and the bases used to compute them.

Coordinates of a field element in the polynomial basis 1, z, ..., z^7 are its
bits.  Bit matrices are lists of 8 row-lists of 0/1; a basis matrix has row j
equal to the coordinates of the j-th basis element.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from . import gf256
from .permpoly import SIZE, PermPolynomial

BitMatrix = list[list[int]]

L_MULTIPLIER = 0x1F  # z^4 + z^3 + z^2 + z + 1, multiplied modulo z^8 + 1
AFFINE_CONSTANT = 0x63  # z^6 + z^5 + z + 1
NORMAL_GENERATOR = 0x21  # z^5 + 1


class BasisError(ValueError):
    pass


class NotLinear(ValueError):
    def __init__(self, a: int, b: int):
        super().__init__(f"map is not Z2-linear: f({a:#04x} + {b:#04x}) != f({a:#04x}) + f({b:#04x})")
        self.pair = (a, b)


@dataclass(frozen=True)
class LinearizedPoly:
    lambdas: tuple[int, ...]

    def __post_init__(self):
        if len(self.lambdas) != 8:
            raise ValueError("a linearized polynomial over GF(256) has 8 coefficients")

    def __call__(self, a: int) -> int:
        return eval_linearized(self, a)

    def as_perm_polynomial(self, constant: int = 0) -> PermPolynomial:
        terms = {1 << i: lam for i, lam in enumerate(self.lambdas) if lam}
        if constant:
            terms[0] = constant
        return PermPolynomial.from_terms(terms)

    def __str__(self) -> str:
        terms = [f"({gf256.to_poly(lam)})·u^{1 << i}" for i, lam in reversed(list(enumerate(self.lambdas))) if lam]
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class FieldBasis:
    elements: tuple[int, ...]

    def __post_init__(self):
        if len(self.elements) != 8:
            raise BasisError("a basis of GF(256) over Z2 has 8 elements")
        if bit_rank(coordinate_matrix(self.elements)) != 8:
            raise BasisError(f"elements {[gf256.to_hex(e) for e in self.elements]} are linearly dependent")

    def __str__(self) -> str:
        return "\n".join(gf256.to_poly(e) for e in self.elements)


def eval_linearized(p: LinearizedPoly, a: int) -> int:
    acc = 0
    s = a
    for lam in p.lambdas:
        acc ^= gf256.mul(lam, s)
        s = gf256.mul(s, s)
    return acc


# -- the map L -----------------------------------------------------------------

def _rotl8(a: int, k: int) -> int:
    return ((a << k) | (a >> (8 - k))) & 0xFF


def l_map(a: int) -> int:
    """Multiply by z^4+z^3+z^2+z+1 in Z2[z]/<z^8+1> (not modulo the field polynomial)."""
    out = 0
    for k in range(8):
        if L_MULTIPLIER >> k & 1:
            out ^= _rotl8(a, k)
    return out


def _l_inverse_table() -> tuple[int, ...]:
    t = [0] * SIZE
    for a in range(SIZE):
        t[l_map(a)] = a
    return tuple(t)


L_INV_TABLE = _l_inverse_table()


def l_inv_map(a: int) -> int:
    return L_INV_TABLE[a]


# -- Z2 matrices ----------------------------------------------------------------

def coordinates(a: int) -> list[int]:
    return [a >> k & 1 for k in range(8)]


def from_coordinates(bits: Sequence[int]) -> int:
    return sum(b << k for k, b in enumerate(bits))


def coordinate_matrix(elements: Sequence[int]) -> BitMatrix:
    return [coordinates(e) for e in elements]


def bit_matmul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    n, m = len(a), len(b[0])
    return [[sum(a[i][k] & b[k][j] for k in range(len(b))) & 1 for j in range(m)] for i in range(n)]


def bit_transpose(a: BitMatrix) -> BitMatrix:
    return [list(col) for col in zip(*a)]


def bit_identity(n: int = 8) -> BitMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def bit_rank(a: BitMatrix) -> int:
    rows = [from_coordinates(r) for r in a]
    rank = 0
    for bit in range(len(a[0]) if a else 0):
        pivot = next((r for r in rows if r >> bit & 1), None)
        if pivot is None:
            continue
        rows.remove(pivot)
        rows = [r ^ pivot if r >> bit & 1 else r for r in rows]
        rank += 1
    return rank


def bit_inverse(a: BitMatrix) -> BitMatrix:
    """Gauss-Jordan over Z2."""
    n = len(a)
    aug = [list(a[i]) + bit_identity(n)[i] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise BasisError("matrix is singular over Z2")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        for r in range(n):
            if r != col and aug[r][col]:
                aug[r] = [x ^ y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def format_bit_matrix(a: BitMatrix) -> str:
    return "\n".join("".join(str(b) for b in row) for row in a)


def map_matrix(f: Callable[[int], int]) -> BitMatrix:
    """Matrix M of a linear map in the polynomial basis: coords(f(a)) = M coords(a)."""
    cols = [coordinates(f(1 << k)) for k in range(8)]
    return bit_transpose(cols)


L_MATRIX = map_matrix(l_map)


# -- field-valued matrices (A and B) -------------------------------------------

def frobenius_matrix_rows(elements: Sequence[int]) -> list[list[int]]:
    """A with A[j][i] = alpha_j^(2^i)."""
    return [gf256.conjugates(e) for e in elements]


def frobenius_matrix_cols(elements: Sequence[int]) -> list[list[int]]:
    """B with B[i][j] = beta_j^(2^i)."""
    rows = frobenius_matrix_rows(elements)
    return [list(col) for col in zip(*rows)]


def field_matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    out = []
    for row in a:
        out_row = []
        for j in range(len(b[0])):
            acc = 0
            for k, v in enumerate(row):
                acc ^= gf256.mul(v, b[k][j])
            out_row.append(acc)
        out.append(out_row)
    return out


def field_matvec(a: list[list[int]], v: Sequence[int]) -> list[int]:
    return [row[0] for row in field_matmul(a, [[x] for x in v])]


def bit_matvec_field(m: BitMatrix, v: Sequence[int]) -> list[int]:
    """Bit matrix times a column of field elements."""
    out = []
    for row in m:
        acc = 0
        for bit, x in zip(row, v):
            if bit:
                acc ^= x
        out.append(acc)
    return out


# -- bases ----------------------------------------------------------------------

POLYNOMIAL_BASIS = FieldBasis(tuple(1 << k for k in range(8)))


def normal_basis(generator: int) -> FieldBasis:
    return FieldBasis(tuple(gf256.conjugates(generator)))


def is_normal(a: int) -> bool:
    return bit_rank(coordinate_matrix(gf256.conjugates(a))) == 8


def trace_matrix(basis: FieldBasis) -> BitMatrix:
    e = basis.elements
    return [[gf256.trace(gf256.mul(x, y)) for y in e] for x in e]


def dual_basis(basis: FieldBasis) -> FieldBasis:
    """Unique {beta_j} with Tr(alpha_i beta_j) = delta_ij."""
    t_inv = bit_inverse(trace_matrix(basis))
    dual = FieldBasis(tuple(bit_matvec_field(t_inv, basis.elements)))
    a = frobenius_matrix_rows(basis.elements)
    b = frobenius_matrix_cols(dual.elements)
    if field_matmul(a, b) != bit_identity():
        raise BasisError("dual basis check AB = I failed")
    return dual


def change_of_basis(basis: FieldBasis) -> BitMatrix:
    """S with (alpha_1..alpha_8)^t = S (1, z, ..., z^7)^t."""
    return coordinate_matrix(basis.elements)


def is_self_dual(basis: FieldBasis) -> bool:
    return dual_basis(basis).elements == basis.elements


def find_first_primitive_normal() -> int:
    for a in range(SIZE):
        if gf256.is_primitive(a) and is_normal(a):
            return a
    raise AssertionError("GF(256) has primitive normal elements")


def self_dual_normal_search(primitive: bool = True, orbit: bool = False) -> Optional[int]:
    """First normal generator (ascending byte order) whose normal basis is self-dual.

    With ``orbit=False`` the dual generator must equal the generator itself
    (the bases coincide element by element); with ``orbit=True`` it may be any
    conjugate (the bases coincide as sets).  Returns None if no element qualifies.
    """
    for a in range(1, SIZE):
        if primitive and not gf256.is_primitive(a):
            continue
        if not is_normal(a):
            continue
        beta = dual_basis(normal_basis(a)).elements[0]
        if beta == a or (orbit and beta in gf256.conjugates(a)):
            return a
    return None


def self_dual_primitive_normal_search() -> Optional[int]:
    return self_dual_normal_search(primitive=True, orbit=False)


# -- Lemma: coefficients of the linearized polynomial --------------------------

def check_linear(table: Sequence[int]) -> None:
    """Raise NotLinear naming a violating pair unless ``table`` is Z2-linear."""
    images = [table[1 << k] for k in range(8)]
    for a in range(SIZE):
        expect = 0
        for k in range(8):
            if a >> k & 1:
                expect ^= images[k]
        if table[a] != expect:
            for b in range(SIZE):
                if table[a ^ b] != table[a] ^ table[b]:
                    raise NotLinear(a, b)
            raise AssertionError("unreachable")


def linearize(table: Sequence[int], basis: FieldBasis = POLYNOMIAL_BASIS) -> LinearizedPoly:
    """Coefficients lambda = B S M^t S^-1 (alpha_1..alpha_8)^t of the map ``table``.

    M is the map's matrix in the polynomial basis, S the change of basis to
    ``basis`` and B the Frobenius matrix of its dual basis.
    """
    if len(table) != SIZE:
        raise ValueError(f"table must have {SIZE} entries")
    check_linear(table)
    m = map_matrix(lambda a: table[a])
    s = change_of_basis(basis)
    conj = bit_matmul(bit_matmul(s, bit_transpose(m)), bit_inverse(s))
    b = frobenius_matrix_cols(dual_basis(basis).elements)
    lambdas = field_matvec(b, bit_matvec_field(conj, basis.elements))
    p = LinearizedPoly(tuple(lambdas))
    for a in range(SIZE):
        if eval_linearized(p, a) != table[a]:
            raise ArithmeticError(f"linearized polynomial disagrees with the map at {a:#04x}")
    return p


def l_polynomial(basis: FieldBasis = POLYNOMIAL_BASIS) -> LinearizedPoly:
    return linearize([l_map(a) for a in range(SIZE)], basis)


def l_inv_polynomial(basis: FieldBasis = POLYNOMIAL_BASIS) -> LinearizedPoly:
    return linearize(L_INV_TABLE, basis)


def affine_rho() -> PermPolynomial:
    """rho(u) = L^-1(u + c) = L^-1(u) + L^-1(c): inverts f -> L(f) + c with c = z^6+z^5+z+1."""
    return l_inv_polynomial().as_perm_polynomial(constant=l_inv_map(AFFINE_CONSTANT))
