"""Polynomials over GF(256) modulo u^256 + u.

Every map GF(256) -> GF(256) has exactly one such polynomial of degree at
most 255; these are stored densely as 256 coefficients (index d is the
coefficient of u^d).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import gf256

SIZE = 256


class NotAPermutation(ValueError):
    """Raised when an evaluation map is not bijective."""

    def __init__(self, a: int, b: int, image: int):
        super().__init__(
            f"elements {gf256.to_hex(a)} and {gf256.to_hex(b)} both map to {gf256.to_hex(image)}"
        )
        self.pair = (a, b)


@dataclass(frozen=True)
class PermPolynomial:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != SIZE:
            raise ValueError(f"need {SIZE} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> PermPolynomial:
        c = [0] * SIZE
        for d, v in terms.items():
            if not 0 <= d < SIZE:
                raise ValueError(f"degree {d} out of range")
            c[d] ^= v
        return cls(tuple(c))

    @classmethod
    def monomial(cls, d: int, c: int = 1) -> PermPolynomial:
        return cls.from_terms({d: c})

    def terms(self) -> dict[int, int]:
        return {d: v for d, v in enumerate(self.coeffs) if v}

    def degree(self) -> int:
        nz = [d for d, v in enumerate(self.coeffs) if v]
        return nz[-1] if nz else -1

    def __call__(self, a: int) -> int:
        return evaluate(self, a)

    def __str__(self) -> str:
        return to_text(self)


PermutationTable = tuple  # 256 images; entry e is the image of byte e

IDENTITY = PermPolynomial.monomial(1)


def evaluate(p: PermPolynomial, a: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = gf256.mul(acc, a) ^ c
    return acc


_EXP = np.array(gf256.EXP[:255], dtype=np.uint8)
_LOG = np.array(gf256.LOG, dtype=np.int64)
_DEGREES = np.arange(SIZE, dtype=np.int64)


def evaluate_all(p: PermPolynomial) -> tuple[int, ...]:
    """Evaluation map as a 256-entry tuple, no bijectivity check.

    Vectorised through discrete logs: c_d a^d = g^(log c_d + d log a).
    """
    c = np.array(p.coeffs, dtype=np.int64)
    nz = c != 0
    logs = (_LOG[c[nz]][:, None] + _DEGREES[nz][:, None] * _LOG[1:][None, :]) % 255
    values = np.bitwise_xor.reduce(_EXP[logs], axis=0) if nz.any() else np.zeros(255, dtype=np.uint8)
    return (p.coeffs[0],) + tuple(int(v) for v in values)


def lagrange_interpolant(alpha: int) -> PermPolynomial:
    """The polynomial that is 1 at ``alpha`` and 0 elsewhere."""
    if alpha == 0:
        return PermPolynomial.from_terms({255: 1, 0: 1})
    # u * sum_{i=0}^{254} alpha^i u^(254-i)
    c = [0] * SIZE
    a_i = 1
    for i in range(255):
        c[255 - i] = a_i
        a_i = gf256.mul(a_i, alpha)
    return PermPolynomial(tuple(c))


def interpolate(table: Sequence[int]) -> PermPolynomial:
    """Unique degree <= 255 polynomial through ``table`` (any map, not just permutations).

    Sums f(alpha) * T_alpha(u) using the closed form of T_alpha: for alpha != 0
    the coefficient of u^d (1 <= d <= 255) is alpha^(255-d).
    """
    if len(table) != SIZE:
        raise ValueError(f"table must have {SIZE} entries")
    exp, log = gf256.EXP, gf256.LOG
    c = [0] * SIZE
    f0 = table[0]
    c[0] ^= f0
    c[255] ^= f0
    for alpha in range(1, SIZE):
        fa = table[alpha]
        if not fa:
            continue
        la, lf = log[alpha], log[fa]
        for d in range(1, SIZE):
            # f(alpha) * alpha^(255-d)
            c[d] ^= exp[lf + (la * (255 - d)) % 255]
    return PermPolynomial(tuple(c))


def tabulate(p: PermPolynomial) -> PermutationTable:
    images = evaluate_all(p)
    seen: dict[int, int] = {}
    for a, v in enumerate(images):
        if v in seen:
            raise NotAPermutation(seen[v], a, v)
        seen[v] = a
    return images


def invert_table(table: Sequence[int]) -> PermutationTable:
    out = [-1] * SIZE
    for a, v in enumerate(table):
        if out[v] != -1:
            raise NotAPermutation(out[v], a, v)
        out[v] = a
    return tuple(out)


def compose(p: PermPolynomial, q: PermPolynomial) -> PermPolynomial:
    """p(q(u)) mod u^256 + u, via interpolation of the pointwise composition."""
    pt, qt = evaluate_all(p), evaluate_all(q)
    return interpolate([pt[qt[a]] for a in range(SIZE)])


def mul_mod(p: PermPolynomial, q: PermPolynomial) -> PermPolynomial:
    """Symbolic product p*q reduced with u^256 = u."""
    qa = np.array(q.coeffs, dtype=np.uint8)
    prod = np.zeros(2 * SIZE - 1, dtype=np.uint8)
    for d, v in enumerate(p.coeffs):
        if v:
            prod[d:d + SIZE] ^= gf256.MUL_TABLE[v][qa]
    # u^k = u^(k-255) for k >= 256
    low = prod[:SIZE].copy()
    low[1:SIZE] ^= prod[SIZE:]
    return PermPolynomial(tuple(int(v) for v in low))


def pow_mod(p: PermPolynomial, n: int) -> PermPolynomial:
    """p(u)^n mod u^256 + u by symbolic square-and-multiply."""
    if n < 0:
        raise ValueError("exponent must be non-negative")
    result = PermPolynomial.monomial(0)
    base = p
    while n:
        if n & 1:
            result = mul_mod(result, base)
        base = mul_mod(base, base)
        n >>= 1
    return result


def pow_pointwise(p: PermPolynomial, n: int) -> PermPolynomial:
    """Same value as pow_mod, computed by powering the evaluation map."""
    return interpolate([gf256.power(v, n) for v in evaluate_all(p)])


def sparsity(p: PermPolynomial) -> int:
    return sum(1 for v in p.coeffs if v)


# -- text forms ----------------------------------------------------------------

def to_text(p: PermPolynomial) -> str:
    terms = [f"({gf256.to_poly(v)})·u^{d}" for d, v in reversed(list(enumerate(p.coeffs))) if v]
    return " + ".join(terms) if terms else "0"


_POLY_TERM = re.compile(r"^\(([^()]*)\)·u\^(\d+)$")


def parse_text(text: str) -> PermPolynomial:
    s = text.strip()
    if s == "0":
        return PermPolynomial((0,) * SIZE)
    terms: dict[int, int] = {}
    for part in s.split(" + "):
        m = _POLY_TERM.match(part.strip())
        if m is None:
            raise ValueError(f"bad polynomial term {part!r}")
        d = int(m.group(2))
        terms[d] = terms.get(d, 0) ^ gf256.parse(m.group(1))
    return PermPolynomial.from_terms(terms)


def to_machine(p: PermPolynomial) -> str:
    """512 hex digits, coefficient of u^0 first."""
    return bytes(p.coeffs).hex()


def from_machine(text: str) -> PermPolynomial:
    raw = bytes.fromhex(text.strip())
    if len(raw) != SIZE:
        raise ValueError(f"expected {SIZE} coefficient bytes, got {len(raw)}")
    return PermPolynomial(tuple(raw))


def from_table_function(f) -> PermutationTable:
    return tuple(f(a) for a in range(SIZE))


def identity_table() -> PermutationTable:
    return tuple(range(SIZE))


def compose_tables(outer: Sequence[int], inner: Sequence[int]) -> PermutationTable:
    return tuple(outer[inner[a]] for a in range(SIZE))


def phi_polynomial() -> PermPolynomial:
    """Interpolant of the S-box permutation."""
    from .aes_core import sbox_table

    return interpolate(sbox_table())


def psi_polynomial() -> PermPolynomial:
    """Interpolant of the inverse S-box permutation."""
    from .aes_core import inv_sbox_table

    return interpolate(inv_sbox_table())
