"""The ring R = GF(256)[x, y] / <x^4 + 1, y^4 + 1>.

An element is stored as 16 field coefficients; ``coeffs[i + 4*j]`` is the
coefficient of x^i y^j.  That index is also the byte position in a 16-byte
block, so a block, an AES state (state[row][col] = block[row + 4*col]) and a
ring element share one layout with row = i and column = j.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from . import gf256


def _idx(i: int, j: int) -> int:
    return (i & 3) + 4 * (j & 3)


@dataclass(frozen=True)
class RingElement:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != 16:
            raise ValueError(f"need 16 coefficients, got {len(self.coeffs)}")
        if any(not 0 <= c < 256 for c in self.coeffs):
            raise ValueError("coefficients must be bytes")

    @classmethod
    def zero(cls) -> RingElement:
        return cls((0,) * 16)

    @classmethod
    def one(cls) -> RingElement:
        return cls.from_terms({(0, 0): 1})

    @classmethod
    def from_terms(cls, terms: Mapping[tuple[int, int], int]) -> RingElement:
        """Build from {(i, j): coefficient}; exponents are taken mod 4."""
        c = [0] * 16
        for (i, j), v in terms.items():
            c[_idx(i, j)] ^= v
        return cls(tuple(c))

    @classmethod
    def from_x_poly(cls, coeffs: Iterable[int]) -> RingElement:
        """Element without y: coeffs[i] is the coefficient of x^i."""
        return cls.from_terms({(i, 0): v for i, v in enumerate(coeffs)})

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.coeffs[_idx(i, j)]

    def column(self, j: int) -> tuple[int, int, int, int]:
        """r_j = sum_i r_{i,j} x^i, as its 4 coefficients."""
        return self.coeffs[4 * j:4 * j + 4]

    def __add__(self, other: RingElement) -> RingElement:
        return ring_add(self, other)

    __sub__ = __add__

    def __mul__(self, other: RingElement) -> RingElement:
        return ring_mul(self, other)

    def __pow__(self, n: int) -> RingElement:
        return ring_pow(self, n)

    def __str__(self) -> str:
        return to_text(self)


def ring_add(a: RingElement, b: RingElement) -> RingElement:
    return RingElement(tuple(p ^ q for p, q in zip(a.coeffs, b.coeffs)))


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    # x^4 = y^4 = 1, so reducing modulo the ideal is masking exponents mod 4
    out = [0] * 16
    mul = gf256.mul
    a_terms = [(k & 3, k >> 2, v) for k, v in enumerate(a.coeffs) if v]
    b_terms = [(k & 3, k >> 2, v) for k, v in enumerate(b.coeffs) if v]
    for i1, j1, v1 in a_terms:
        for i2, j2, v2 in b_terms:
            out[_idx(i1 + i2, j1 + j2)] ^= mul(v1, v2)
    return RingElement(tuple(out))


def ring_pow(a: RingElement, n: int) -> RingElement:
    if n < 0:
        raise ValueError("exponent must be non-negative")
    result = RingElement.one()
    while n:
        if n & 1:
            result = ring_mul(result, a)
        a = ring_mul(a, a)
        n >>= 1
    return result


def scale(c: int, r: RingElement) -> RingElement:
    return RingElement(tuple(gf256.mul(c, v) for v in r.coeffs))


# -- MixColumn constants -------------------------------------------------------

_GAMMA = RingElement.from_x_poly([0x02, 0x01, 0x01, 0x03])      # (z+1)x^3 + x^2 + x + z
_GAMMA_INV = RingElement.from_x_poly([0x0E, 0x09, 0x0D, 0x0B])  # see gamma_inv()


def gamma() -> RingElement:
    return _GAMMA


def gamma_inv() -> RingElement:
    """(z^3+z+1)x^3 + (z^3+z^2+1)x^2 + (z^3+1)x + (z^3+z^2+z)."""
    return _GAMMA_INV


# -- ShiftRow substitutions ----------------------------------------------------

SHIFT_ROWS_PERM = tuple(_idx(i, 3 * i + j) for j in range(4) for i in range(4))
INV_SHIFT_ROWS_PERM = tuple(_idx(i, i + j) for j in range(4) for i in range(4))


def _move(r: RingElement, dest: tuple[int, ...]) -> RingElement:
    out = [0] * 16
    for src, d in enumerate(dest):
        out[d] = r.coeffs[src]
    return RingElement(tuple(out))


def shift_rows(r: RingElement) -> RingElement:
    """r(x, y) -> r(x y^3, y): the monomial x^i y^j goes to x^i y^(3i+j)."""
    return _move(r, SHIFT_ROWS_PERM)


def inv_shift_rows(r: RingElement) -> RingElement:
    """r(x, y) -> r(x y, y): the monomial x^i y^j goes to x^i y^(i+j)."""
    return _move(r, INV_SHIFT_ROWS_PERM)


def substitute(r: RingElement, sbox: Iterable[int]) -> RingElement:
    """Apply a byte permutation to every coefficient."""
    table = list(sbox)
    return RingElement(tuple(table[v] for v in r.coeffs))


# -- columns in F[x]/<x^4+1> ---------------------------------------------------

def column_mul(a: Iterable[int], b: Iterable[int]) -> tuple[int, int, int, int]:
    a, b = list(a), list(b)
    out = [0, 0, 0, 0]
    for i, u in enumerate(a):
        if u:
            for k, v in enumerate(b):
                out[(i + k) & 3] ^= gf256.mul(u, v)
    return tuple(out)


# -- blocks --------------------------------------------------------------------

def to_block(r: RingElement) -> bytes:
    return bytes(r.coeffs)


def from_block(b: bytes | Iterable[int]) -> RingElement:
    b = bytes(b)
    if len(b) != 16:
        raise ValueError(f"block must be 16 bytes, got {len(b)}")
    # bytes are already in range; skip __post_init__ validation
    r = object.__new__(RingElement)
    object.__setattr__(r, "coeffs", tuple(b))
    return r


def from_hex(text: str) -> RingElement:
    s = text.strip().lower()
    if s.startswith("0x"):
        s = s[2:]
    if len(s) != 32:
        raise ValueError(f"block must be 32 hex digits, got {len(s)}")
    return from_block(bytes.fromhex(s))


def to_hex(r: RingElement) -> str:
    return to_block(r).hex()


# -- batched helpers used by the cipher core -----------------------------------
# A batch is an (N, 16) uint8 array laid out like RingElement.coeffs.

def as_array(elements: Iterable[RingElement]) -> np.ndarray:
    return np.array([e.coeffs for e in elements], dtype=np.uint8).reshape(-1, 16)


def from_array(arr: np.ndarray) -> list[RingElement]:
    return [RingElement(tuple(int(v) for v in row)) for row in arr]


def mul_const_batch(states: np.ndarray, c: RingElement) -> np.ndarray:
    """Multiply every row of ``states`` by the fixed ring element ``c``."""
    out = np.zeros_like(states)
    grid = states.reshape(-1, 4, 4)  # [n, j, i]
    for k, v in enumerate(c.coeffs):
        if v:
            a, b = k & 3, k >> 2
            shifted = np.roll(np.roll(grid, a, axis=2), b, axis=1)
            out ^= gf256.MUL_TABLE[v][shifted].reshape(states.shape)
    return out


def permute_batch(states: np.ndarray, dest: tuple[int, ...]) -> np.ndarray:
    out = np.empty_like(states)
    out[:, list(dest)] = states
    return out


# -- text form -----------------------------------------------------------------

def to_text(r: RingElement) -> str:
    terms = []
    for i in range(4):
        for j in range(4):
            v = r[i, j]
            if v:
                terms.append(f"({gf256.to_poly(v)})·x^{i}·y^{j}")
    return " + ".join(terms) if terms else "0"


_RING_TERM = re.compile(r"^\(([^()]*)\)·x\^(\d)·y\^(\d)$")


def parse_text(text: str) -> RingElement:
    s = text.strip()
    if s == "0":
        return RingElement.zero()
    terms = {}
    for part in s.split(" + "):
        m = _RING_TERM.match(part.strip())
        if m is None:
            raise ValueError(f"bad ring term {part!r}")
        i, j = int(m.group(2)), int(m.group(3))
        if i > 3 or j > 3:
            raise ValueError(f"exponent out of range in {part!r}")
        terms[(i, j)] = terms.get((i, j), 0) ^ gf256.parse(m.group(1))
    return RingElement.from_terms(terms)
