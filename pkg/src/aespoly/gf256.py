"""Arithmetic in GF(256) = Z2[z]/<z^8+z^4+z^3+z+1>.

Field elements are plain ints 0..255; bit i is the coefficient of z^i.
"""
from __future__ import annotations

import re

import numpy as np

MODULUS = 0x11B  # z^8 + z^4 + z^3 + z + 1
ORDER = 256
GENERATOR = 0x03  # z + 1, primitive; used only to build the log tables


def mul_slow(a: int, b: int) -> int:
    """Shift-and-reduce product, independent of the lookup tables."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        if a & 0x100:
            a ^= MODULUS
        b >>= 1
    return out


def _build_tables():
    exp = [0] * 510
    log = [0] * 256
    v = 1
    for e in range(255):
        exp[e] = v
        log[v] = e
        v = mul_slow(v, GENERATOR)
    for e in range(255, 510):
        exp[e] = exp[e - 255]
    return exp, log


EXP, LOG = _build_tables()


def add(a: int, b: int) -> int:
    return a ^ b


def mul(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return EXP[LOG[a] + LOG[b]]


def inv(a: int) -> int:
    if a == 0:
        raise ZeroDivisionError("0 has no multiplicative inverse in GF(256)")
    return EXP[255 - LOG[a]]


def power(a: int, n: int) -> int:
    """a**n by square-and-multiply; power(0, 0) == 1."""
    if n < 0:
        raise ValueError("exponent must be non-negative")
    result = 1
    while n:
        if n & 1:
            result = mul(result, a)
        a = mul(a, a)
        n >>= 1
    return result


def trace(a: int) -> int:
    """Absolute trace a + a^2 + a^4 + ... + a^128, which lies in {0, 1}."""
    t = 0
    s = a
    for _ in range(8):
        t ^= s
        s = mul(s, s)
    if t not in (0, 1):
        raise ArithmeticError(f"trace of {a:#04x} left the prime field")
    return t


def order(a: int) -> int:
    if a == 0:
        raise ValueError("0 has no multiplicative order")
    for d in (1, 3, 5, 15, 17, 51, 85, 255):
        if power(a, d) == 1:
            return d
    raise AssertionError("unreachable")


def is_primitive(a: int) -> bool:
    if a == 0:
        return False
    return all(power(a, 255 // p) != 1 for p in (3, 5, 17))


def conjugates(a: int) -> list[int]:
    """[a, a^2, a^4, ..., a^(2^7)]"""
    out = []
    for _ in range(8):
        out.append(a)
        a = mul(a, a)
    return out


# Full product table, for vectorised lookups in the cipher core.
MUL_TABLE = np.zeros((256, 256), dtype=np.uint8)
for _a in range(1, 256):
    MUL_TABLE[_a, 1:] = [EXP[LOG[_a] + LOG[_b]] for _b in range(1, 256)]
del _a


# -- text forms ---------------------------------------------------------------

def to_hex(a: int) -> str:
    return f"0x{a:02X}"


def to_poly(a: int, var: str = "z") -> str:
    """Polynomial form in descending powers, e.g. 0x63 -> 'z^6+z^5+z+1'."""
    if a == 0:
        return "0"
    terms = []
    for i in range(7, -1, -1):
        if a >> i & 1:
            terms.append("1" if i == 0 else var if i == 1 else f"{var}^{i}")
    return "+".join(terms)


_TERM = re.compile(r"^(?:1|z(?:\^(\d+))?)$")


def parse(text: str) -> int:
    """Parse either hex ('0x63', '63') or polynomial ('z^6+z^5+z+1') form."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty field element")
    if s.lower().startswith("0x"):
        value = int(s, 16)
    elif "z" in s or s in ("0", "1"):
        if s == "0":
            return 0
        value = 0
        for term in s.split("+"):
            m = _TERM.match(term)
            if m is None:
                raise ValueError(f"bad field term {term!r} in {text!r}")
            if term == "1":
                e = 0
            else:
                e = int(m.group(1)) if m.group(1) else 1
            if e > 7:
                raise ValueError(f"degree {e} exceeds 7 in {text!r}")
            value ^= 1 << e
    else:
        value = int(s, 16)
    if not 0 <= value < 256:
        raise ValueError(f"{text!r} is not a byte")
    return value
