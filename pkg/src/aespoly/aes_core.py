"""AES written as the round recurrences in R = GF(256)[x, y]/<x^4+1, y^4+1>.

Encryption:  m0 = m + k0,  m(t+1) = gamma * SR(phi(m(t))) + k(t+1),  last round without gamma.
Decryption:  c0 = c + kN,  c(t+1) = gamma^-1 * ISR(psi(c(t))) + gamma^-1 k(N-1-t),  last round
             ISR(psi(.)) + k0.

SR is the substitution x -> x y^3 and ISR its inverse x -> x y.  The cipher runs
on (N, 16) uint8 batches; the single-element functions are thin wrappers.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import gf256, ring
from .linearized import AFFINE_CONSTANT, l_map
from .permpoly import invert_table
from .ring import RingElement


@dataclass(frozen=True)
class CipherVariant:
    name: str
    rounds: int
    key_bits: int

    @property
    def key_bytes(self) -> int:
        return self.key_bits // 8

    @property
    def key_words(self) -> int:
        return self.key_bits // 32


AES128 = CipherVariant("AES-128", 10, 128)
AES192 = CipherVariant("AES-192", 12, 192)
AES256 = CipherVariant("AES-256", 14, 256)
VARIANTS = {"aes128": AES128, "aes192": AES192, "aes256": AES256}


def variant_for_key(key: bytes) -> CipherVariant:
    for v in VARIANTS.values():
        if v.key_bytes == len(key):
            return v
    raise ValueError(f"key must be 16, 24 or 32 bytes, got {len(key)}")


@dataclass(frozen=True)
class RoundKeySchedule:
    variant: CipherVariant
    keys: tuple[RingElement, ...]

    def __post_init__(self):
        if len(self.keys) != self.variant.rounds + 1:
            raise ValueError(
                f"{self.variant.name} needs {self.variant.rounds + 1} round keys, got {len(self.keys)}"
            )

    def __len__(self) -> int:
        return len(self.keys)

    def __getitem__(self, t: int) -> RingElement:
        return self.keys[t]


# -- the S-box phi = phi3 . L . phi1 --------------------------------------------

def phi1(a: int) -> int:
    return 0 if a == 0 else gf256.inv(a)


def phi3(a: int) -> int:
    return a ^ AFFINE_CONSTANT


@lru_cache(maxsize=None)
def sbox_table() -> tuple[int, ...]:
    return tuple(phi3(l_map(phi1(a))) for a in range(256))


@lru_cache(maxsize=None)
def inv_sbox_table() -> tuple[int, ...]:
    return invert_table(sbox_table())


_SBOX = np.array(sbox_table(), dtype=np.uint8)
_INV_SBOX = np.array(inv_sbox_table(), dtype=np.uint8)


def round_constant(t: int) -> int:
    """z^t, the constant added in the (t+1)-th key expansion step."""
    return gf256.power(0x02, t)


_RCON = tuple(round_constant(t) for t in range(10))


# -- key expansion ----------------------------------------------------------------

def expand_key_128(k: RingElement) -> RoundKeySchedule:
    """k(t+1)_0 = (sum_i phi(k(t)_{i,3}) x^i) x^3 + z^t + k(t)_0;  k(t+1)_j = k(t+1)_{j-1} + k(t)_j."""
    sbox = sbox_table()
    x3 = (0, 0, 0, 1)
    keys = [k]
    for t in range(10):
        prev = keys[-1]
        subbed = [sbox[v] for v in prev.column(3)]
        col = list(ring.column_mul(subbed, x3))
        col[0] ^= round_constant(t)
        cols = [[c ^ p for c, p in zip(col, prev.column(0))]]
        for j in range(1, 4):
            cols.append([c ^ p for c, p in zip(cols[-1], prev.column(j))])
        keys.append(RingElement(tuple(v for c in cols for v in c)))
    return RoundKeySchedule(AES128, tuple(keys))


def _expand_words(key: bytes, variant: CipherVariant) -> list[list[int]]:
    """Word-wise key expansion for any key size (4-byte words)."""
    sbox = sbox_table()
    nk = variant.key_words
    total = 4 * (variant.rounds + 1)
    words = [list(key[4 * i:4 * i + 4]) for i in range(nk)]
    for i in range(nk, total):
        temp = list(words[i - 1])
        if i % nk == 0:
            temp = temp[1:] + temp[:1]
            temp = [sbox[b] for b in temp]
            temp[0] ^= _RCON[i // nk - 1]
        elif nk > 6 and i % nk == 4:
            temp = [sbox[b] for b in temp]
        words.append([a ^ b for a, b in zip(words[i - nk], temp)])
    return words


def expand_key(key: bytes | Sequence[int], variant: CipherVariant | None = None) -> RoundKeySchedule:
    """Expand a 16/24/32-byte key and lift each 16-byte window into R."""
    key = bytes(key)
    if variant is None:
        variant = variant_for_key(key)
    if len(key) != variant.key_bytes:
        raise ValueError(f"{variant.name} needs a {variant.key_bytes}-byte key, got {len(key)}")
    words = _expand_words(key, variant)
    flat = bytes(b for w in words for b in w)
    keys = [ring.from_block(flat[16 * t:16 * t + 16]) for t in range(variant.rounds + 1)]
    return RoundKeySchedule(variant, tuple(keys))


@lru_cache(maxsize=64)
def decryption_keys(ks: RoundKeySchedule) -> tuple[RingElement, ...]:
    """kN, gamma^-1 k(N-1), ..., gamma^-1 k1, k0."""
    g_inv = ring.gamma_inv()
    n = len(ks) - 1
    middle = tuple(ring.ring_mul(g_inv, ks[t]) for t in range(n - 1, 0, -1))
    return (ks[n],) + middle + (ks[0],)


# -- the cipher ---------------------------------------------------------------------
# Round keys travel as arrays of shape (K, rounds + 1, 16) with K = 1 (shared
# schedule) or K = N (one schedule per block).

def _check_batch(states: np.ndarray) -> np.ndarray:
    states = np.asarray(states, dtype=np.uint8)
    if states.ndim != 2 or states.shape[1] != 16:
        raise ValueError(f"expected an (N, 16) array of blocks, got shape {states.shape}")
    return states


def schedule_array(ks: RoundKeySchedule) -> np.ndarray:
    if len(ks.keys) != ks.variant.rounds + 1:
        raise ValueError("round key schedule does not match its variant")
    return ring.as_array(ks.keys)


def _stack(schedules: Sequence[RoundKeySchedule]) -> tuple[np.ndarray, int]:
    rounds = {ks.variant.rounds for ks in schedules}
    if len(rounds) != 1:
        raise ValueError("all schedules in a batch must belong to one variant")
    return np.stack([schedule_array(ks) for ks in schedules]), rounds.pop()


def _encrypt_rows(m: np.ndarray, rk: np.ndarray, rounds: int, final_gamma: bool) -> np.ndarray:
    if rk.shape[1] != rounds + 1:
        raise ValueError(f"{rounds} rounds need {rounds + 1} round keys, got {rk.shape[1]}")
    g = ring.gamma()
    m = m ^ rk[:, 0]
    for t in range(rounds):
        m = ring.permute_batch(_SBOX[m], ring.SHIFT_ROWS_PERM)
        if t < rounds - 1 or final_gamma:
            m = ring.mul_const_batch(m, g)
        m ^= rk[:, t + 1]
    return m


def _decryption_rows(rk: np.ndarray) -> np.ndarray:
    """kN, gamma^-1 k(N-1), ..., gamma^-1 k1, k0 for every stacked schedule."""
    n = rk.shape[1] - 1
    dk = rk[:, ::-1].copy()
    middle = dk[:, 1:n].reshape(-1, 16)
    dk[:, 1:n] = ring.mul_const_batch(middle, ring.gamma_inv()).reshape(dk.shape[0], n - 1, 16)
    return dk


def _decrypt_rows(c: np.ndarray, dk: np.ndarray, rounds: int) -> np.ndarray:
    if dk.shape[1] != rounds + 1:
        raise ValueError(f"{rounds} rounds need {rounds + 1} round keys, got {dk.shape[1]}")
    g_inv = ring.gamma_inv()
    c = c ^ dk[:, 0]
    for t in range(rounds):
        c = ring.permute_batch(_INV_SBOX[c], ring.INV_SHIFT_ROWS_PERM)
        if t < rounds - 1:
            c = ring.mul_const_batch(c, g_inv)
        c ^= dk[:, t + 1]
    return c


def encrypt_batch(states: np.ndarray, ks: RoundKeySchedule, final_gamma: bool = False) -> np.ndarray:
    """Encrypt every row of an (N, 16) array under one schedule.

    ``final_gamma`` multiplies by gamma in the last round too; it exists only to
    show that doing so breaks agreement with the standard.
    """
    rk = schedule_array(ks)[None]
    return _encrypt_rows(_check_batch(states), rk, ks.variant.rounds, final_gamma)


def decrypt_batch(states: np.ndarray, ks: RoundKeySchedule) -> np.ndarray:
    dk = ring.as_array(decryption_keys(ks))[None]
    return _decrypt_rows(_check_batch(states), dk, ks.variant.rounds)


def encrypt_many(states: np.ndarray, schedules: Sequence[RoundKeySchedule]) -> np.ndarray:
    """Row n of ``states`` encrypted under ``schedules[n]``."""
    states = _check_batch(states)
    if len(schedules) != len(states):
        raise ValueError("need one schedule per block")
    rk, rounds = _stack(schedules)
    return _encrypt_rows(states, rk, rounds, False)


def decrypt_many(states: np.ndarray, schedules: Sequence[RoundKeySchedule]) -> np.ndarray:
    states = _check_batch(states)
    if len(schedules) != len(states):
        raise ValueError("need one schedule per block")
    rk, rounds = _stack(schedules)
    return _decrypt_rows(states, _decryption_rows(rk), rounds)


def encrypt(m: RingElement, ks: RoundKeySchedule) -> RingElement:
    return ring.from_array(encrypt_batch(ring.as_array([m]), ks))[0]


def decrypt(c: RingElement, ks: RoundKeySchedule) -> RingElement:
    return ring.from_array(decrypt_batch(ring.as_array([c]), ks))[0]


def encrypt_round_by_round(m: RingElement, ks: RoundKeySchedule) -> RingElement:
    """The same recurrence on single ring elements, using only ring operations."""
    sbox = sbox_table()
    g = ring.gamma()
    m = m + ks[0]
    rounds = ks.variant.rounds
    for t in range(rounds):
        m = ring.shift_rows(ring.substitute(m, sbox))
        if t < rounds - 1:
            m = g * m
        m = m + ks[t + 1]
    return m


def encrypt_bytes(block: bytes, key: bytes) -> bytes:
    return ring.to_block(encrypt(ring.from_block(block), expand_key(key)))


def decrypt_bytes(block: bytes, key: bytes) -> bytes:
    return ring.to_block(decrypt(ring.from_block(block), expand_key(key)))
