"""Cross-checks of every derived object against its published value and the reference cipher."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from . import aes_core, gf256, linearized, permpoly, reference_aes, ring, sbox_analysis
from .ring import RingElement

P = gf256.parse

# Interpolant of the S-box, as {degree: coefficient}.
SBOX_POLY_TERMS = {
    254: P("z^2+1"),
    253: P("z^3+1"),
    251: P("z^7+z^6+z^5+z^4+z^3+1"),
    247: P("z^5+z^2+1"),
    239: P("z^7+z^6+z^5+z^4+z^2"),
    223: P("1"),
    191: P("z^7+z^5+z^4+z^2+1"),
    127: P("z^7+z^3+z^2+z+1"),
    0: P("z^6+z^5+z+1"),
}

# lambda_0..lambda_7 of the linearized polynomial of L.
L_LAMBDAS = (
    P("z^2+1"),
    P("z^3+1"),
    P("z^7+z^6+z^5+z^4+z^3+1"),
    P("z^5+z^2+1"),
    P("z^7+z^6+z^5+z^4+z^2"),
    P("1"),
    P("z^7+z^5+z^4+z^2+1"),
    P("z^7+z^3+z^2+z+1"),
)

# lambda_0..lambda_7 of the linearized polynomial of L^-1.
L_INV_LAMBDAS = (
    P("z^2+1"),
    P("z^7+z^6+z^5+z^4+z^3+z^2+z"),
    P("z^6+z^5+z^4+z^3+z^2+z+1"),
    P("z^6+z^4+z^3+z"),
    P("z^6+z^5+z^4+z^3"),
    P("z^6+z^4+z^3+1"),
    P("z^7+z^6+z^4+z^3+z+1"),
    P("z^6+z^5+z^3+z^2+z"),
)

RHO_CONSTANT = P("z^2+1")

# The change-of-basis matrix for the normal basis generated by z^5+1.
NORMAL_BASIS_S = [
    [1, 0, 0, 0, 0, 1, 0, 0],
    [1, 0, 1, 1, 0, 1, 1, 0],
    [0, 1, 1, 0, 1, 0, 0, 1],
    [1, 0, 1, 0, 1, 0, 0, 1],
    [0, 0, 0, 0, 1, 0, 0, 1],
    [1, 0, 0, 0, 0, 0, 0, 1],
    [1, 1, 0, 1, 1, 0, 0, 1],
    [0, 0, 1, 0, 0, 0, 1, 1],
]

PRIMITIVE_NORMAL = P("z^5+1")
DUAL_GENERATOR = P("z^5+z^4+z^2+1")

# discrete logs base z^5+1 of two inverse-S-box coefficients
PSI_TOP_LOG = 163  # coefficient of u^254
PSI_CONSTANT_LOG = 92

GAMMA_SQUARED = RingElement.from_terms({(2, 0): P("z^2"), (0, 0): P("z^2+1")})
GAMMA_INV_FACTORS = (
    RingElement.from_x_poly([P("z+1"), 0, 0, P("z")]),
    RingElement.from_x_poly([P("z^2"), 1, P("z^2+1"), 1]),
)

CYCLE_LENGTHS = (59, 81, 87, 27, 2)
SBOX_ORDER = 277_182
TWO_CYCLE_LOGS = (38, 54)

# (variant, key, plaintext, ciphertext)
KNOWN_ANSWERS = (
    ("aes128", "000102030405060708090a0b0c0d0e0f", "00112233445566778899aabbccddeeff",
     "69c4e0d86a7b0430d8cdb78070b4c55a"),
    ("aes192", "000102030405060708090a0b0c0d0e0f1011121314151617", "00112233445566778899aabbccddeeff",
     "dda97ca4864cdfe06eaf70a0ec0d7191"),
    ("aes256", "000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f",
     "00112233445566778899aabbccddeeff", "8ea2b7ca516745bfeafc49904b496089"),
    ("aes128", "2b7e151628aed2a6abf7158809cf4f3c", "3243f6a8885a308d313198a2e0370734",
     "3925841d02dc09fbdc118597196a0b32"),
)


@dataclass
class VerifyConfig:
    seed: int = 2002
    n_random: int = 1000
    variants: tuple[str, ...] = ("aes128", "aes192", "aes256")


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


def _check(name: str, fn: Callable[[], tuple[bool, str] | bool]) -> CheckResult:
    try:
        out = fn()
    except Exception as exc:  # a crashing check is a failed check
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")
    if isinstance(out, tuple):
        return CheckResult(name, bool(out[0]), out[1])
    return CheckResult(name, bool(out))


# -- individual checks -----------------------------------------------------------

def sbox_poly_matches() -> tuple[bool, str]:
    phi = permpoly.phi_polynomial()
    return phi.terms() == SBOX_POLY_TERMS, f"{permpoly.sparsity(phi)} terms"


def lambda_matches() -> tuple[bool, str]:
    poly = linearized.l_polynomial(linearized.POLYNOMIAL_BASIS).lambdas
    normal = linearized.l_polynomial(linearized.normal_basis(PRIMITIVE_NORMAL)).lambdas
    return poly == L_LAMBDAS and normal == L_LAMBDAS, "polynomial basis and normal basis"


def l_inv_matches() -> bool:
    return (linearized.l_inv_polynomial().lambdas == L_INV_LAMBDAS
            and linearized.l_inv_polynomial(linearized.normal_basis(PRIMITIVE_NORMAL)).lambdas == L_INV_LAMBDAS)


def rho_matches() -> bool:
    rho = linearized.affine_rho()
    expected = linearized.LinearizedPoly(L_INV_LAMBDAS).as_perm_polynomial(RHO_CONSTANT)
    return rho == expected


def psi_two_routes() -> tuple[bool, str]:
    via_pow = permpoly.pow_mod(linearized.affine_rho(), 254)
    via_table = permpoly.psi_polynomial()
    logs = sbox_analysis.discrete_log_table()
    top, const = logs[via_table.coeffs[254]], logs[via_table.coeffs[0]]
    ok = via_pow == via_table and top == PSI_TOP_LOG and const == PSI_CONSTANT_LOG
    return ok, f"u^254 coefficient alpha^{top}, constant alpha^{const}, {permpoly.sparsity(via_table)} terms"


def phi_psi_inverse() -> bool:
    phi, psi = permpoly.phi_polynomial(), permpoly.psi_polynomial()
    return (permpoly.compose(phi, psi) == permpoly.IDENTITY
            and permpoly.compose(psi, phi) == permpoly.IDENTITY
            and all(psi(phi(a)) == a for a in range(256)))


def gamma_facts() -> bool:
    g, g_inv, one = ring.gamma(), ring.gamma_inv(), RingElement.one()
    return (ring.ring_pow(g, 4) == one
            and g * g_inv == one
            and ring.ring_pow(g, 3) == g_inv
            and g * g == GAMMA_SQUARED
            and GAMMA_SQUARED * g == g_inv
            and GAMMA_INV_FACTORS[0] * GAMMA_INV_FACTORS[1] == g_inv)


def basis_facts() -> tuple[bool, str]:
    first = linearized.find_first_primitive_normal()
    nb = linearized.normal_basis(first)
    dual = linearized.dual_basis(nb)
    ab = linearized.field_matmul(linearized.frobenius_matrix_rows(nb.elements),
                                 linearized.frobenius_matrix_cols(dual.elements))
    ok = (first == PRIMITIVE_NORMAL
          and dual == linearized.normal_basis(DUAL_GENERATOR)
          and ab == linearized.bit_identity()
          and linearized.change_of_basis(nb) == NORMAL_BASIS_S
          and linearized.self_dual_primitive_normal_search() is None)
    return ok, f"generator {gf256.to_hex(first)}, dual generator {gf256.to_hex(dual.elements[0])}"


def cycle_facts() -> tuple[bool, str]:
    table = aes_core.sbox_table()
    d = sbox_analysis.cycle_decomposition(table)
    logs = sbox_analysis.discrete_log_table()
    two = [c for c in d.cycles if len(c) == 2]
    order = sbox_analysis.permutation_order(d)
    ok = (sorted(d.lengths()) == sorted(CYCLE_LENGTHS)
          and order == SBOX_ORDER
          and len(two) == 1 and sorted(logs[a] for a in two[0]) == list(TWO_CYCLE_LOGS)
          and len(d.cycle_of(0)) == 59
          and sbox_analysis.table_power(table, order) == tuple(range(256)))
    return ok, f"lengths {' '.join(map(str, d.lengths()))}, order {order}"


def order_below_landau() -> tuple[bool, str]:
    g = sbox_analysis.landau_max_order(256)
    return SBOX_ORDER < g, f"g(256) = {g}"


def known_answers() -> Iterator[CheckResult]:
    for variant, key, pt, ct in KNOWN_ANSWERS:
        k, m, c = bytes.fromhex(key), bytes.fromhex(pt), bytes.fromhex(ct)
        ks = aes_core.expand_key(k, aes_core.VARIANTS[variant])

        def run(ks=ks, k=k, m=m, c=c):
            enc = ring.to_block(aes_core.encrypt(ring.from_block(m), ks))
            dec = ring.to_block(aes_core.decrypt(ring.from_block(c), ks))
            ok = (enc == c and dec == m
                  and reference_aes.ref_encrypt(m, k) == c
                  and reference_aes.ref_decrypt(c, k) == m)
            return ok, enc.hex()

        yield _check(f"known-answer {variant} key={key[:8]}...", run)


def differential(variant: str, n: int, seed: int) -> tuple[bool, str]:
    v = aes_core.VARIANTS[variant]
    rng = np.random.default_rng(seed)
    keys = rng.integers(0, 256, (n, v.key_bytes), dtype=np.uint8)
    blocks = rng.integers(0, 256, (n, 16), dtype=np.uint8)
    schedules = [aes_core.expand_key(bytes(k), v) for k in keys]
    enc = aes_core.encrypt_many(blocks, schedules)
    dec = aes_core.decrypt_many(enc, schedules)
    # enc equals the oracle and dec inverts enc, so dec also equals the oracle's decryption
    bad = np.any(dec != blocks, axis=1)
    for row, (blk, key, c) in enumerate(zip(blocks, keys, enc)):
        if reference_aes.ref_encrypt(bytes(blk), bytes(key)) != bytes(c):
            bad[row] = True
    mismatches = int(bad.sum())
    return mismatches == 0, f"{n} random cases, {mismatches} mismatches"


# -- groups ------------------------------------------------------------------------

def published_constants() -> list[CheckResult]:
    return [
        _check("S-box interpolant has the 9 published terms", sbox_poly_matches),
        _check("lambda vector of L", lambda_matches),
        _check("linearized polynomial of L^-1", l_inv_matches),
        _check("affine polynomial rho", rho_matches),
        _check("psi = rho^254 = interpolant of inverse S-box", psi_two_routes),
        _check("phi and psi are mutually inverse", phi_psi_inverse),
        _check("gamma order 4, inverse and factorizations", gamma_facts),
        _check("primitive normal basis and its dual", basis_facts),
        _check("S-box cycle structure", cycle_facts),
        _check("S-box order below Landau bound", order_below_landau),
    ]


def vectors(config: VerifyConfig = VerifyConfig()) -> list[CheckResult]:
    results = list(known_answers())
    for offset, variant in enumerate(config.variants):
        results.append(_check(f"differential {variant}",
                              lambda v=variant, o=offset: differential(v, config.n_random, config.seed + o)))
    return results


def run(group: str = "all", config: VerifyConfig = VerifyConfig()) -> list[CheckResult]:
    if group == "paper-constants":
        return published_constants()
    if group == "vectors":
        return vectors(config)
    if group == "all":
        return published_constants() + vectors(config)
    raise ValueError(f"unknown verification group {group!r}")
