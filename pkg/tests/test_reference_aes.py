import random

import pytest

from aespoly import aes_core, reference_aes
from aespoly.verify import KNOWN_ANSWERS


@pytest.mark.parametrize("variant,key,pt,ct", KNOWN_ANSWERS)
def test_known_answers(variant, key, pt, ct):
    k, m = bytes.fromhex(key), bytes.fromhex(pt)
    assert reference_aes.ref_encrypt(m, k).hex() == ct
    assert reference_aes.ref_decrypt(bytes.fromhex(ct), k) == m


def test_round_trip():
    r = random.Random(11)
    for n in range(1000):
        key = r.randbytes((16, 24, 32)[n % 3])
        block = r.randbytes(16)
        assert reference_aes.ref_decrypt(reference_aes.ref_encrypt(block, key), key) == block


def test_bad_lengths():
    with pytest.raises(ValueError):
        reference_aes.ref_encrypt(bytes(15), bytes(16))
    with pytest.raises(ValueError):
        reference_aes.ref_encrypt(bytes(16), bytes(17))
    with pytest.raises(ValueError):
        reference_aes.ref_decrypt(bytes(17), bytes(16))


def test_tables_agree_with_algebraic_sbox():
    assert tuple(reference_aes.SBOX) == aes_core.sbox_table()
    assert tuple(reference_aes.INV_SBOX) == aes_core.inv_sbox_table()


def test_xtime():
    assert reference_aes.xtime(0x57) == 0xAE
    assert reference_aes.xtime(0xAE) == 0x47
    assert reference_aes.xtime(0x80) == 0x1B


def test_key_expansion_length():
    assert len(reference_aes.key_expansion(bytes(16))) == 44
    assert len(reference_aes.key_expansion(bytes(24))) == 52
    assert len(reference_aes.key_expansion(bytes(32))) == 60
