"""Plain table-driven FIPS-197 AES, used only as a test oracle.

Deliberately shares no code with the rest of the package: the S-box is a
literal, byte products come from a local xtime, and the state is a
4x4 list indexed state[row][col] = block[row + 4*col].
"""

SBOX = bytes.fromhex(
    "637c777bf26b6fc53001672bfed7ab76"
    "ca82c97dfa5947f0add4a2af9ca472c0"
    "b7fd9326363ff7cc34a5e5f171d83115"
    "04c723c31896059a071280e2eb27b275"
    "09832c1a1b6e5aa0523bd6b329e32f84"
    "53d100ed20fcb15b6acbbe394a4c58cf"
    "d0efaafb434d338545f9027f503c9fa8"
    "51a3408f929d38f5bcb6da2110fff3d2"
    "cd0c13ec5f974417c4a77e3d645d1973"
    "60814fdc222a908846eeb814de5e0bdb"
    "e0323a0a4906245cc2d3ac629195e479"
    "e7c8376d8dd54ea96c56f4ea657aae08"
    "ba78252e1ca6b4c6e8dd741f4bbd8b8a"
    "703eb5664803f60e613557b986c11d9e"
    "e1f8981169d98e949b1e87e9ce5528df"
    "8ca1890dbfe6426841992d0fb054bb16"
)

INV_SBOX = bytes(SBOX.index(i) for i in range(256))


def xtime(b):
    b <<= 1
    if b & 0x100:
        b ^= 0x11B
    return b


def _gmul(a, b):
    out = 0
    while b:
        if b & 1:
            out ^= a
        a = xtime(a)
        b >>= 1
    return out


_MUL = {c: bytes(_gmul(c, v) for v in range(256)) for c in (2, 3, 9, 11, 13, 14)}

_ROUNDS = {16: 10, 24: 12, 32: 14}


def _check(block, key):
    if len(block) != 16:
        raise ValueError("block must be 16 bytes")
    if len(key) not in _ROUNDS:
        raise ValueError("key must be 16, 24 or 32 bytes")


def key_expansion(key):
    """Returns the expanded key as a list of 4-byte words."""
    nk = len(key) // 4
    nr = _ROUNDS[len(key)]
    w = [list(key[4 * i:4 * i + 4]) for i in range(nk)]
    rcon = 1
    for i in range(nk, 4 * (nr + 1)):
        temp = list(w[i - 1])
        if i % nk == 0:
            temp = [SBOX[b] for b in temp[1:] + temp[:1]]
            temp[0] ^= rcon
            rcon = xtime(rcon)
        elif nk > 6 and i % nk == 4:
            temp = [SBOX[b] for b in temp]
        w.append([w[i - nk][k] ^ temp[k] for k in range(4)])
    return w


def _load(block):
    return [[block[r + 4 * c] for c in range(4)] for r in range(4)]


def _store(state):
    return bytes(state[r][c] for c in range(4) for r in range(4))


def _add_round_key(state, w, rnd):
    for c in range(4):
        word = w[4 * rnd + c]
        for r in range(4):
            state[r][c] ^= word[r]


def _sub_bytes(state, box):
    for r in range(4):
        state[r] = [box[b] for b in state[r]]


def _shift_rows(state):
    for r in range(1, 4):
        state[r] = state[r][r:] + state[r][:r]


def _inv_shift_rows(state):
    for r in range(1, 4):
        state[r] = state[r][-r:] + state[r][:-r]


def _mix_columns(state):
    m2, m3 = _MUL[2], _MUL[3]
    for c in range(4):
        a0, a1, a2, a3 = (state[r][c] for r in range(4))
        state[0][c] = m2[a0] ^ m3[a1] ^ a2 ^ a3
        state[1][c] = a0 ^ m2[a1] ^ m3[a2] ^ a3
        state[2][c] = a0 ^ a1 ^ m2[a2] ^ m3[a3]
        state[3][c] = m3[a0] ^ a1 ^ a2 ^ m2[a3]


def _inv_mix_columns(state):
    m9, m11, m13, m14 = _MUL[9], _MUL[11], _MUL[13], _MUL[14]
    for c in range(4):
        a0, a1, a2, a3 = (state[r][c] for r in range(4))
        state[0][c] = m14[a0] ^ m11[a1] ^ m13[a2] ^ m9[a3]
        state[1][c] = m9[a0] ^ m14[a1] ^ m11[a2] ^ m13[a3]
        state[2][c] = m13[a0] ^ m9[a1] ^ m14[a2] ^ m11[a3]
        state[3][c] = m11[a0] ^ m13[a1] ^ m9[a2] ^ m14[a3]


def ref_encrypt(block, key):
    block, key = bytes(block), bytes(key)
    _check(block, key)
    nr = _ROUNDS[len(key)]
    w = key_expansion(key)
    state = _load(block)
    _add_round_key(state, w, 0)
    for rnd in range(1, nr):
        _sub_bytes(state, SBOX)
        _shift_rows(state)
        _mix_columns(state)
        _add_round_key(state, w, rnd)
    _sub_bytes(state, SBOX)
    _shift_rows(state)
    _add_round_key(state, w, nr)
    return _store(state)


def ref_decrypt(block, key):
    block, key = bytes(block), bytes(key)
    _check(block, key)
    nr = _ROUNDS[len(key)]
    w = key_expansion(key)
    state = _load(block)
    _add_round_key(state, w, nr)
    for rnd in range(nr - 1, 0, -1):
        _inv_shift_rows(state)
        _sub_bytes(state, INV_SBOX)
        _add_round_key(state, w, rnd)
        _inv_mix_columns(state)
    _inv_shift_rows(state)
    _sub_bytes(state, INV_SBOX)
    _add_round_key(state, w, 0)
    return _store(state)
