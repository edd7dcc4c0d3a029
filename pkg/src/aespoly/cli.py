"""Command line entry point: ``aespoly <command> ...``.

Exit status: 0 on success, 1 on bad input, 2 when a verification check fails.
"""
from __future__ import annotations

import argparse
import sys

from . import aes_core, gf256, linearized, permpoly, ring, sbox_analysis, verify


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _hex_bytes(text: str, lengths: tuple[int, ...], what: str) -> bytes:
    s = text.strip().lower()
    if s.startswith("0x"):
        s = s[2:]
    try:
        raw = bytes.fromhex(s)
    except ValueError:
        raise UsageError(f"{what} is not valid hex: {text!r}") from None
    if len(raw) not in lengths:
        want = "/".join(str(2 * n) for n in lengths)
        raise UsageError(f"{what} must be {want} hex digits, got {len(s)}")
    return raw


def _cipher(args, out) -> int:
    variant = aes_core.VARIANTS[args.variant]
    key = _hex_bytes(args.key, (variant.key_bytes,), "key")
    block = ring.from_block(_hex_bytes(args.block, (16,), "block"))
    ks = aes_core.expand_key(key, variant)
    fn = aes_core.encrypt if args.command == "encrypt" else aes_core.decrypt
    print(ring.to_hex(fn(block, ks)), file=out)
    return 0


def _basis_arg(name: str) -> linearized.FieldBasis:
    if name == "poly":
        return linearized.POLYNOMIAL_BASIS
    return linearized.normal_basis(linearized.NORMAL_GENERATOR)


def _derive(args, out) -> int:
    what = args.what
    if what in ("sbox-poly", "inv-sbox-poly", "rho"):
        if what == "sbox-poly":
            p = permpoly.phi_polynomial()
        elif what == "inv-sbox-poly":
            p = permpoly.psi_polynomial()
        else:
            p = linearized.affine_rho()
        print(permpoly.to_machine(p) if args.machine else permpoly.to_text(p), file=out)
    else:
        basis = _basis_arg(args.basis)
        lp = linearized.l_polynomial(basis) if what == "lambda" else linearized.l_inv_polynomial(basis)
        if what == "lambda":
            for i, lam in enumerate(lp.lambdas):
                print(f"lambda_{i} = {gf256.to_poly(lam)}", file=out)
        else:
            print(str(lp), file=out)
    return 0


def _analyze(args, out) -> int:
    table = aes_core.sbox_table()
    if args.what == "landau":
        if not 1 <= args.n <= 256:
            raise UsageError("--n must lie in 1..256")
        print(sbox_analysis.landau_max_order(args.n), file=out)
        return 0
    if args.what == "cycles" and args.format == "alpha":
        d = sbox_analysis.alpha_scan_cycles(table)
    else:
        d = sbox_analysis.cycle_decomposition(table)
    order = sbox_analysis.permutation_order(d)
    if args.what == "cycles":
        print(sbox_analysis.discrete_log_format(d, args.format, closed=args.format == "alpha"), file=out)
        print("lengths: " + " ".join(str(n) for n in d.lengths()), file=out)
    print(f"order: {order}", file=out)
    return 0


def _basis(args, out) -> int:
    if args.what == "first-primitive-normal":
        a = linearized.find_first_primitive_normal()
        print(f"{gf256.to_hex(a)} {gf256.to_poly(a)}", file=out)
    elif args.what == "dual":
        gen = gf256.parse(args.generator)
        try:
            nb = linearized.normal_basis(gen)
        except linearized.BasisError:
            raise UsageError(f"{gf256.to_hex(gen)} does not generate a normal basis") from None
        dual = linearized.dual_basis(nb)
        print(f"dual generator: {gf256.to_hex(dual.elements[0])} {gf256.to_poly(dual.elements[0])}", file=out)
        print("dual basis:", file=out)
        print(str(dual), file=out)
        print("S:", file=out)
        print(linearized.format_bit_matrix(linearized.change_of_basis(nb)), file=out)
    else:
        for primitive in (True, False):
            for orbit in (False, True):
                found = linearized.self_dual_normal_search(primitive=primitive, orbit=orbit)
                label = ("primitive" if primitive else "any") + (" normal, dual in orbit" if orbit else " normal, dual equal")
                print(f"{label}: {'none' if found is None else gf256.to_hex(found)}", file=out)
    return 0


def _verify(args, out) -> int:
    if args.count < 1:
        raise UsageError("--count must be positive")
    config = verify.VerifyConfig(seed=args.seed, n_random=args.count)
    results = verify.run(args.group, config)
    for r in results:
        print(r.line(), file=out)
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed", file=out)
    return 2 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="aespoly", description="AES as polynomial algebra over GF(256)[x,y]/<x^4+1,y^4+1>")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name in ("encrypt", "decrypt"):
        p = sub.add_parser(name, help=f"{name} one 16-byte block")
        p.add_argument("--variant", choices=sorted(aes_core.VARIANTS), default="aes128")
        p.add_argument("--key", required=True, help="32, 48 or 64 hex digits")
        p.add_argument("--block", required=True, help="32 hex digits")
        p.set_defaults(func=_cipher)

    p = sub.add_parser("derive", help="print a derived polynomial")
    p.add_argument("what", choices=["sbox-poly", "inv-sbox-poly", "lambda", "l-inv", "rho"])
    p.add_argument("--basis", choices=["poly", "normal"], default="normal",
                   help="basis used for lambda / l-inv (result is the same)")
    p.add_argument("--machine", action="store_true", help="512 hex digits, u^0 coefficient first")
    p.set_defaults(func=_derive)

    p = sub.add_parser("analyze", help="S-box permutation analysis")
    p.add_argument("what", choices=["cycles", "order", "landau"])
    p.add_argument("--format", choices=["alpha", "hex"], default="alpha")
    p.add_argument("--n", type=int, default=256, help="symmetric group size for landau")
    p.set_defaults(func=_analyze)

    p = sub.add_parser("basis", help="normal / dual basis facts")
    p.add_argument("what", choices=["first-primitive-normal", "dual", "self-dual-search"])
    p.add_argument("--generator", default="0x21", help="normal basis generator for dual")
    p.set_defaults(func=_basis)

    p = sub.add_parser("verify", help="run cross-checks")
    p.add_argument("group", choices=["all", "vectors", "paper-constants"])
    p.add_argument("--seed", type=int, default=verify.VerifyConfig.seed)
    p.add_argument("--count", type=int, default=verify.VerifyConfig.n_random,
                   help="random differential cases per variant")
    p.set_defaults(func=_verify)
    return parser


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"aespoly: error: {exc}", file=err)
        return 1
    except ValueError as exc:
        print(f"aespoly: error: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
