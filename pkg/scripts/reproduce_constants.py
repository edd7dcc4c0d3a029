#!/usr/bin/env python3
"""Print every derived constant next to its frozen expectation."""
from aespoly import aes_core, gf256, linearized, permpoly, sbox_analysis, verify


def show(name, value, ok):
    print(f"[{'ok' if ok else 'MISMATCH'}] {name}: {value}")


def main():
    phi = permpoly.phi_polynomial()
    show("S-box interpolant", permpoly.to_text(phi), phi.terms() == verify.SBOX_POLY_TERMS)

    for label, basis in (("polynomial", linearized.POLYNOMIAL_BASIS),
                         ("normal z^5+1", linearized.normal_basis(0x21))):
        lam = linearized.l_polynomial(basis).lambdas
        show(f"lambda ({label} basis)", ", ".join(gf256.to_hex(v) for v in lam), lam == verify.L_LAMBDAS)

    l_inv = linearized.l_inv_polynomial()
    show("L^-1", str(l_inv), l_inv.lambdas == verify.L_INV_LAMBDAS)
    rho = linearized.affine_rho()
    show("rho constant", gf256.to_poly(rho.coeffs[0]), rho.coeffs[0] == verify.RHO_CONSTANT)

    psi = permpoly.psi_polynomial()
    logs = sbox_analysis.discrete_log_table()
    show("psi = rho^254", f"{permpoly.sparsity(psi)} terms, top alpha^{logs[psi.coeffs[254]]}, "
         f"constant alpha^{logs[psi.coeffs[0]]}", permpoly.pow_mod(rho, 254) == psi)

    a = linearized.find_first_primitive_normal()
    dual = linearized.dual_basis(linearized.normal_basis(a))
    show("first primitive normal", gf256.to_poly(a), a == verify.PRIMITIVE_NORMAL)
    show("dual generator", gf256.to_poly(dual.elements[0]), dual.elements[0] == verify.DUAL_GENERATOR)

    d = sbox_analysis.cycle_decomposition(aes_core.sbox_table())
    order = sbox_analysis.permutation_order(d)
    show("cycle lengths", d.lengths(), sorted(d.lengths()) == sorted(verify.CYCLE_LENGTHS))
    show("order", order, order == verify.SBOX_ORDER)
    g = sbox_analysis.landau_max_order(256)
    show("g(256)", g, order < g)


if __name__ == "__main__":
    main()
