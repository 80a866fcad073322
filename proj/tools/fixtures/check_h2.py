#!/usr/bin/env python3
"""Engine self-check against the published two- and three-qubit H2 operators."""
import numpy as np

import basis_data as bd
import gaussians as g
import scf
import qeemap as qm


def h2(dist_ang, basis):
    r = dist_ang * g.ANGSTROM
    shells = bd.sto3g("H") if basis == "sto3g" else bd.h_631g()
    mol = g.Molecule([(1, (0, 0, 0), shells), (1, (0, 0, r), shells)])
    return mol


def run(dist, basis):
    mol = h2(dist, basis)
    S, H, eri, labels = mol.integrals()
    out = scf.rhf(S, H, eri, labels, 2)
    h_mo, g_mo = scf.mo_transform(H, eri, out["C"])
    enuc = mol.nuclear_repulsion()
    print(f"R = {dist} A  basis = {basis}")
    print(f"  E(SCF electronic) = {out['energy']:.10f}")
    print(f"  E_nuc             = {enuc:.10f}")
    print(f"  E(SCF total)      = {out['energy'] + enuc:.10f}")
    print(f"  orbital energies  = {np.round(out['eps'], 6)}")
    return h_mo, g_mo, enuc


def show(terms, expect=None):
    for k in sorted(terms, key=lambda s: (s.count("I") * -1, s)):
        line = f"    {terms[k].real:+.6f} {k}"
        if abs(terms[k].imag) > 1e-10:
            line += f"  (imag {terms[k].imag:.2e}!)"
        if expect and k in expect:
            line += f"   expect {expect[k]:+.6f}  diff {terms[k].real - expect[k]:+.2e}"
        print(line)
    if expect:
        missing = set(expect) - set(terms)
        extra = set(terms) - set(expect)
        if missing:
            print("    MISSING:", sorted(missing))
        if extra:
            print("    EXTRA:", sorted(extra))


EQ15 = {"II": -1.052373, "ZI": -0.397937, "IZ": -0.397937,
        "ZZ": +0.011280, "XX": +0.180931}

EQ16 = {"III": -0.837333, "IIZ": -0.198969, "IZI": -0.305506,
        "IZZ": -0.198969, "ZII": -0.464882, "ZIZ": +0.050873,
        "ZZI": +0.066945, "ZZZ": +0.050873, "IIX": -0.045233,
        "IZX": +0.045233, "ZIX": -0.045233, "ZZX": +0.045233,
        "XIX": -0.045233, "XZX": -0.045233, "YIY": +0.045233,
        "YZY": +0.045233}

if __name__ == "__main__":
    h_mo, g_mo, enuc = run(0.735, "sto3g")

    h1, h2t = qm.spin_integrals(h_mo, g_mo, layout="blocked")
    cfgs = qm.enumerate_configs(4, 2, sz=(1, 1), n_spatial=2,
                                layout="blocked")
    print("  restricted configs:", [format(c, "04b") for c in cfgs])
    terms = qm.config_subspace_pauli(h1, h2t, cfgs)
    print("  two-qubit operator (vs published):")
    show(terms, EQ15)

    h1i, h2i = qm.spin_integrals(h_mo, g_mo, layout="interleaved")
    cfgs6 = qm.enumerate_configs(4, 2, sz=None, n_spatial=2,
                                 layout="interleaved")
    print("  unrestricted configs:", [format(c, "04b") for c in cfgs6])
    # published operator uses a flipped basis phase on the last config
    terms6 = qm.config_subspace_pauli(h1i, h2i, cfgs6,
                                      phases=[1, 1, 1, 1, 1, -1])
    print("  three-qubit operator (vs published):")
    show(terms6, EQ16)

    jw = qm.jw_pauli(h1, h2t, 4)
    print(f"  JW term count (blocked): {len(jw)}")
