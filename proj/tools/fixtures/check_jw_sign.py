#!/usr/bin/env python3
"""Independent confirmation of the pair-transfer sign via a dense JW matrix.

Builds the full 16-dim Fock-space Hamiltonian for unrestricted minimal-basis
H2 from Pauli algebra alone (no determinant enumeration), then reads off the
double-transfer element. Also prints the 6-31G MO coefficient matrix to
identify the orbital phase convention that reproduces the published 4-qubit
operator.
"""
import numpy as np

import basis_data as bd
import gaussians as g
import scf
import qeemap as qm

M1 = {"I": np.eye(2), "X": np.array([[0, 1], [1, 0]], dtype=complex),
      "Y": np.array([[0, -1j], [1j, 0]]), "Z": np.diag([1.0, -1.0])}


def label_matrix(terms, n):
    H = np.zeros((2 ** n, 2 ** n), dtype=complex)
    for label, c in terms.items():
        P = np.array([[1.0]])
        for ch in label:
            P = np.kron(P, M1[ch])
        H += c * P
    return H


def main():
    r = 0.735 * g.ANGSTROM
    shells = bd.sto3g("H")
    mol = g.Molecule([(1, (0, 0, 0), shells), (1, (0, 0, r), shells)])
    S, Hc, eri, labels = mol.integrals()
    out = scf.rhf(S, Hc, eri, labels, 2)
    h_mo, g_mo = scf.mo_transform(Hc, eri, out["C"])
    h1, h2 = qm.spin_integrals(h_mo, g_mo, layout="interleaved")
    HF = label_matrix(qm.jw_pauli(h1, h2, 4), 4)
    assert np.max(np.abs(HF.imag)) < 1e-10
    HF = HF.real
    K = g_mo[0, 1, 0, 1]
    print(f"K = (gu|gu) = {K:+.6f}")
    print(f"<1100|H|0011> JW = {HF[0b1100, 0b0011]:+.6f}   "
          f"(faithful expects +K)")
    print(f"<0110|H|1001> JW = {HF[0b0110, 0b1001]:+.6f}   "
          f"(both conventions expect -K)")
    cfgs = qm.enumerate_configs(4, 2, sz=None, n_spatial=2,
                                layout="interleaved")
    HC = qm.ci_matrix(h1, h2, cfgs)
    sub = HF[np.ix_(cfgs, cfgs)]
    print("max |JW - enumeration| over config block:",
          np.max(np.abs(sub - HC)))

    print("\n6-31G MO coefficient matrix (columns = MOs):")
    r = 0.745 * g.ANGSTROM
    shells = bd.h_631g()
    mol = g.Molecule([(1, (0, 0, 0), shells), (1, (0, 0, r), shells)])
    S, Hc, eri, labels = mol.integrals()
    out = scf.rhf(S, Hc, eri, labels, 2)
    C = out["C"]
    np.set_printoptions(precision=6, suppress=True)
    print(C)
    for j in range(C.shape[1]):
        big = int(np.argmax(np.abs(C[:, j])))
        first = int(np.nonzero(np.abs(C[:, j]) > 1e-8)[0][0])
        print(f"MO{j}: largest row {big} sign {np.sign(C[big, j]):+.0f}; "
              f"first row {first} sign {np.sign(C[first, j]):+.0f}")


if __name__ == "__main__":
    main()
