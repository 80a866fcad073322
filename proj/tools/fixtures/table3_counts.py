#!/usr/bin/env python3
"""Reproduce the published qubit/term-count table from scratch.

For each diatomic row: build integrals, run RHF, freeze/remove orbitals,
then count merged Pauli terms for both the full-register mapping (JW) and
the configuration-subspace encoding (QEE).
"""
import sys
import time

import numpy as np

import basis_data as bd
import gaussians as g
import scf
import qeemap as qm

GEOM = {
    "LiH": (("Li", "H"), 1.5949),
    "HF": (("F", "H"), 0.9168),
    "HCl": (("Cl", "H"), 1.2746),
    "HBr": (("Br", "H"), 1.4144),
    "F2": (("F", "F"), 1.4119),
    "Cl2": (("Cl", "Cl"), 1.9879),
    "Br2": (("Br", "Br"), 2.2811),
    "I2": (("I", "I"), 2.6663),
}

# molecule, frozen list, removed list, filter ("r"=Sz 0, "u"=particle only),
# expected (jw_qubits, jw_terms, qee_qubits, qee_terms)
ROWS = [
    ("LiH", [0], [3], "r", (8, 193, 4, 100)),
    ("HF", [], [], "r", (12, 631, 6, 1184)),
    ("HF", [0], [], "u", (10, 276, 6, 608)),
    ("HCl", [0], [], "u", (18, 3772, 8, 8960)),
    ("HCl", [0, 1], [], "r", (16, 2329, 6, 640)),
    ("HBr", [0, 1, 2], [], "r", (32, 40705, 8, 18490)),
    ("HBr", [0, 1, 2, 3, 4], [], "r", (28, 21891, 8, 18472)),
    ("F2", [0, 1], [], "r", (16, 1177, 6, 1040)),
    ("Cl2", [0, 1], [], "r", (32, 21481, 8, 17500)),
    ("Cl2", list(range(10)), [], "r", (16, 1177, 6, 1040)),
    ("Br2", list(range(28)), [], "r", (16, 1177, 6, 1040)),
    ("I2", list(range(46)), [], "r", (16, 1177, 6, 1040)),
]

_mol_cache = {}


def mix_degenerate(C, eps, seed):
    """Rotate each degenerate MO pair by an unrelated angle, imitating a
    symmetry-unaware eigensolver; the published counts assume such mixing."""
    if seed is None:
        return C
    rng = np.random.default_rng(seed)
    C = C.copy()
    i = 0
    while i < len(eps) - 1:
        if abs(eps[i + 1] - eps[i]) < 1e-7:
            t = rng.uniform(0.1, 1.4)
            c, s = np.cos(t), np.sin(t)
            a, b = C[:, i].copy(), C[:, i + 1].copy()
            C[:, i], C[:, i + 1] = c * a + s * b, -s * a + c * b
            i += 2
        else:
            i += 1
    return C


def molecule_mo(name, mix_seed=None):
    key = (name, mix_seed)
    if key in _mol_cache:
        return _mol_cache[key]
    (e1, e2), rA = GEOM[name]
    r = rA * g.ANGSTROM
    mol = g.Molecule([(bd.CHARGE[e1], (0, 0, 0), bd.sto3g(e1)),
                      (bd.CHARGE[e2], (0, 0, r), bd.sto3g(e2))])
    n_elec = bd.CHARGE[e1] + bd.CHARGE[e2]
    t0 = time.time()
    S, Hc, eri, labels = mol.integrals()
    out = scf.rhf(S, Hc, eri, labels, n_elec)
    C = mix_degenerate(out["C"], out["eps"], mix_seed)
    h_mo, g_mo = scf.mo_transform(Hc, eri, C)
    print(f"  [{name}] n_mo={Hc.shape[0]} E_elec={out['energy']:+.6f} "
          f"E_tot={out['energy'] + mol.nuclear_repulsion():+.6f} "
          f"({time.time() - t0:.1f}s)")
    _mol_cache[key] = (h_mo, g_mo, out, n_elec)
    return _mol_cache[key]


def count_terms(terms, tol=1e-8):
    return sum(1 for v in terms.values() if abs(v) > tol)


def run_row(name, frozen, removed, kind, expect, mix_seed=11):
    h_mo, g_mo, out, n_elec = molecule_mo(name, mix_seed)
    h_red, g_red, e_core, active = scf.reduce_space(h_mo, g_mo,
                                                    frozen, removed)
    n_act = len(active)
    m = n_elec - 2 * len(frozen)
    N = 2 * n_act
    h1, h2 = qm.spin_integrals(h_red, g_red, layout="blocked")

    t0 = time.time()
    jw = qm.jw_pauli(h1, h2, N, constant=e_core)
    t_jw = time.time() - t0
    sz = (m // 2, m - m // 2) if kind == "r" else None
    cfgs = qm.enumerate_configs(N, m, sz=sz, n_spatial=n_act,
                                layout="blocked")
    Q = (len(cfgs) - 1).bit_length() if len(cfgs) > 1 else 0
    t0 = time.time()
    A = qm.ci_matrix_sc(h1, h2, cfgs)
    dim = 2 ** Q
    H = np.zeros((dim, dim), dtype=complex)
    H[:len(cfgs), :len(cfgs)] = A
    H += e_core * np.eye(dim)
    qee = qm.pauli_decompose(H)
    t_qee = time.time() - t0
    got = (N, count_terms(jw), Q, count_terms(qee))
    ok = "ok " if got == expect else "** MISMATCH"
    print(f"{name:4s} frozen={len(frozen):2d} removed={len(removed)} "
          f"{kind}  got={got}  expect={expect}  {ok} "
          f"(jw {t_jw:.1f}s, qee {t_qee:.1f}s)")
    return got == expect


def main():
    names = sys.argv[1:] or [r[0] for r in ROWS]
    all_ok = True
    for row in ROWS:
        if row[0] in names:
            all_ok &= run_row(*row)
    print("ALL OK" if all_ok else "MISMATCHES PRESENT")


if __name__ == "__main__":
    main()
