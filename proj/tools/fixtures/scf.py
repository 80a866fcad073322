#!/usr/bin/env python3
"""Restricted Hartree-Fock for closed-shell diatomics on the z axis.

The Fock matrix is diagonalised per symmetry block (sigma / pi_x / pi_y /
delta_xy / delta_x2y2) so degenerate pi pairs never mix, canonical orbitals
carry clean symmetry labels, and the MO ordering is reproducible.  Includes
DIIS, an MO-basis transform and a frozen-core / deleted-orbital reduction.
"""
import numpy as np


BLOCK_ORDER = {"sigma": 0, "piy": 1, "pix": 2, "dxy": 3, "dx2y2": 4}


def _block_eig(F, S, labels):
    """Generalised eigenproblem per symmetry block; returns (eps, C, labs)
    sorted by (energy, block order) with a deterministic phase."""
    from scipy.linalg import eigh
    n = F.shape[0]
    eps_all, vecs, labs = [], [], []
    for lab in sorted(set(labels), key=lambda b: BLOCK_ORDER[b]):
        idx = [i for i, b in enumerate(labels) if b == lab]
        w, v = eigh(F[np.ix_(idx, idx)], S[np.ix_(idx, idx)])
        for k in range(len(idx)):
            full = np.zeros(n)
            full[idx] = v[:, k]
            eps_all.append(w[k])
            vecs.append(full)
            labs.append(lab)
    order = sorted(range(len(eps_all)),
                   key=lambda i: (round(eps_all[i], 9),
                                  BLOCK_ORDER[labs[i]], i))
    eps = np.array([eps_all[i] for i in order])
    C = np.column_stack([vecs[i] for i in order])
    labs = [labs[i] for i in order]
    for k in range(C.shape[1]):
        # lowest-index coefficient of maximal magnitude (tie-tolerant, so
        # symmetry-equivalent AO pairs pick a stable representative)
        mags = np.abs(C[:, k])
        top = mags.max()
        j = int(np.nonzero(mags >= top * (1.0 - 1e-9))[0][0])
        if C[j, k] < 0.0:
            C[:, k] = -C[:, k]
    return eps, C, labs


def rhf(S, H, eri, labels, n_elec, max_iter=200, conv=1e-11, verbose=False):
    n_occ = n_elec // 2
    assert 2 * n_occ == n_elec
    eps, C, labs = _block_eig(H, S, labels)
    D = 2.0 * C[:, :n_occ] @ C[:, :n_occ].T
    e_old = 0.0
    diis_F, diis_err = [], []
    for it in range(max_iter):
        J = np.einsum("pqrs,rs->pq", eri, D, optimize=True)
        K = np.einsum("prqs,rs->pq", eri, D, optimize=True)
        F = H + J - 0.5 * K
        e = 0.5 * np.sum(D * (H + F))
        err = F @ D @ S - S @ D @ F
        errnorm = np.max(np.abs(err))
        if verbose:
            print(f"  scf iter {it:3d}  E = {e:.12f}  |FDS-SDF| = {errnorm:.2e}")
        if abs(e - e_old) < conv and errnorm < 1e-8:
            eps, C, labs = _block_eig(F, S, labels)
            return {"energy": e, "eps": eps, "C": C, "labels": labs,
                    "n_occ": n_occ, "converged": True}
        e_old = e
        diis_F.append(F)
        diis_err.append(err.ravel())
        if len(diis_F) > 10:
            diis_F.pop(0)
            diis_err.pop(0)
        if len(diis_F) >= 2:
            m = len(diis_F)
            B = -np.ones((m + 1, m + 1))
            B[m, m] = 0.0
            for i in range(m):
                for j in range(m):
                    B[i, j] = diis_err[i] @ diis_err[j]
            rhs = np.zeros(m + 1)
            rhs[m] = -1.0
            try:
                c = np.linalg.solve(B, rhs)[:m]
                F = sum(ci * Fi for ci, Fi in zip(c, diis_F))
            except np.linalg.LinAlgError:
                pass
        eps, C, labs = _block_eig(F, S, labels)
        D_new = 2.0 * C[:, :n_occ] @ C[:, :n_occ].T
        if it < 2:
            D = 0.5 * D + 0.5 * D_new
        else:
            D = D_new
    raise RuntimeError("SCF failed to converge")


def mo_transform(H, eri, C):
    h = C.T @ H @ C
    g = np.einsum("pi,pqrs->iqrs", C, eri, optimize=True)
    g = np.einsum("qj,iqrs->ijrs", C, g, optimize=True)
    g = np.einsum("rk,ijrs->ijks", C, g, optimize=True)
    g = np.einsum("sl,ijks->ijkl", C, g, optimize=True)
    return h, g


def reduce_space(h, g, frozen, removed):
    """Frozen-core reduction in the MO basis (chemist-ordered g).

    frozen: doubly occupied MOs folded into an energy shift and an effective
    one-body term; removed: MOs deleted outright.  Returns (h_red, g_red,
    core_energy, active_index_list)."""
    n = h.shape[0]
    frozen = sorted(frozen)
    removed = sorted(removed)
    active = [p for p in range(n) if p not in frozen and p not in removed]
    e_core = 0.0
    for i in frozen:
        e_core += 2.0 * h[i, i]
        for j in frozen:
            e_core += 2.0 * g[i, i, j, j] - g[i, j, j, i]
    heff = h.copy()
    for i in frozen:
        heff += 2.0 * g[:, :, i, i] - g[:, i, i, :]
    idx = np.ix_(active, active)
    h_red = heff[np.ix_(active, active)]
    g_red = g[np.ix_(active, active, active, active)]
    return h_red, g_red, e_core, active
