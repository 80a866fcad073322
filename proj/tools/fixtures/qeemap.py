#!/usr/bin/env python3
"""Reference fermion-to-qubit mappings used to sanity-check fixtures.

Small self-contained NumPy implementations: spatial-to-spin integral
expansion, the configuration-subspace encoding, and Jordan-Wigner.  The C++
library is the deliverable; these exist so every generated fixture is checked
against the published operator values before it enters the corpus.
"""
import itertools
import math

import numpy as np


def spin_integrals(h, g, layout="blocked"):
    """Spatial chemist (ij|kl) -> spin-orbital tensors (h1, h2) with
    h2[p,q,r,s] = (ps|qr) * delta(sp,ss) * delta(sq,sr), so that
    H = sum h1 a+_p a_q + 0.5 sum h2 a+_p a+_q a_r a_s."""
    n = h.shape[0]
    N = 2 * n

    def bit(P, s):
        return P + s * n if layout == "blocked" else 2 * P + s

    spat = np.empty(N, dtype=int)
    spin = np.empty(N, dtype=int)
    for P in range(n):
        for s in range(2):
            spat[bit(P, s)] = P
            spin[bit(P, s)] = s
    h1 = h[np.ix_(spat, spat)] * (spin[:, None] == spin[None, :])
    h2 = (g[spat[:, None, None, None], spat[None, None, None, :],
            spat[None, :, None, None], spat[None, None, :, None]]
          * (spin[:, None, None, None] == spin[None, None, None, :])
          * (spin[None, :, None, None] == spin[None, None, :, None]))
    return h1, h2


def enumerate_configs(N, m, sz=None, n_spatial=None, layout="blocked"):
    configs = []
    if layout == "blocked":
        alpha_mask = (1 << (n_spatial or 0)) - 1
    else:
        alpha_mask = sum(1 << (2 * i) for i in range(n_spatial or 0))
    for bits in itertools.combinations(range(N), m):
        f = sum(1 << b for b in bits)
        if sz is not None:
            na = bin(f & alpha_mask).count("1")
            if (na, m - na) != tuple(sz):
                continue
        configs.append(f)
    return sorted(configs)


def apply_annihilate(f, p):
    if not (f >> p) & 1:
        return None, 0
    sign = (-1) ** bin(f & ((1 << p) - 1)).count("1")
    return f ^ (1 << p), sign


def apply_create(f, p):
    if (f >> p) & 1:
        return None, 0
    sign = (-1) ** bin(f & ((1 << p) - 1)).count("1")
    return f | (1 << p), sign


def ci_matrix(h1, h2, configs):
    """Direct second-quantised matrix over the configuration list."""
    index = {f: k for k, f in enumerate(configs)}
    M = len(configs)
    H = np.zeros((M, M))
    nz1 = list(zip(*np.nonzero(np.abs(h1) > 1e-14)))
    nz2 = list(zip(*np.nonzero(np.abs(h2) > 1e-14)))
    for k, f in enumerate(configs):
        for p, q in nz1:
            f1, s1 = apply_annihilate(f, q)
            if f1 is None:
                continue
            f2, s2 = apply_create(f1, p)
            if f2 is None or f2 not in index:
                continue
            H[index[f2], k] += h1[p, q] * s1 * s2
        for p, q, r, s in nz2:
            f1, s1 = apply_annihilate(f, s)
            if f1 is None:
                continue
            f2, s2 = apply_annihilate(f1, r)
            if f2 is None:
                continue
            f3, s3 = apply_create(f2, q)
            if f3 is None:
                continue
            f4, s4 = apply_create(f3, p)
            if f4 is None or f4 not in index:
                continue
            H[index[f4], k] += 0.5 * h2[p, q, r, s] * s1 * s2 * s3 * s4
    return H


def ci_matrix_sc(h1, h2, configs):
    """Slater-Condon build: same matrix as ci_matrix, O(M^2) pair walk."""
    index = {f: k for k, f in enumerate(configs)}
    M = len(configs)
    H = np.zeros((M, M))
    occs = [tuple(p for p in range(h1.shape[0]) if (f >> p) & 1)
            for f in configs]

    def amp2(fk, p, q, r, s):
        # <f'| a+_p a+_q a_r a_s |f> summed over the bra implied by bits
        f1, s1 = apply_annihilate(fk, s)
        if f1 is None:
            return 0.0, None
        f2, s2 = apply_annihilate(f1, r)
        if f2 is None:
            return 0.0, None
        f3, s3 = apply_create(f2, q)
        if f3 is None:
            return 0.0, None
        f4, s4 = apply_create(f3, p)
        if f4 is None:
            return 0.0, None
        return s1 * s2 * s3 * s4, f4

    for k, f in enumerate(configs):
        occ = occs[k]
        e = sum(h1[i, i] for i in occ)
        for i in occ:
            for j in occ:
                if i != j:
                    e += 0.5 * (h2[i, j, j, i] - h2[i, j, i, j])
        H[k, k] = e
        for kp in range(k + 1, M):
            fp = configs[kp]
            diff = f ^ fp
            nd = bin(diff).count("1")
            if nd == 2:
                i = (diff & f).bit_length() - 1
                a = (diff & fp).bit_length() - 1
                lo, hi = min(i, a), max(i, a)
                gam = (-1) ** bin(f & (((1 << hi) - 1) >> (lo + 1) << (lo + 1))
                                  ).count("1")
                e = h1[a, i]
                for j in occ:
                    if j != i:
                        e += h2[a, j, j, i] - h2[a, j, i, j]
                H[kp, k] = H[k, kp] = gam * e
            elif nd == 4:
                ann = diff & f
                cre = diff & fp
                i = ann.bit_length() - 1
                j = (ann ^ (1 << i)).bit_length() - 1
                a = cre.bit_length() - 1
                b = (cre ^ (1 << a)).bit_length() - 1
                e = 0.0
                for (p, q) in ((a, b), (b, a)):
                    for (r, s) in ((i, j), (j, i)):
                        sgn, f4 = amp2(f, p, q, r, s)
                        if f4 is not None:
                            e += 0.5 * h2[p, q, r, s] * sgn
                H[kp, k] = H[k, kp] = e
    return H


def _wht(v):
    v = v.copy()
    h = 1
    n = v.shape[0]
    while h < n:
        for i in range(0, n, h * 2):
            a = v[i:i + h].copy()
            b = v[i + h:i + 2 * h].copy()
            v[i:i + h] = a + b
            v[i + h:i + 2 * h] = a - b
        h *= 2
    return v


def pauli_decompose(H, prune=1e-10):
    """Dense (2^Q, 2^Q) matrix -> {label: coeff}; label left = qubit Q-1.

    coef(x,z) = 2^-Q (-i)^{|x&z|} sum_k (-1)^{|k&z|} H[k^x, k]; the k-sum over
    all z is a Walsh-Hadamard transform of the diagonal H[k^x, k]."""
    dim = H.shape[0]
    Q = dim.bit_length() - 1
    terms = {}
    ks = np.arange(dim)
    for x in range(dim):
        hx = H[ks ^ x, ks]
        if not np.any(np.abs(hx) > 1e-15):
            continue
        w = _wht(hx.astype(complex)) / dim
        for z in range(dim):
            coef = w[z] * (-1j) ** bin(x & z).count("1")
            if abs(coef) > prune:
                label = "".join("IXZY"[(((x >> q) & 1) | (((z >> q) & 1) << 1))]
                                for q in range(Q - 1, -1, -1))
                terms[label] = complex(coef)
    return terms


def config_subspace_pauli(h1, h2, configs, constant=0.0, prune=1e-10,
                          phases=None):
    """Encoded Hamiltonian as {label: coeff}.

    phases: optional per-config signs; the encoding maps the k-th config to
    phases[k] * |k>, a spectrum-preserving basis-phase choice."""
    M = len(configs)
    Q = (M - 1).bit_length() if M > 1 else 0
    A = ci_matrix(h1, h2, configs)
    if phases is not None:
        s = np.asarray(phases, dtype=float)
        A = A * s[:, None] * s[None, :]
    dim = 2 ** Q
    H = np.zeros((dim, dim), dtype=complex)
    H[:M, :M] = A
    H += constant * np.eye(dim)
    return pauli_decompose(H, prune)


def _pmul(t1, t2):
    """Product of Pauli letter strings given as (x, z, coeff)."""
    x1, z1, c1 = t1
    x2, z2, c2 = t2
    X1, Y1, Z1 = x1 & ~z1, x1 & z1, ~x1 & z1
    X2, Y2, Z2 = x2 & ~z2, x2 & z2, ~x2 & z2
    plus = bin((X1 & Y2) | (Y1 & Z2) | (Z1 & X2)).count("1")
    minus = bin((Y1 & X2) | (Z1 & Y2) | (X1 & Z2)).count("1")
    return (x1 ^ x2, z1 ^ z2, c1 * c2 * 1j ** ((plus - minus) % 4))


def _opmul(A, B):
    out = {}
    for (x1, z1), c1 in A.items():
        for (x2, z2), c2 in B.items():
            x, z, c = _pmul((x1, z1, c1), (x2, z2, c2))
            out[(x, z)] = out.get((x, z), 0.0) + c
    return {k: v for k, v in out.items() if abs(v) > 1e-16}


def jw_pauli(h1, h2, N, constant=0.0, prune=1e-10):
    """Symbolic Jordan-Wigner expansion; returns {label: coeff}."""
    lower = []
    for p in range(N):
        zm = (1 << p) - 1
        lower.append({(1 << p, zm): 0.5, (1 << p, zm | (1 << p)): 0.5j})
    raise_ = [{k: np.conj(v) for k, v in a.items()} for a in lower]
    H = {(0, 0): complex(constant)}

    def acc(op, w):
        for k, v in op.items():
            H[k] = H.get(k, 0.0) + w * v

    for p, q in zip(*np.nonzero(np.abs(h1) > 1e-14)):
        acc(_opmul(raise_[p], lower[q]), h1[p, q])
    for p, q, r, s in zip(*np.nonzero(np.abs(h2) > 1e-14)):
        op = _opmul(_opmul(raise_[p], raise_[q]), _opmul(lower[r], lower[s]))
        acc(op, 0.5 * h2[p, q, r, s])
    terms = {}
    for (x, z), c in H.items():
        if abs(c) > prune:
            label = "".join("IXZY"[(((x >> q) & 1) | (((z >> q) & 1) << 1))]
                            for q in range(N - 1, -1, -1))
            terms[label] = complex(c)
    return terms
