#!/usr/bin/env python3
"""Contracted Gaussian one- and two-electron integrals (McMurchie-Davidson).

Supports s, p and spherical-d shells, which covers every basis in the fixture
corpus.  All integrals are returned over normalised real-spherical AOs; the
two-electron tensor uses chemist ordering (ij|kl).
"""
import math

import numpy as np
from scipy.special import gammainc, gammaln

ANGSTROM = 1.8897259886


def boys(nmax, T):
    """F_n(T) for n = 0..nmax; T is a flat array."""
    T = np.asarray(T, dtype=float)
    Ts = np.maximum(T, 1e-14)
    out = np.empty((nmax + 1,) + T.shape)
    small = T < 1e-12
    for n in range(nmax + 1):
        a = n + 0.5
        full = 0.5 * np.exp(gammaln(a)) * gammainc(a, Ts) / Ts ** a
        out[n] = np.where(small, 1.0 / (2 * n + 1) - T / (2 * n + 3), full)
    return out


def hermite_e(la, lb, Q, a, b):
    """E^{ij}_t tables for one dimension, vectorised over primitive pairs.

    a, b: exponent arrays (npair,); Q = A - B (scalar).
    Returns array (la+1, lb+1, la+lb+1, npair)."""
    npair = a.shape[0]
    p = a + b
    mu = a * b / p
    E = np.zeros((la + 1, lb + 1, la + lb + 1, npair))
    E[0, 0, 0] = np.exp(-mu * Q * Q)
    for i in range(1, la + 1):
        for t in range(i + 1):
            v = np.zeros(npair)
            if t - 1 >= 0:
                v += E[i - 1, 0, t - 1] / (2 * p)
            v += -(mu * Q / a) * E[i - 1, 0, t]
            if t + 1 <= i - 1:
                v += (t + 1) * E[i - 1, 0, t + 1]
            E[i, 0, t] = v
    for j in range(1, lb + 1):
        for i in range(la + 1):
            for t in range(i + j + 1):
                v = np.zeros(npair)
                if t - 1 >= 0:
                    v += E[i, j - 1, t - 1] / (2 * p)
                v += (mu * Q / b) * E[i, j - 1, t]
                if t + 1 <= i + j - 1:
                    v += (t + 1) * E[i, j - 1, t + 1]
                E[i, j, t] = v
    return E


_R_TRIPLES = {}


def _r_triples(tmax, umax, vmax, cap):
    key = (tmax, umax, vmax, cap)
    got = _R_TRIPLES.get(key)
    if got is None:
        got = [(t, u, v)
               for t in range(tmax + 1)
               for u in range(umax + 1)
               for v in range(vmax + 1)
               if 0 < t + u + v <= cap]
        _R_TRIPLES[key] = got
    return got


def hermite_r(tmax, umax, vmax, p, X, Y, Z):
    """R_{tuv} (n=0) tables; p, X, Y, Z arrays of shape (n,).
    Returns array (tmax+1, umax+1, vmax+1, n)."""
    L = tmax + umax + vmax
    T = p * (X * X + Y * Y + Z * Z)
    F = boys(L, T)
    n = p.shape[0]
    R = np.zeros((L + 1, tmax + 1, umax + 1, vmax + 1, n))
    for nn in range(L + 1):
        R[nn, 0, 0, 0] = (-2.0 * p) ** nn * F[nn]
    for nn in range(L - 1, -1, -1):
        for t, u, v in _r_triples(tmax, umax, vmax, L - nn):
            if t > 0:
                acc = X * R[nn + 1, t - 1, u, v]
                if t > 1:
                    acc = acc + (t - 1) * R[nn + 1, t - 2, u, v]
            elif u > 0:
                acc = Y * R[nn + 1, t, u - 1, v]
                if u > 1:
                    acc = acc + (u - 1) * R[nn + 1, t, u - 2, v]
            else:
                acc = Z * R[nn + 1, t, u, v - 1]
                if v > 1:
                    acc = acc + (v - 1) * R[nn + 1, t, u, v - 2]
            R[nn, t, u, v] = acc
    return R[0]


def _double_factorial(n):
    return 1 if n <= 1 else n * _double_factorial(n - 2)


CART_COMPONENTS = {
    0: [(0, 0, 0)],
    1: [(1, 0, 0), (0, 1, 0), (0, 0, 1)],
    2: [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)],
}


class Shell:
    """One contracted cartesian shell on a center."""

    def __init__(self, l, center, exps, coefs):
        self.l = l
        self.center = np.asarray(center, dtype=float)
        self.exps = np.asarray(exps, dtype=float)
        # fold the axis-component primitive norms into the coefficients
        norms = ((2.0 * self.exps / math.pi) ** 0.75
                 * (4.0 * self.exps) ** (l / 2.0)
                 / math.sqrt(_double_factorial(2 * l - 1)))
        self.coefs = np.asarray(coefs, dtype=float) * norms
        self.components = CART_COMPONENTS[l]

    @property
    def ncart(self):
        return len(self.components)


class PairData:
    """Cached per-dimension Hermite tables for a contracted shell pair."""

    def __init__(self, sa, sb, extra=0):
        self.sa, self.sb = sa, sb
        a = np.repeat(sa.exps, len(sb.exps))
        b = np.tile(sb.exps, len(sa.exps))
        self.a, self.b = a, b
        self.p = a + b
        self.cc = np.repeat(sa.coefs, len(sb.coefs)) * np.tile(sb.coefs,
                                                              len(sa.coefs))
        self.P = (a[:, None] * sa.center[None, :]
                  + b[:, None] * sb.center[None, :]) / self.p[:, None]
        self.E = [hermite_e(sa.l, sb.l + extra, sa.center[d] - sb.center[d],
                            a, b) for d in range(3)]


def overlap_block(pd):
    sa, sb = pd.sa, pd.sb
    fac = (math.pi / pd.p) ** 1.5
    out = np.zeros((sa.ncart, sb.ncart))
    for ia, (ax, ay, az) in enumerate(sa.components):
        for ib, (bx, by, bz) in enumerate(sb.components):
            s = pd.E[0][ax, bx, 0] * pd.E[1][ay, by, 0] * pd.E[2][az, bz, 0]
            out[ia, ib] = np.sum(pd.cc * fac * s)
    return out


def kinetic_block(pd):
    sa, sb = pd.sa, pd.sb
    fac = (math.pi / pd.p) ** 1.5
    b = pd.b
    out = np.zeros((sa.ncart, sb.ncart))

    def s1(d, i, j):
        if j < 0:
            return np.zeros_like(pd.p)
        return pd.E[d][i, j, 0]

    for ia, ca in enumerate(sa.components):
        for ib, cb in enumerate(sb.components):
            terms = np.zeros_like(pd.p)
            for d in range(3):
                i, j = ca[d], cb[d]
                kin = (b * (2 * j + 1) * s1(d, i, j)
                       - 2.0 * b * b * s1(d, i, j + 2))
                if j >= 2:
                    kin = kin - 0.5 * j * (j - 1) * s1(d, i, j - 2)
                rest = np.ones_like(pd.p)
                for dd in range(3):
                    if dd != d:
                        rest = rest * s1(dd, ca[dd], cb[dd])
                terms = terms + kin * rest
            out[ia, ib] = np.sum(pd.cc * fac * terms)
    return out


def nuclear_block(pd, charges, centers):
    sa, sb = pd.sa, pd.sb
    lx = sa.l + sb.l
    out = np.zeros((sa.ncart, sb.ncart))
    for Z, C in zip(charges, centers):
        X = pd.P[:, 0] - C[0]
        Y = pd.P[:, 1] - C[1]
        Zc = pd.P[:, 2] - C[2]
        R = hermite_r(lx, lx, lx, pd.p, X, Y, Zc)
        for ia, (ax, ay, az) in enumerate(sa.components):
            for ib, (bx, by, bz) in enumerate(sb.components):
                acc = np.zeros_like(pd.p)
                for t in range(ax + bx + 1):
                    for u in range(ay + by + 1):
                        for v in range(az + bz + 1):
                            acc = acc + (pd.E[0][ax, bx, t]
                                         * pd.E[1][ay, by, u]
                                         * pd.E[2][az, bz, v] * R[t, u, v])
                out[ia, ib] += -Z * np.sum(pd.cc * (2 * math.pi / pd.p) * acc)
    return out


class HermitePair:
    """Shell pair with flattened Hermite charge tensors for ERIs."""

    def __init__(self, pd):
        sa, sb = pd.sa, pd.sb
        self.pd = pd
        self.lmax = sa.l + sb.l
        n1 = self.lmax + 1
        npair = pd.p.shape[0]
        ncomp = sa.ncart * sb.ncart
        W = np.zeros((ncomp, npair, n1, n1, n1))
        for ia, (ax, ay, az) in enumerate(sa.components):
            for ib, (bx, by, bz) in enumerate(sb.components):
                comp = ia * sb.ncart + ib
                ex = pd.E[0][ax, bx, :n1]
                ey = pd.E[1][ay, by, :n1]
                ez = pd.E[2][az, bz, :n1]
                W[comp] = np.einsum("tn,un,vn->ntuv", ex, ey, ez)
        self.W = (W * pd.cc[None, :, None, None, None]).reshape(
            ncomp, npair, n1 ** 3)
        self.cube = n1
        self.ncomp = ncomp

    def schwarz(self):
        val = eri_quartet(self, self)
        n1, n2 = self.pd.sa.ncart, self.pd.sb.ncart
        q = val.reshape(n1, n2, n1, n2)
        m = 0.0
        for i in range(n1):
            for j in range(n2):
                m = max(m, abs(q[i, j, i, j]))
        return math.sqrt(m)


def eri_quartet(bra, ket):
    """(ab|cd) for all component combinations: array (ncomp_bra, ncomp_ket)."""
    pb, pk = bra.pd, ket.pd
    nb, nk = pb.p.shape[0], pk.p.shape[0]
    p = pb.p[:, None]
    q = pk.p[None, :]
    PQ = pb.P[:, None, :] - pk.P[None, :, :]
    alpha = (p * q / (p + q)).ravel()
    X, Y, Z = PQ[..., 0].ravel(), PQ[..., 1].ravel(), PQ[..., 2].ravel()
    lb, lk = bra.lmax, ket.lmax
    R = hermite_r(lb + lk, lb + lk, lb + lk, alpha, X, Y, Z)

    cb, ck = bra.cube, ket.cube
    tb = np.arange(cb)
    tk = np.arange(ck)
    # gather R at (t_bra + t_ket) per dimension into (cb^3, ck^3, nb*nk)
    ti = (tb[:, None] + tk[None, :])
    M = R[ti[:, None, None, :, None, None],
          ti[None, :, None, None, :, None],
          ti[None, None, :, None, None, :]]
    M = M.reshape(cb ** 3, ck ** 3, nb * nk)
    sign = np.array([(-1) ** (t + u + v)
                     for t in tk for u in tk for v in tk], dtype=float)
    pref = (2.0 * math.pi ** 2.5
            / (p * q * np.sqrt(p + q))).ravel()
    M = M * (sign[None, :, None] * pref[None, None, :])
    M = M.reshape(cb ** 3, ck ** 3, nb, nk)
    Wb = bra.W  # (ncomp_b, nb, cb^3)
    Wk = ket.W  # (ncomp_k, nk, ck^3)
    return np.einsum("apt,tupn,bnu->ab", Wb, M, Wk, optimize=True)


class Molecule:
    def __init__(self, atoms):
        """atoms: list of (Z, (x, y, z) in bohr, shells) where shells is a
        list of (l, exps, coefs)."""
        self.charges = [a[0] for a in atoms]
        self.centers = [np.asarray(a[1], dtype=float) for a in atoms]
        self.shells = []
        self.shell_atom = []
        for Z, center, shl in atoms:
            for l, exps, coefs in shl:
                self.shells.append(Shell(l, center, exps, coefs))
                self.shell_atom.append(len(self.charges) - 1)

    def nuclear_repulsion(self):
        e = 0.0
        for i in range(len(self.charges)):
            for j in range(i + 1, len(self.charges)):
                r = np.linalg.norm(self.centers[i] - self.centers[j])
                e += self.charges[i] * self.charges[j] / r
        return e

    def cart_offsets(self):
        off, n = [], 0
        for s in self.shells:
            off.append(n)
            n += s.ncart
        return off, n

    def spherical_transform(self):
        """Rows map normalised spherical AOs onto cartesian components.
        Row scale is fixed afterwards by overlap self-normalisation."""
        off, ncart = self.cart_offsets()
        rows = []
        self.labels = []
        for si, s in enumerate(self.shells):
            o = off[si]
            if s.l == 0:
                r = np.zeros(ncart)
                r[o] = 1.0
                rows.append(r)
                self.labels.append("sigma")
            elif s.l == 1:
                for comp, lab in zip(range(3), ("pix", "piy", "sigma")):
                    r = np.zeros(ncart)
                    r[o + comp] = 1.0
                    rows.append(r)
                    self.labels.append(lab)
            else:
                # cartesian order: xx, xy, xz, yy, yz, zz
                combos = [((o + 1,), (1.0,), "dxy"),
                          ((o + 4,), (1.0,), "piy"),
                          ((o + 0, o + 3, o + 5), (-1.0, -1.0, 2.0), "sigma"),
                          ((o + 2,), (1.0,), "pix"),
                          ((o + 0, o + 3), (1.0, -1.0), "dx2y2")]
                for idx, w, lab in combos:
                    r = np.zeros(ncart)
                    for k, c in zip(idx, w):
                        r[k] = c
                    rows.append(r)
                    self.labels.append(lab)
        return np.array(rows)

    def integrals(self, verbose=False):
        """Returns (S, Hcore, ERI, labels) over normalised spherical AOs."""
        off, ncart = self.cart_offsets()
        nsh = len(self.shells)
        S = np.zeros((ncart, ncart))
        T = np.zeros((ncart, ncart))
        V = np.zeros((ncart, ncart))
        pairs = {}
        for i in range(nsh):
            for j in range(nsh):
                if j > i:
                    continue
                pd = PairData(self.shells[i], self.shells[j], extra=2)
                pairs[(i, j)] = pd
                sb = overlap_block(pd)
                tb = kinetic_block(pd)
                vb = nuclear_block(pd, self.charges, self.centers)
                oi, oj = off[i], off[j]
                ni, nj = self.shells[i].ncart, self.shells[j].ncart
                S[oi:oi + ni, oj:oj + nj] = sb
                T[oi:oi + ni, oj:oj + nj] = tb
                V[oi:oi + ni, oj:oj + nj] = vb
                S[oj:oj + nj, oi:oi + ni] = sb.T
                T[oj:oj + nj, oi:oi + ni] = tb.T
                V[oj:oj + nj, oi:oi + ni] = vb.T

        hp = {}
        for (i, j), pd in pairs.items():
            hp[(i, j)] = HermitePair(pd)
        qmax = {k: v.schwarz() for k, v in hp.items()}
        plist = sorted(hp.keys())
        eri = np.zeros((ncart, ncart, ncart, ncart))
        qall = max(qmax.values())
        for pi, (i, j) in enumerate(plist):
            for (k, l) in plist[:pi + 1]:
                if qmax[(i, j)] * qmax[(k, l)] < 1e-14 * max(qall, 1.0):
                    continue
                val = eri_quartet(hp[(i, j)], hp[(k, l)])
                ni, nj = self.shells[i].ncart, self.shells[j].ncart
                nk, nl = self.shells[k].ncart, self.shells[l].ncart
                blk = val.reshape(ni, nj, nk, nl)
                oi, oj, ok, ol = off[i], off[j], off[k], off[l]
                for a in range(ni):
                    for b in range(nj):
                        for c in range(nk):
                            for d in range(nl):
                                v = blk[a, b, c, d]
                                A, B, C, D = oi + a, oj + b, ok + c, ol + d
                                eri[A, B, C, D] = v
                                eri[B, A, C, D] = v
                                eri[A, B, D, C] = v
                                eri[B, A, D, C] = v
                                eri[C, D, A, B] = v
                                eri[D, C, A, B] = v
                                eri[C, D, B, A] = v
                                eri[D, C, B, A] = v
            if verbose and pi % 25 == 0:
                print(f"  eri shell-pair {pi + 1}/{len(plist)}")

        C = self.spherical_transform()
        S = C @ S @ C.T
        T = C @ T @ C.T
        V = C @ V @ C.T
        eri = np.einsum("pi,ijkl->pjkl", C, eri, optimize=True)
        eri = np.einsum("qj,pjkl->pqkl", C, eri, optimize=True)
        eri = np.einsum("rk,pqkl->pqrl", C, eri, optimize=True)
        eri = np.einsum("sl,pqrl->pqrs", C, eri, optimize=True)
        d = 1.0 / np.sqrt(np.diag(S))
        S = S * d[:, None] * d[None, :]
        T = T * d[:, None] * d[None, :]
        V = V * d[:, None] * d[None, :]
        eri = np.einsum("p,q,r,s,pqrs->pqrs", d, d, d, d, eri, optimize=True)
        return S, T + V, eri, list(self.labels)
