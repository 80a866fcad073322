#!/usr/bin/env python3
"""Least-squares 3-Gaussian expansions of Slater shells.

Reproduces the universal STO-3G expansion tables: for each shell the three
Gaussian exponents (at Slater exponent zeta = 1) and contraction coefficients
are obtained by maximising the overlap between the normalised contracted
Gaussian and the normalised nodeless Slater radial function.  ns/np shells
share exponents; the shared set minimises the summed s and p fit errors.

Run standalone to print the tables that are pasted into basis_data.py.
Known shells (1s, 2sp) must match the published values to ~1e-4; that is the
self-check for the fitted higher shells.
"""
import math

import numpy as np
from scipy import integrate, optimize


def slater_radial(n, zeta=1.0):
    norm = (2.0 * zeta) ** (n + 0.5) / math.sqrt(math.factorial(2 * n))
    return lambda r: norm * r ** (n - 1) * np.exp(-zeta * r)


def gauss_radial(l, alpha):
    norm = math.sqrt(2.0 * (2.0 * alpha) ** (l + 1.5) / math.gamma(l + 1.5))
    return lambda r: norm * r ** l * np.exp(-alpha * r * r)


def _quad(f):
    val, _ = integrate.quad(f, 0.0, 60.0, limit=400)
    return val


def best_overlap(n, l, alphas):
    """Maximum overlap of a normalised contraction on fixed exponents with the
    Slater (n,l) shell, plus the optimising coefficients."""
    sto = slater_radial(n)
    g = [gauss_radial(l, a) for a in alphas]
    v = np.array([_quad(lambda r, gi=gi: sto(r) * gi(r) * r * r) for gi in g])
    S = np.array([[_quad(lambda r, gi=gi, gj=gj: gi(r) * gj(r) * r * r)
                   for gj in g] for gi in g])
    c = np.linalg.solve(S, v)
    ov = math.sqrt(float(v @ c))
    return ov, c / ov


def fit_shell(shells, start):
    """shells: list of (n, l) fitted with shared exponents."""
    def objective(loga):
        alphas = np.exp(loga)
        return sum(1.0 - best_overlap(n, l, alphas)[0] for n, l in shells)

    res = optimize.minimize(objective, np.log(start), method="Nelder-Mead",
                            options={"xatol": 1e-10, "fatol": 1e-14,
                                     "maxiter": 4000, "maxfev": 4000})
    alphas = np.exp(res.x)
    order = np.argsort(alphas)[::-1]
    alphas = alphas[order]
    out = {"alphas": alphas}
    for n, l in shells:
        ov, c = best_overlap(n, l, alphas)
        out[f"c{n}{'spdfg'[l]}"] = c
        out[f"overlap{n}{'spdfg'[l]}"] = ov
    return out


def main():
    jobs = [
        ("1s", [(1, 0)], [2.2, 0.4, 0.11]),
        ("2sp", [(2, 0), (2, 1)], [1.0, 0.23, 0.075]),
        ("3sp", [(3, 0), (3, 1)], [0.5, 0.16, 0.06]),
        ("4sp", [(4, 0), (4, 1)], [0.3, 0.12, 0.05]),
        ("5sp", [(5, 0), (5, 1)], [0.25, 0.10, 0.045]),
        ("3d", [(3, 2)], [0.55, 0.15, 0.05]),
        ("4d", [(4, 2)], [0.35, 0.12, 0.05]),
    ]
    for name, shells, start in jobs:
        out = fit_shell(shells, start)
        print(f"# {name}")
        print("alphas = (%.7f, %.7f, %.7f)" % tuple(out["alphas"]))
        for n, l in shells:
            key = f"c{n}{'spdfg'[l]}"
            print("%s = (%.8f, %.8f, %.8f)   # overlap %.6f"
                  % (key, *out[key], out[f"overlap{n}{'spdfg'[l]}"]))
        print()


if __name__ == "__main__":
    main()
