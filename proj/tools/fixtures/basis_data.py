#!/usr/bin/env python3
"""Minimal-basis (STO-3G) and 6-31G shell data for the fixture corpus.

H, Li and F carry the published primitive sets.  Cl, Br and I are assembled
from the universal 3-Gaussian Slater fits produced by fit_sto3g.py combined
with Slater-rule orbital exponents; the resulting orbitals have the correct
shell structure and symmetry, which is what the encoded-operator fixtures
depend on, but total energies for those elements are approximate.
"""

C1S = (0.15432897, 0.53532814, 0.44463454)
C2S = (-0.09996723, 0.39951283, 0.70011547)
C2P = (0.15591627, 0.60768372, 0.39195739)
A1S = (2.227660584, 0.405771156, 0.109818036)
A2SP = (0.994203, 0.231031, 0.0751386)

# fitted with fit_sto3g.py (overlap-maximal 3-Gaussian expansions, zeta = 1)
A3SP = (0.4828541, 0.1347151, 0.0527266)
C3S = (-0.21962037, 0.22559546, 0.90039840)
C3P = (0.01058761, 0.59516702, 0.46200099)
A4SP = (0.2464581, 0.0909585, 0.0401683)
C4S = (-0.30884422, 0.01960667, 1.13103428)
C4P = (-0.12154688, 0.57152288, 0.54989485)
A5SP = (0.1349014, 0.0726360, 0.0320846)
C5S = (-0.38426397, -0.19725723, 1.37549571)
C5P = (-0.34816888, 0.62903201, 0.66628336)
A3D = (0.5229112, 0.1639596, 0.0638663)
C3D = (0.16865961, 0.58479850, 0.40567793)
A4D = (0.1777718, 0.0804065, 0.0394985)
C4D = (0.23085517, 0.60424111, 0.25957681)


def _scale(alphas, zeta):
    return tuple(a * zeta * zeta for a in alphas)


def _sp(alphas, zeta, cs, cp):
    e = _scale(alphas, zeta)
    return [(0, e, cs), (1, e, cp)]


# Slater-rule exponents for the elements lacking published sets here
ZETA = {
    "Cl": {"1s": 16.70, "2sp": 6.425, "3sp": 2.0333},
    "Br": {"1s": 34.70, "2sp": 15.425, "3sp": 7.9167, "3d": 4.6167,
           "4sp": 2.054},
    "I": {"1s": 52.70, "2sp": 24.425, "3sp": 13.9167, "3d": 10.6167,
          "4sp": 6.824, "4d": 3.743, "5sp": 1.90},
}


def sto3g(element):
    if element == "H":
        return [(0, (3.42525091, 0.62391373, 0.16885540), C1S)]
    if element == "Li":
        return ([(0, (16.1195750, 2.9362007, 0.7946505), C1S)]
                + _sp((0.6362897, 0.1478601, 0.0480887), 1.0, C2S, C2P))
    if element == "F":
        return ([(0, (166.6791340, 30.3608123, 8.2168207), C1S)]
                + _sp((6.4648032, 1.5022812, 0.4885885), 1.0, C2S, C2P))
    if element == "Cl":
        z = ZETA["Cl"]
        return ([(0, _scale(A1S, z["1s"]), C1S)]
                + _sp(A2SP, z["2sp"], C2S, C2P)
                + _sp(A3SP, z["3sp"], C3S, C3P))
    if element == "Br":
        z = ZETA["Br"]
        return ([(0, _scale(A1S, z["1s"]), C1S)]
                + _sp(A2SP, z["2sp"], C2S, C2P)
                + _sp(A3SP, z["3sp"], C3S, C3P)
                + [(2, _scale(A3D, z["3d"]), C3D)]
                + _sp(A4SP, z["4sp"], C4S, C4P))
    if element == "I":
        z = ZETA["I"]
        return ([(0, _scale(A1S, z["1s"]), C1S)]
                + _sp(A2SP, z["2sp"], C2S, C2P)
                + _sp(A3SP, z["3sp"], C3S, C3P)
                + [(2, _scale(A3D, z["3d"]), C3D)]
                + _sp(A4SP, z["4sp"], C4S, C4P)
                + [(2, _scale(A4D, z["4d"]), C4D)]
                + _sp(A5SP, z["5sp"], C5S, C5P))
    raise ValueError(f"no STO-3G data for {element}")


def h_631g():
    return [(0, (18.7311370, 2.8253937, 0.6401217),
             (0.03349460, 0.23472695, 0.81375733)),
            (0, (0.1612778,), (1.0,))]


CHARGE = {"H": 1, "Li": 3, "F": 9, "Cl": 17, "Br": 35, "I": 53}
