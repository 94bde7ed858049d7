"""Shared oracles and generators for the test suite.

The brute-force integrators here deliberately avoid the package's own
quadrature path: they integrate in the s coordinate with scipy's QUADPACK
wrapper segment by segment, so any systematic error in the library's
log-space assembly would show up as a disagreement.
"""

import math

import numpy as np
from scipy.integrate import quad
from scipy.special import erfi

from moser2d import RadialProfile


def brute_j(p: RadialProfile, beta: float, kind: str = "expm1") -> float:
    if kind == "expm1":
        g = math.expm1
    else:
        g = lambda x: math.expm1(x) - x
    s, v = p.s, p.v
    total = 0.0
    for i in range(len(s) - 1):
        sl, sr = float(s[i]), float(s[i + 1])
        if sr == sl:
            continue
        vl = float(v[i])
        slope = (float(v[i + 1]) - vl) / (sr - sl)

        def f(x, vl=vl, m=slope, sl=sl):
            u = vl + m * (x - sl)
            return g(beta * u * u) * math.exp(-x)

        val, _ = quad(f, sl, sr, epsabs=0.0, epsrel=1e-12, limit=500)
        total += val
    top = float(v[-1])
    if top > 0.0:
        total += g(beta * top * top) * math.exp(-float(s[-1]))
    return p.t_support * total


def brute_l2(p: RadialProfile) -> float:
    s, v = p.s, p.v
    total = 0.0
    for i in range(len(s) - 1):
        sl, sr = float(s[i]), float(s[i + 1])
        if sr == sl:
            continue
        vl = float(v[i])
        slope = (float(v[i + 1]) - vl) / (sr - sl)

        def f(x, vl=vl, m=slope, sl=sl):
            u = vl + m * (x - sl)
            return u * u * math.exp(-x)

        val, _ = quad(f, sl, sr, epsabs=0.0, epsrel=1e-13, limit=500)
        total += val
    total += float(v[-1]) ** 2 * math.exp(-float(s[-1]))
    return p.t_support * total


def moser_j_oracle(n: int) -> float:
    # closed form of T * int_0^inf (e^{4 pi U^2} - 1) e^{-s} ds for the
    # unit-Dirichlet log cap: the -1 term cancels the plateau exactly
    big_l = math.log(n)
    return math.pi * math.sqrt(2.0 * math.pi * big_l) * math.exp(-big_l / 2.0) * erfi(
        math.sqrt(big_l / 2.0)
    )


def random_profile(rng, allow_jumps: bool = True, max_extra: int = 7) -> RadialProfile:
    t_sup = float(np.exp(rng.uniform(-3.0, 6.0)))
    s = [0.0]
    v = [0.0 if rng.random() < 0.7 else float(rng.uniform(0.0, 0.5))]
    was_jump = False
    for _ in range(int(rng.integers(1, max_extra + 1))):
        if allow_jumps and not was_jump and rng.random() < 0.3:
            s.append(s[-1])
            v.append(v[-1] + float(rng.uniform(1e-3, 1.0)))
            was_jump = True
        else:
            s.append(s[-1] + float(rng.uniform(0.05, 2.0)))
            v.append(v[-1] + float(rng.uniform(0.0, 0.8)))
            was_jump = False
    return RadialProfile(t_sup, s, v)


def random_smooth_profile(rng, max_dirichlet: float = 1.0) -> RadialProfile:
    # jump-free, v[0] = 0, amplitude capped so dirichlet_sq <= max_dirichlet
    n = int(rng.integers(2, 8))
    ds = rng.uniform(0.1, 2.0, size=n - 1)
    dv = rng.uniform(0.0, 0.6, size=n - 1)
    dv[rng.integers(0, n - 1)] += 0.05
    s = np.concatenate([[0.0], np.cumsum(ds)])
    v = np.concatenate([[0.0], np.cumsum(dv)])
    t_sup = float(np.exp(rng.uniform(-2.0, 5.0)))
    dir_sq = 4.0 * math.pi * float(np.sum(dv * dv / ds))
    if dir_sq > max_dirichlet:
        v = v * math.sqrt(max_dirichlet / dir_sq) * float(rng.uniform(0.5, 1.0))
    return RadialProfile(t_sup, s, v)


def rel_err(got: float, want: float) -> float:
    if want == 0.0:
        return abs(got)
    return abs(got - want) / abs(want)
