"""Named extremal and counterexample families with closed-form oracles.

Each constructor returns a RadialProfile; the companion *_oracles
functions return the exact norm values those profiles must reproduce, so
a single table drives both the test suite and the CLI oracle command.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .profile import RadialProfile, l2_norm_sq, scale_amplitude, scale_dilate

__all__ = [
    "SequenceSpec",
    "moser",
    "counterexample",
    "alvino_extremal",
    "cap",
    "zygmund_optimal",
    "modified_moser",
    "moser_l2_sq",
    "counterexample_scales",
    "counterexample_l2_sq",
    "counterexample_j_lower_bound",
    "alvino_l2_sq",
    "cap_l2_sq",
    "modified_moser_norms",
    "oracle_rows",
]

_2PI = 2.0 * math.pi
_4PI = 4.0 * math.pi


def moser(n: int) -> RadialProfile:
    """Unit-ball concentration profile with unit Dirichlet energy.

    Linear rise over s in [0, 2 log n] up to sqrt(log n / (2 pi)), then a
    plateau; support measure pi.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    ln = math.log(n)
    top = math.sqrt(ln / _2PI)
    return RadialProfile(math.pi, [0.0, 2.0 * ln], [0.0, top])


def moser_l2_sq(n) -> float:
    # (1/log n)(1/4 - 1/(4 n^2) - log n/(2 n^2))
    ln = math.log(n)
    nn = float(n) ** 2
    return (0.25 - 0.25 / nn - ln / (2.0 * nn)) / ln


def counterexample_scales(n) -> tuple:
    """(R_n, lambda_n): dilation radius and amplitude shrink factor."""
    if n < 3:
        raise ValueError("n must be >= 3 so that log log n > 0")
    ln = math.log(n)
    lln = math.log(ln)
    r = math.sqrt(ln) / lln
    lam = math.sqrt(1.0 - lln / (4.0 * ln))
    return r, lam


def counterexample(n: int) -> RadialProfile:
    """Dilated, slightly flattened concentration profile.

    Dirichlet energy lambda_n^2 < 1 strictly, yet J_{4 pi} admits the
    explicit lower bound pi R_n^2 (1/sqrt(log n) - 1/n^2) from the
    terminal plateau alone.
    """
    r, lam = counterexample_scales(n)
    return scale_amplitude(scale_dilate(moser(n), 1.0 / r), lam)


def counterexample_l2_sq(n) -> float:
    r, lam = counterexample_scales(n)
    return lam * lam * r * r * moser_l2_sq(n)


def counterexample_j_lower_bound(n) -> float:
    """Plateau contribution to J_{4 pi} of counterexample(n), exactly."""
    r, _ = counterexample_scales(n)
    ln = math.log(n)
    return math.pi * r * r * (1.0 / math.sqrt(ln) - 1.0 / float(n) ** 2)


def cap(k: float, r: float) -> RadialProfile:
    """Normalized cap: rise s/sqrt(k) (times 1/sqrt(4 pi)) then plateau.

    k may be any real >= 1, the formulas are analytic in it.  Support is
    pi r^2 and the Dirichlet energy is 1 for every (k, r).
    """
    k = float(k)
    if not (k >= 1.0 and math.isfinite(k)):
        raise ValueError("k must be >= 1")
    if not (r > 0.0 and math.isfinite(r)):
        raise ValueError("r must be positive")
    return RadialProfile(math.pi * r * r, [0.0, k], [0.0, math.sqrt(k / _4PI)])


def cap_l2_sq(k, r=1.0) -> float:
    k = float(k)
    ek = math.exp(-k)
    return r * r * 0.5 * (1.0 / k - ek - ek / k)


def zygmund_optimal(k: float) -> RadialProfile:
    """cap(k, 1): the family driving the window quasi-norm ratio to 1."""
    return cap(k, 1.0)


def alvino_extremal(t_support: float, delta: float) -> RadialProfile:
    """Truncated-logarithm profile attaining the window ratio 1/sqrt(4 pi).

    Rises linearly over s in [0, 2 log delta] to sqrt(log delta / (2 pi))
    with unit Dirichlet energy, on prescribed support measure.
    """
    t = float(t_support)
    d = float(delta)
    if not (t > 0.0 and math.isfinite(t)):
        raise ValueError("t_support must be positive")
    if not (d > 1.0 and math.isfinite(d)):
        raise ValueError("delta must exceed 1")
    k = 2.0 * math.log(d)
    return RadialProfile(t, [0.0, k], [0.0, math.sqrt(k / _4PI)])


def alvino_l2_sq(t_support, delta) -> float:
    d = math.log(delta)
    e2 = math.exp(-2.0 * d)
    return (t_support / _4PI) * (1.0 / d - 2.0 * e2 - e2 / d)


def modified_moser(n: int) -> RadialProfile:
    """moser(n) shrunk by (1 - ||w_n||_2): feasible for the sum-norm ball."""
    w = moser(n)
    a = math.sqrt(l2_norm_sq(w))
    return scale_amplitude(w, 1.0 - a)


def modified_moser_norms(n) -> dict:
    """Closed-form norms of modified_moser(n); sum_norm = 1 - a^2 <= 1."""
    a = math.sqrt(moser_l2_sq(n))
    return {
        "dirichlet_sq": (1.0 - a) ** 2,
        "l2_sq": (1.0 - a) ** 2 * a * a,
        "sum_norm": 1.0 - a * a,
    }


@dataclass(frozen=True)
class SequenceSpec:
    """A family name plus parameters, with its oracle table attached."""

    family: str
    params: dict = field(default_factory=dict)

    _BUILDERS = {
        "moser": (moser, ("n",)),
        "counterexample": (counterexample, ("n",)),
        "alvino": (alvino_extremal, ("t_support", "delta")),
        "cap": (cap, ("k", "r")),
        "zygmund": (zygmund_optimal, ("k",)),
        "modified-moser": (modified_moser, ("n",)),
    }

    def __post_init__(self):
        if self.family not in self._BUILDERS:
            raise ValueError("unknown family %r" % (self.family,))
        _, names = self._BUILDERS[self.family]
        missing = [a for a in names if a not in self.params]
        if missing:
            raise ValueError("family %s needs parameters %s" % (self.family, missing))

    def build(self) -> RadialProfile:
        fn, names = self._BUILDERS[self.family]
        return fn(*(self.params[a] for a in names))

    def oracle_values(self) -> dict:
        """Quantity -> exact closed-form value for this family member."""
        f, p = self.family, self.params
        if f == "moser":
            return {"dirichlet_sq": 1.0, "l2_sq": moser_l2_sq(p["n"])}
        if f == "counterexample":
            _, lam = counterexample_scales(p["n"])
            return {"dirichlet_sq": lam * lam, "l2_sq": counterexample_l2_sq(p["n"])}
        if f == "alvino":
            return {
                "dirichlet_sq": 1.0,
                "l2_sq": alvino_l2_sq(p["t_support"], p["delta"]),
            }
        if f == "cap":
            return {"dirichlet_sq": 1.0, "l2_sq": cap_l2_sq(p["k"], p["r"])}
        if f == "zygmund":
            return {"dirichlet_sq": 1.0, "l2_sq": cap_l2_sq(p["k"], 1.0)}
        norms = modified_moser_norms(p["n"])
        return {"dirichlet_sq": norms["dirichlet_sq"], "l2_sq": norms["l2_sq"]}


def oracle_rows():
    """Default (spec, quantity, oracle) grid for the oracle suite."""
    specs = []
    for n in (10, 100, 10**4, 10**6):
        specs.append(SequenceSpec("moser", {"n": n}))
        specs.append(SequenceSpec("counterexample", {"n": n}))
        specs.append(SequenceSpec("modified-moser", {"n": n}))
    for k in (1.0, 4.0, 16.0, 64.0):
        specs.append(SequenceSpec("cap", {"k": k, "r": 2.0}))
        specs.append(SequenceSpec("zygmund", {"k": k}))
    for t in (math.pi, 10.0):
        for d in (math.e, math.exp(4.0)):
            specs.append(SequenceSpec("alvino", {"t_support": t, "delta": d}))
    return specs
