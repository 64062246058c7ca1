"""Exact-rational workbench for gl(N) RTT monodromy matrices.

Rationals are accepted as int, str ("p/q") or fractions.Fraction and returned
as Fraction.
"""

import json
from fractions import Fraction

from . import _rttkit
from ._rttkit import DomainError, RttkitError, RunConfig, mutation_keys, suite_names

__all__ = [
    "Chain",
    "DomainError",
    "RttkitError",
    "RunConfig",
    "mu_map",
    "mutation_keys",
    "run",
    "suite_names",
    "w_table",
]


def _q(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def _qs(xs):
    return [_q(x) for x in xs]


def _sets(sets):
    return [_qs(s) for s in sets]


def _frac_dict(d):
    return {k: Fraction(v) for k, v in d.items()}


class Chain:
    """Inhomogeneous chain T(u) = K L_L(u - z_L) ... L_1(u - z_1).

    kinds: per-site "fundamental" (default) or "conjugate".
    """

    def __init__(self, n, c, z, twist=(), kinds=()):
        self._impl = _rttkit.Chain(n, _q(c), _qs(z), _qs(twist), list(kinds))

    @property
    def n(self):
        return self._impl.n

    @property
    def dim(self):
        return self._impl.dim

    def __repr__(self):
        return self._impl.describe()

    def entry(self, i, j, u):
        """T_ij(u) as {(row, col): Fraction}."""
        return _frac_dict(self._impl.entry(i, j, _q(u)))

    def hat_entry(self, i, j, u):
        return _frac_dict(self._impl.hat_entry(i, j, _q(u)))

    def qdet(self, u):
        return _frac_dict(self._impl.qdet(_q(u)))

    def vacuum_eigenvalue(self, i, u):
        return Fraction(self._impl.lambda_(i, _q(u)))

    def rtt_residual(self, u, v):
        return self._impl.rtt_residual(_q(u), _q(v))

    def bethe_vector(self, sets):
        return _frac_dict(self._impl.bethe_vector(_sets(sets)))

    def theorem1(self, sets, dual=False):
        r = self._impl.theorem1(_sets(sets), dual)
        r["lhs"] = _frac_dict(r["lhs"])
        r["rhs"] = _frac_dict(r["rhs"])
        return r


def mu_map(n, sets, c=1):
    return [[Fraction(x) for x in s] for s in _rttkit.mu_map(n, _sets(sets), _q(c))]


def w_table(n, x, t, c=1, seed=1):
    """Sum-formula coefficients {partition descriptor: Fraction} plus metadata."""
    doc = json.loads(_rttkit.w_table(n, _sets(x), _sets(t), _q(c), seed))
    doc["coefficients"] = {k: Fraction(v) for k, v in doc["coefficients"].items()}
    return doc


def run(config=None, include_timing=True, **overrides):
    """Runs the verification suites; returns (passed, report dict)."""
    config = config or RunConfig()
    for key, value in overrides.items():
        setattr(config, key, _q(value) if key == "c" else value)
    passed, text = _rttkit.run_json(config, include_timing)
    return passed, json.loads(text)
