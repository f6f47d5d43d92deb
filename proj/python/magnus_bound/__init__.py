"""Exact tree coefficients and truncation bounds for the Magnus expansion."""

import json
from fractions import Fraction

import numpy as np

from . import _core
from ._core import (
    DELTA_XI,
    XI,
    ConfigError,
    ConvergenceError,
    QuadratureError,
    coefficient_envelope,
    commutator_expression,
    estimate_beta,
    run_cli,
    scaled_time,
    term_bound,
    trees,
    truncation_bound,
    truncation_bound_tight,
)

__all__ = [
    "DELTA_XI",
    "XI",
    "ConfigError",
    "ConvergenceError",
    "QuadratureError",
    "alpha",
    "beta_sweep",
    "coefficient_envelope",
    "commutator_expression",
    "estimate_beta",
    "lhs_integral_series",
    "magnus_terms",
    "mu",
    "nu",
    "reference_propagator",
    "run_cli",
    "scaled_time",
    "simulate",
    "term_bound",
    "trees",
    "truncation_bound",
    "truncation_bound_tight",
]


def nu(n_max, method="recursion"):
    """nu_1..nu_{n_max} as Fractions."""
    return [Fraction(v) for v in _core.nu(n_max, method)]


def alpha(tree):
    return Fraction(_core.alpha(tree))


def mu(tree):
    return Fraction(_core.mu(tree))


def lhs_integral_series(order):
    """(log coefficient, [c_1..c_order]) of 2 log f + sum c_k f^k."""
    log_coeff, coeffs = _core.lhs_integral_series(order)
    return Fraction(log_coeff), [Fraction(c) for c in coeffs]


def beta_sweep(n_first=10, n_last=24, k_cut=60):
    return _core.beta_sweep(n_first, n_last, k_cut)


def _matrices(coefficients):
    return [np.asarray(c, dtype=np.complex128) for c in coefficients]


def magnus_terms(family, coefficients, t, n_max=4, omega=1.0):
    """M_1..M_{n_max} (A = -iH) as complex arrays."""
    return [np.asarray(m) for m in _core.magnus_terms(family, _matrices(coefficients), t, n_max, omega)]


def reference_propagator(family, coefficients, t, tol=1e-11, omega=1.0):
    return np.asarray(_core.reference_propagator(family, _matrices(coefficients), t, tol, omega))


def simulate(path):
    """Validation report for a run config, as a dict."""
    return json.loads(_core.simulate_json(str(path)))
