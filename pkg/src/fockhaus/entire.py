"""Entire functions as finite Taylor-coefficient vectors.

Every function carried by the library is a trimmed complex coefficient
sequence with an explicit truncation certificate where it stands in for a
transcendental family (exponential kernels, Gaussian-type peaks).
"""

from __future__ import annotations

import json
import math

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.special import gammaln


class TruncationError(Exception):
    """The requested relative tail bound is unreachable within the degree cap."""


class CoeffFunction:
    """An entire function given by coefficients a_0..a_N (trailing zeros trimmed)."""

    def __init__(self, coeffs, label: str | None = None):
        arr = np.atleast_1d(np.asarray(coeffs, dtype=complex))
        nz = np.nonzero(arr)[0]
        if len(nz) == 0:
            arr = arr[:1] * 0.0
        else:
            arr = arr[: nz[-1] + 1]
        self.coeffs = arr
        self.label = label

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        return P.polyval(np.asarray(z, dtype=complex), self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, CoeffFunction) and np.array_equal(
            self.coeffs, other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def __repr__(self) -> str:
        name = self.label or "f"
        return f"CoeffFunction({name}, degree={self.degree})"

    def to_json_dict(self) -> dict:
        return {"coeffs": [[float(c.real), float(c.imag)] for c in self.coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def from_json_dict(data: dict) -> CoeffFunction:
    return CoeffFunction([complex(re, im) for re, im in data["coeffs"]])


def from_json(text: str) -> CoeffFunction:
    return from_json_dict(json.loads(text))


def monomial(n: int) -> CoeffFunction:
    """u_n(z) = z**n."""
    if n < 0:
        raise ValueError("monomial degree must be >= 0")
    c = np.zeros(n + 1, dtype=complex)
    c[n] = 1.0
    return CoeffFunction(c, label=f"u_{n}")


def _exp_series_degree(x: float, rel_tol: float, cap: int) -> int:
    """Smallest N with sum_{n>N} x**n/n! <= rel_tol * e**x, or TruncationError.

    Tail bound: x**(N+1)/(N+1)! * 1/(1 - x/(N+2)) once N+2 > x.
    """
    if x <= 0.0:
        return 0
    log_target = math.log(rel_tol) + x
    for n_cut in range(max(0, int(x)), cap + 1):
        if n_cut + 2 <= x:
            continue
        log_tail = (
            (n_cut + 1) * math.log(x)
            - gammaln(n_cut + 2)
            - math.log(1.0 - x / (n_cut + 2))
        )
        if log_tail <= log_target:
            return n_cut
    raise TruncationError(
        f"tail {rel_tol:g} at scale {x:g} needs more than {cap} coefficients"
    )


def _exp_coeffs(log_scale: float, phase: complex, n_deg: int) -> np.ndarray:
    # coefficient n of exp(s*z) with |s| = e**log_scale, s/|s| = phase
    n = np.arange(n_deg + 1)
    mags = np.exp(n * log_scale - gammaln(n + 1))
    return mags * phase**n


def kernel(
    beta: float,
    a: complex,
    n_max: int | None = None,
    radius: float = 8.0,
    rel_tol: float = 1e-14,
) -> CoeffFunction:
    """Truncated expansion of exp(beta * z * conj(a)).

    The truncation degree keeps the dropped tail below rel_tol relative to
    the peak value on |z| <= radius.  With n_max given, that degree is used
    after checking it meets the bound; degrees beyond 500 are refused.
    """
    if beta <= 0:
        raise ValueError("beta must be positive")
    a = complex(a)
    x = beta * abs(a) * radius
    needed = _exp_series_degree(x, rel_tol, cap=500)
    if n_max is None:
        n_max = needed
    elif n_max < needed:
        raise TruncationError(
            f"degree {n_max} misses the {rel_tol:g} tail bound (needs {needed})"
        )
    if a == 0:
        return CoeffFunction([1.0], label=f"K_{beta:g}(.,0)")
    phase = np.conj(a) / abs(a)
    coeffs = _exp_coeffs(math.log(beta * abs(a)), phase, n_max)
    return CoeffFunction(coeffs, label=f"K_{beta:g}(.,{a!r})")


def gaussian_peak(n: int, alpha: float, n_max: int | None = None,
                  rel_tol: float = 1e-12) -> CoeffFunction:
    """Truncated expansion of exp(n*z - n**2/(2*alpha)).

    Normalized so its weighted sup norm is 1; tail below rel_tol relative on
    |z| <= 2n/alpha.
    """
    if n < 1:
        raise ValueError("peak index must be >= 1")
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    x = n * (2.0 * n / alpha)
    needed = _exp_series_degree(x, rel_tol, cap=2000)
    if n_max is None:
        n_max = needed
    elif n_max < needed:
        raise TruncationError(
            f"degree {n_max} misses the {rel_tol:g} tail bound (needs {needed})"
        )
    coeffs = _exp_coeffs(math.log(float(n)), 1.0 + 0j, n_max)
    coeffs = coeffs * math.exp(-(n**2) / (2.0 * alpha))
    return CoeffFunction(coeffs, label=f"peak_{n}")


def dilate(f: CoeffFunction, t: float) -> CoeffFunction:
    """f(z/t): coefficient n picks up the factor t**-n.  Requires t >= 1."""
    if t < 1.0:
        raise ValueError("dilation parameter must satisfy t >= 1")
    if t == 1.0:
        return f
    n = np.arange(f.degree + 1)
    return CoeffFunction(f.coeffs * t ** (-n.astype(float)), label=f.label)


def rademacher_randomize(f: CoeffFunction, signs) -> CoeffFunction:
    """Flip coefficient signs: coefficient n becomes a_n * signs[n]."""
    signs = np.asarray(signs)
    if len(signs) < f.degree + 1:
        raise ValueError("need a sign for every coefficient")
    if not np.all(np.abs(signs[: f.degree + 1]) == 1):
        raise ValueError("signs must be +1 or -1")
    return CoeffFunction(f.coeffs * signs[: f.degree + 1], label=f.label)
