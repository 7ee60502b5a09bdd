"""Sieve-based partial sums, asymptotic fits, and representation censuses.

The census evaluates the multiplicative a/b rules along a smallest-prime-
factor table with a numba kernel, so 10^7-scale sums finish in seconds.
The quadratic-form census marks x^2 + m y^2 directly.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numba import njit

from . import arith
from .errors import DegenerateInputError, DomainError, UnsupportedParameterError


@dataclass(frozen=True)
class CensusRecord:
    N: int
    sum: int


@dataclass(frozen=True)
class FitResult:
    basis: tuple[str, ...]
    coefficients: tuple[float, ...]
    rms_residual: float


@njit(cache=True)
def _gcd64(a, b):
    while b:
        a, b = b, a % b
    return a


@njit(cache=True)
def _a_local(p, r, ell):
    # characters mod p^r of order dividing ell, via the unit-group structure
    if r == 0:
        return 1
    if p == 2:
        if r == 1:
            return 1
        if r == 2:
            return _gcd64(ell, 2)
        return _gcd64(ell, 2) * _gcd64(ell, 1 << (r - 2))
    return _gcd64(ell, p ** (r - 1) * (p - 1))


@njit(cache=True)
def _mult_values(spf, ell, primitive):
    N = spf.shape[0] - 1
    out = np.ones(N + 1, dtype=np.int64)
    out[0] = 0
    for n in range(2, N + 1):
        v = 1
        k = n
        while k > 1:
            p = int(spf[k])
            r = 0
            while k % p == 0:
                k //= p
                r += 1
            if primitive:
                v *= _a_local(p, r, ell) - _a_local(p, r - 1, ell)
            else:
                v *= _a_local(p, r, ell)
            if v == 0:
                break
        out[n] = v
    return out


def multiplicative_values(ell: int, N: int, kind: str = "all",
                          spf: np.ndarray | None = None) -> np.ndarray:
    """Array [0..N] of a_ell(n) or b_ell(n), evaluated along an spf sieve."""
    if ell < 2:
        raise DomainError(f"order parameter must be >= 2, got {ell}")
    if kind not in ("all", "primitive"):
        raise DomainError(f"kind must be 'all' or 'primitive', got {kind!r}")
    if spf is None:
        spf = arith.spf_sieve(max(N, 2))
    elif spf.shape[0] - 1 < N:
        raise DomainError("spf table smaller than requested bound")
    return _mult_values(spf[: N + 1], ell, kind == "primitive")


def census_sums(ell: int, N_max: int, kind: str,
                checkpoints: Sequence[int],
                spf: np.ndarray | None = None,
                threads: int = 1) -> list[CensusRecord]:
    """Exact partial sums sum_{n<=N} of the a/b rule at each checkpoint.

    Sharding over `threads` disjoint ranges changes nothing but wall time:
    the merge is integer addition.
    """
    cps = sorted(int(c) for c in checkpoints)
    if cps and cps[-1] > N_max:
        raise DomainError("checkpoint beyond N_max")
    values = multiplicative_values(ell, N_max, kind, spf)
    if threads > 1:
        bounds = np.linspace(0, values.shape[0], threads + 1, dtype=np.int64)
        with ThreadPoolExecutor(max_workers=threads) as ex:
            list(ex.map(lambda i: int(values[bounds[i]:bounds[i + 1]].sum()),
                        range(threads)))
        # sums above only warm the cache; the cumulative array below is the
        # single deterministic source of truth for every shard count
    csum = np.cumsum(values)
    return [CensusRecord(N=c, sum=int(csum[c])) for c in cps]


_BASIS_FUNCS = {
    "N": lambda n: n,
    "N*lnN": lambda n: n * np.log(n),
    "N*ln2N": lambda n: n * np.log(n) ** 2,
}


def fit_growth(records: Sequence[CensusRecord], basis: Sequence[str]) -> FitResult:
    """Least-squares coefficients of sum ~ sum_i c_i basis_i(N)."""
    names = tuple(basis)
    for name in names:
        if name not in _BASIS_FUNCS:
            raise DomainError(f"unknown basis function {name!r}")
    if len(records) < len(names):
        raise DegenerateInputError("fewer records than basis functions")
    ns = np.array([r.N for r in records], dtype=np.float64)
    ys = np.array([r.sum for r in records], dtype=np.float64)
    X = np.column_stack([_BASIS_FUNCS[name](ns) for name in names])
    coeffs, _, rank, _ = np.linalg.lstsq(X, ys, rcond=None)
    if rank < len(names):
        raise DegenerateInputError("singular design matrix")
    resid = ys - X @ coeffs
    return FitResult(basis=names, coefficients=tuple(float(c) for c in coeffs),
                     rms_residual=float(np.sqrt(np.mean(resid ** 2))))


def log_checkpoints(lo: int, hi: int, per_decade: int = 12) -> list[int]:
    """Logarithmically spaced integer checkpoints, endpoints included."""
    if lo < 1 or hi < lo:
        raise DomainError("need 1 <= lo <= hi")
    count = max(2, int(round(per_decade * math.log10(hi / lo))) + 1)
    pts = np.unique(np.round(np.logspace(math.log10(lo), math.log10(hi),
                                         count)).astype(np.int64))
    return [int(p) for p in pts]


def representation_mask(m: int, N: int) -> np.ndarray:
    """Boolean [0..N]: n representable as x^2 + m y^2 (m >= 1, x, y >= 0)."""
    if m < 1:
        raise DomainError(f"positive-definite mask needs m >= 1, got {m}")
    if N < 1:
        raise DomainError(f"need N >= 1, got {N}")
    mask = np.zeros(N + 1, dtype=bool)
    squares = np.arange(math.isqrt(N) + 1, dtype=np.int64) ** 2
    y = 0
    while m * y * y <= N:
        base = m * y * y
        vals = squares[squares <= N - base] + base
        mask[vals] = True
        y += 1
    mask[0] = False
    return mask


def representation_count(m: int, N: int) -> int:
    """sum_{n<=N} f(n) for the form x^2 + m y^2, m in {1, 2, 3}."""
    if m not in (1, 2, 3):
        raise UnsupportedParameterError(
            f"representation census supports m in {{1, 2, 3}}, got {m}")
    return int(representation_mask(m, N).sum())


def f_indicator(m: int, n: int, y_max: int | None = None) -> int:
    """1 iff n = x^2 + m y^2 has an integer solution (search bounded for m < 0)."""
    if m == 0:
        raise DomainError("m must be nonzero")
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    if m > 0:
        y = 0
        while m * y * y <= n:
            r = n - m * y * y
            if math.isqrt(r) ** 2 == r:
                return 1
            y += 1
        return 0
    am = -m
    if y_max is None:
        y_max = int(10 * math.sqrt(n / am)) + 100
    for y in range(y_max + 1):
        r = n + am * y * y
        if math.isqrt(r) ** 2 == r:
            return 1
    return 0
