"""Truncated Dirichlet series and numerical identity checks.

Covers the a/b series with documented tail envelopes, the Möbius-
inversion identity A(s) = zeta(s) B(s), the Lambda_m(s)^2 factorizations
for the representable-number series, and non-multiplicativity witnesses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp
import numpy as np

from . import census
from .arith import divisors
from .errors import DomainError, UnsupportedParameterError
from .eulerprod import (ONE_MINUS_X4, EulerProductSpec, classes,
                        log_euler_product)
from .lfun import PrecisionContext, kronecker_character, l_value

# Empirical envelope constant: sum_{n<=t} a_ell(n) <= C_ENV * t * ln(e t)^w
# with w = tau(ell) (tau(ell) - 1 for the primitive b); checked against the
# census in the test suite for every ell used here.
_C_ENV = 2.0


@dataclass(frozen=True)
class SeriesTruncation:
    N: int
    s: float
    value: float
    tail_bound: float


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    parameters: dict
    residual: float
    tolerance: float
    passed: bool

    def to_dict(self) -> dict:
        return {"identity": self.identity, "parameters": self.parameters,
                "residual": self.residual, "tolerance": self.tolerance,
                "pass": self.passed}


def growth_exponent(ell: int, kind: str) -> int:
    """Power of zeta(s) in the Dirichlet series: tau(ell), minus 1 if primitive."""
    w = len(divisors(ell))
    return w - 1 if kind == "primitive" else w


def _envelope_tail(N: int, s: float, w: int) -> float:
    """Upper bound for sum_{n>N} c(n) n^-s given the census envelope."""
    if s <= 1:
        raise DomainError("tail bound needs s > 1")
    lg = math.log(math.e * N)
    eps = w / lg
    gap = s - 1 - eps
    if gap <= 0.05:
        raise DomainError("s too close to 1 for the envelope tail bound")
    return s * _C_ENV * math.exp(w) * lg ** w * N ** (1 - s) / gap


def truncated_series(ell: int, kind: str, s: float, N: int,
                     spf: np.ndarray | None = None,
                     values: np.ndarray | None = None) -> SeriesTruncation:
    """Exact partial sum sum_{n<=N} c(n) n^-s with a proven tail bound.

    Terms are float64; the sum uses math.fsum, which is exactly rounded,
    so the only numerical error is the representation of each term.
    """
    if s < 1.5:
        raise DomainError(f"need s >= 1.5, got {s}")
    if N < 1:
        raise DomainError(f"need N >= 1, got {N}")
    if values is None:
        values = census.multiplicative_values(ell, N, kind, spf)
    n = np.arange(1, N + 1, dtype=np.float64)
    terms = values[1: N + 1].astype(np.float64) / n ** s
    return SeriesTruncation(N=N, s=s, value=math.fsum(terms),
                            tail_bound=_envelope_tail(N, s, growth_exponent(ell, kind)))


def verify_inversion_identity(ell: int, s: float, N: int,
                              tolerance: float | None = None,
                              spf: np.ndarray | None = None) -> VerificationReport:
    """Residual |A_N(s) - zeta(s) B_N(s)| for the Möbius-inversion identity."""
    A = truncated_series(ell, "all", s, N, spf)
    B = truncated_series(ell, "primitive", s, N, spf)
    zs = float(mp.zeta(s))
    residual = abs(A.value - zs * B.value)
    if tolerance is None:
        tolerance = A.tail_bound + zs * B.tail_bound
    return VerificationReport(
        identity="mobius-inversion",
        parameters={"ell": ell, "s": s, "N": N},
        residual=residual, tolerance=float(tolerance),
        passed=residual <= tolerance)


def lambda_truncated(m: int, s: float, N: int) -> SeriesTruncation:
    """Truncated Lambda_m(s) = sum f(n)/n^s over the representable n <= N."""
    if m not in (1, 2, 3):
        raise UnsupportedParameterError(
            f"lambda series supports m in {{1, 2, 3}}, got {m}")
    if s < 2:
        raise DomainError(f"need s >= 2, got {s}")
    mask = census.representation_mask(m, N)
    n = np.nonzero(mask)[0].astype(np.float64)
    value = math.fsum(n ** (-s))
    tail = N ** (1 - s) / (s - 1)
    return SeriesTruncation(N=N, s=s, value=value, tail_bound=tail)


_LAMBDA_CONFIG = {
    # m: (discriminant d, ramified prime q, complement classes)
    1: (-4, 2, (4, (3,))),
    2: (-8, 2, (8, (5, 7))),
    3: (-3, 3, (3, (2,))),
}


def lambda_square_closed_form(m: int, ctx: PrecisionContext):
    """Lambda_m(2)^2 = zeta(2) L_d(2) (1 - q^-2)^-1 prod_complement (1 - p^-4)^-1."""
    if m not in _LAMBDA_CONFIG:
        raise UnsupportedParameterError(
            f"closed form supports m in {{1, 2, 3}}, got {m}")
    d, q, (mod, res) = _LAMBDA_CONFIG[m]
    with ctx.workdps():
        comp, _ = log_euler_product(
            EulerProductSpec(classes(mod, *res), ONE_MINUS_X4), ctx)
        val = (mp.zeta(2) * l_value(2, kronecker_character(d), ctx)
               / (1 - mp.mpf(q) ** -2) * mp.exp(-comp))
        return +val


def verify_lambda_identity(m: int, N: int, ctx: PrecisionContext,
                           s: float = 2.0) -> VerificationReport:
    """Compare the truncated Lambda_m(2)^2 against its Euler-product form."""
    if s != 2.0:
        raise UnsupportedParameterError("the Lambda identity is checked at s = 2")
    trunc = lambda_truncated(m, s, N)
    rhs = lambda_square_closed_form(m, ctx)
    residual = abs(trunc.value ** 2 - float(rhs))
    tolerance = 10 * trunc.tail_bound
    return VerificationReport(
        identity="lambda-square",
        parameters={"m": m, "s": s, "N": N},
        residual=residual, tolerance=tolerance,
        passed=residual <= tolerance)


def nonmultiplicativity_report(m: int, bound: int = 100) -> list[tuple[int, int, int]]:
    """Coprime witness pairs (u, v, uv) with f(uv) = 1 but f(u) f(v) = 0."""
    if m not in (6, -6, 1, 2, 3):
        raise UnsupportedParameterError(
            f"witness search supports m in {{1, 2, 3, 6, -6}}, got {m}")
    if bound < 4:
        return []
    if m > 0:
        mask = census.representation_mask(m, bound)
        f = lambda n: int(mask[n])
    else:
        cache: dict[int, int] = {}

        def f(n: int) -> int:
            if n not in cache:
                cache[n] = census.f_indicator(m, n)
            return cache[n]

    witnesses = []
    for u in range(2, bound // 2 + 1):
        for v in range(u + 1, bound // u + 1):
            if math.gcd(u, v) != 1:
                continue
            if f(u * v) == 1 and f(u) * f(v) == 0:
                witnesses.append((u, v, u * v))
    return witnesses
