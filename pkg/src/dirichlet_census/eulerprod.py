"""Accelerated Euler products over primes in residue classes.

A local factor F(x) (x = 1/p) is expanded as log F(x) = sum e_k x^k with
exact rational e_k; the product over a residue class then collapses to
sum_k e_k * (class prime sum at exponent k), each class sum computed to
full precision via logarithms of L-functions.  On top of this sit the
leading coefficients (cubic/quartic/octic), the Landau-Ramanujan
constant, the kappa_m family, and the numerical residue-identity checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .arith import is_prime
from .errors import (ConsistencyError, DomainError, UnsupportedParameterError)
from .lfun import (PrecisionContext, _smallest_coprime_prime,
                   kronecker_character, l_one, prime_class_sum)


@dataclass(frozen=True)
class LocalFactor:
    """Rational per-prime factor F(x) = numer(x)/denom(x) with F(0) = 1."""

    numer: tuple[int, ...]
    denom: tuple[int, ...] = (1,)

    def __post_init__(self):
        if not self.numer or self.numer[0] != 1 or self.denom[0] != 1:
            raise DomainError("local factor must have F(0) = 1")
        # crude positivity check for the denominator on (0, 1/2]
        for i in range(1, 101):
            x = i / 200.0
            if self._eval_poly(self.denom, x) <= 0:
                raise DomainError("denominator vanishes on (0, 1/2]")

    @staticmethod
    def _eval_poly(coeffs, x: float) -> float:
        acc = 0.0
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    def value_at_prime(self, p: int) -> Fraction:
        """Exact F(1/p)."""
        x = Fraction(1, p)
        num = sum(c * x ** i for i, c in enumerate(self.numer))
        den = sum(c * x ** i for i, c in enumerate(self.denom))
        return num / den


@dataclass(frozen=True)
class ResidueClassSet:
    """Residues coprime to the modulus, reduced and deduplicated."""

    modulus: int
    residues: frozenset[int]

    def __post_init__(self):
        if self.modulus < 1:
            raise DomainError("modulus must be positive")
        reduced = frozenset(a % self.modulus for a in self.residues)
        if not reduced:
            raise DomainError("residue set must be non-empty")
        for a in reduced:
            if self.modulus > 1 and math.gcd(a, self.modulus) != 1:
                raise DomainError(f"residue {a} not coprime to {self.modulus}")
        object.__setattr__(self, "residues", reduced)


@dataclass(frozen=True)
class EulerProductSpec:
    classes: ResidueClassSet
    factor: LocalFactor
    power: Fraction = Fraction(1)

    def __post_init__(self):
        if self.power == 0:
            raise DomainError("power must be nonzero")


def classes(modulus: int, *residues: int) -> ResidueClassSet:
    return ResidueClassSet(modulus, frozenset(residues))


# Local factors appearing in the b-series decompositions:
#   cubic:   1 - 2/(p(p+1))                       = (1 + x - 2x^2)/(1 + x)
#   quartic: 1 - (5p-3)/(p^2(p+1))                = (1 + x - 5x^2 + 3x^3)/(1 + x)
#   octic:   1 - (27p^5 - 85p^4 + 125p^3 - 99p^2 + 41p - 7)/(p^6(p+1))
ONE_MINUS_X2 = LocalFactor((1, 0, -1))
ONE_MINUS_X4 = LocalFactor((1, 0, 0, 0, -1))
CUBIC_FACTOR = LocalFactor((1, 1, -2), (1, 1))
QUARTIC_FACTOR = LocalFactor((1, 1, -5, 3), (1, 1))
OCTIC_FACTOR = LocalFactor((1, 1, -27, 85, -125, 99, -41, 7), (1, 1))


def _poly_log_series(p: list[Fraction], K: int) -> list[Fraction]:
    """Coefficients of log P(x) through degree K, P(0) = 1."""
    l = [Fraction(0)] * (K + 1)
    for k in range(1, K + 1):
        s = p[k] if k < len(p) else Fraction(0)
        acc = Fraction(0)
        for i in range(1, k):
            j = k - i
            if j < len(p) and p[j]:
                acc += i * l[i] * p[j]
        l[k] = s - acc / k
    return l


def _log_series(factor: LocalFactor, K: int) -> list[Fraction]:
    num = [Fraction(c) for c in factor.numer]
    den = [Fraction(c) for c in factor.denom]
    ln = _poly_log_series(num, K)
    ld = _poly_log_series(den, K)
    return [a - b for a, b in zip(ln, ld)]


def log_local_expansion(factor: LocalFactor, K: int) -> list[Fraction]:
    """Exact coefficients e_2..e_K of log F(x)."""
    if K < 2:
        raise DomainError(f"need K >= 2, got {K}")
    full = _log_series(factor, K)
    return full[2:]


def _smallest_class_prime(cls: ResidueClassSet) -> int:
    p = 2
    while True:
        if is_prime(p) and cls.modulus % p != 0 and p % cls.modulus in cls.residues:
            return p
        p += 1
        if p > 10 ** 6:
            raise DomainError("no prime found in residue classes")


_logprod_cache: dict[tuple, tuple] = {}


def log_euler_product(spec: EulerProductSpec, ctx: PrecisionContext):
    """(log of the class product of F(1/p) at power 1, truncation degree)."""
    key = (spec.factor, spec.classes, ctx.dps)
    if key in _logprod_cache:
        return _logprod_cache[key]
    q = _smallest_class_prime(spec.classes)
    with ctx.workdps():
        threshold = mp.mpf(10) ** (-(ctx.digits + 6))
        K_max = 128
        K = None
        while K_max <= 4096:
            full = _log_series(spec.factor, K_max)
            if full[0] != 0 or full[1] != 0:
                raise UnsupportedParameterError(
                    "local factor must be 1 + O(x^2) for class-sum acceleration")
            bounds = [mp.mpf(0), mp.mpf(0)]
            for k in range(2, K_max + 1):
                e = full[k]
                bounds.append(2 * mp.mpf(abs(e.numerator)) / e.denominator
                              * mp.mpf(q) ** (-k))
            ratio = bounds[-1] / bounds[-2] if bounds[-2] > 0 else mp.mpf(0)
            if bounds[-1] < threshold / 10 and ratio < mp.mpf("0.9"):
                geom_tail = bounds[-1] * ratio / (1 - ratio)
                acc = geom_tail
                K = K_max
                for k in range(K_max, 2, -1):
                    if acc + bounds[k] >= threshold:
                        break
                    acc += bounds[k]
                    K = k - 1
                break
            K_max *= 2
        if K is None:
            raise ConsistencyError("log-series tail does not converge on the class")
        # Individual character sums inside prime_class_sum live at scale
        # q0^-k before the class combination cancels them down to q^-k, so
        # terms with large e_k need extra working digits to keep the
        # product e_k * (class sum) accurate in absolute terms.
        q0 = _smallest_coprime_prime(spec.classes.modulus)
        total = mp.mpf(0)
        for k in range(2, K + 1):
            e = full[k]
            if e:
                # bit_length avoids float overflow on huge exact numerators
                mag = (abs(e.numerator).bit_length()
                       - e.denominator.bit_length() + 1) * math.log10(2)
                extra = max(0, int(mag - k * math.log10(q0)) + 3)
                kctx = ctx if extra == 0 else PrecisionContext(
                    ctx.digits + extra, ctx.guard)
                coeff = mp.mpf(e.numerator) / e.denominator
                total += coeff * prime_class_sum(k, spec.classes.modulus,
                                                 spec.classes.residues, kctx)
        result = (+total, K)
    _logprod_cache[key] = result
    return result


def euler_product(spec: EulerProductSpec, ctx: PrecisionContext):
    """Class product of F(1/p), raised to spec.power, to the target digits."""
    logval, _ = log_euler_product(spec, ctx)
    with ctx.workdps():
        power = mp.mpf(spec.power.numerator) / spec.power.denominator
        return +mp.exp(power * logval)


def _q2(m: int, *residues: int):
    """Shorthand spec: prod over the class of (1 - p^-2)."""
    return EulerProductSpec(classes(m, *residues), ONE_MINUS_X2)


def _clog(ctx: PrecisionContext, factor: LocalFactor, m: int, *residues: int):
    logval, _ = log_euler_product(
        EulerProductSpec(classes(m, *residues), factor), ctx)
    return logval


def landau_ramanujan(ctx: PrecisionContext):
    """K by two independent routes, asserted equal to digits - 3 places.

    route A: 2^(-1/2) prod_{p=3 mod 4} (1 - p^-2)^(-1/2)
    route B: (pi/4)   prod_{p=1 mod 4} (1 - p^-2)^(1/2)
    """
    a, b = landau_ramanujan_routes(ctx)
    with ctx.workdps():
        if mp.fabs(a - b) > mp.mpf(10) ** (-(ctx.digits - 3)):
            raise ConsistencyError("Landau-Ramanujan routes disagree")
        return +a


def landau_ramanujan_routes(ctx: PrecisionContext):
    q3 = _clog(ctx, ONE_MINUS_X2, 4, 3)
    q1 = _clog(ctx, ONE_MINUS_X2, 4, 1)
    with ctx.workdps():
        a = mp.exp(-q3 / 2) / mp.sqrt(2)
        b = mp.pi / 4 * mp.exp(q1 / 2)
        return +a, +b


# L_d(1) closed forms used by the kappa formulas (class-number formula);
# each is cross-checked against the digamma-sum route in l_one.
def l_one_closed_form(d: int, ctx: PrecisionContext):
    with ctx.workdps():
        forms = {
            -3: mp.pi / (3 * mp.sqrt(3)),
            -4: mp.pi / 4,
            8: mp.log(1 + mp.sqrt(2)) / mp.sqrt(2),
            -8: mp.pi / (2 * mp.sqrt(2)),
            12: mp.log(2 + mp.sqrt(3)) / mp.sqrt(3),
            -12: mp.pi / (2 * mp.sqrt(3)),
            20: mp.log(9 + 4 * mp.sqrt(5)) / (2 * mp.sqrt(5)),
            -20: mp.pi / mp.sqrt(5),
            24: mp.log(5 + 2 * mp.sqrt(6)) / mp.sqrt(6),
            -24: mp.pi / mp.sqrt(6),
            28: mp.log(8 + 3 * mp.sqrt(7)) / mp.sqrt(7),
            -28: mp.pi / (2 * mp.sqrt(7)),
        }
        if d not in forms:
            raise UnsupportedParameterError(f"no closed form stored for d = {d}")
        return +forms[d]


def check_l_one(d: int, ctx: PrecisionContext):
    """Closed form of L_d(1) vs the digamma route; ConsistencyError on mismatch."""
    closed = l_one_closed_form(d, ctx)
    direct = l_one(kronecker_character(d), ctx)
    with ctx.workdps():
        if mp.fabs(closed - direct) > mp.mpf(10) ** (-(ctx.digits - 3)):
            raise ConsistencyError(f"L_{d}(1) closed form disagrees with digamma sum")
        return +closed


KAPPA_SUPPORTED = (1, 2, -2, 3, -3, 5, -5, 6, -6, 7, -7)


def kappa_routes(m: int, ctx: PrecisionContext):
    """Both published product forms of kappa_m, for m in {1, 2, -2, 3}."""
    with ctx.workdps():
        lam = mp.log(1 + mp.sqrt(2))
        if m == 1:
            return landau_ramanujan_routes(ctx)
        if m == 2:
            a = mp.mpf(2) ** mp.mpf("-0.25") * mp.exp(-_clog(ctx, ONE_MINUS_X2, 8, 5, 7) / 2)
            b = mp.mpf(2) ** (mp.mpf(-7) / 4) * mp.pi \
                * mp.exp(_clog(ctx, ONE_MINUS_X2, 8, 1, 3) / 2)
            return +a, +b
        if m == -2:
            a = mp.sqrt(mp.sqrt(2) * lam / mp.pi) \
                * mp.exp(-_clog(ctx, ONE_MINUS_X2, 8, 3, 5) / 2)
            b = mp.mpf(2) ** (mp.mpf(-5) / 4) * mp.sqrt(lam * mp.pi) \
                * mp.exp(_clog(ctx, ONE_MINUS_X2, 8, 1, 7) / 2)
            return +a, +b
        if m == 3:
            a = mp.exp(-_clog(ctx, ONE_MINUS_X2, 3, 2) / 2) / mp.sqrt(2 * mp.sqrt(3))
            b = mp.sqrt(2) * mp.mpf(3) ** (mp.mpf(-7) / 4) * mp.pi \
                * mp.exp(_clog(ctx, ONE_MINUS_X2, 3, 1) / 2)
            return +a, +b
    raise UnsupportedParameterError(f"no dual route recorded for m = {m}")


def kappa(m: int, ctx: PrecisionContext):
    """Generalized Landau-Ramanujan constant for x^2 + m y^2."""
    if m not in KAPPA_SUPPORTED:
        raise UnsupportedParameterError(
            f"kappa supports m in {KAPPA_SUPPORTED}, got {m}")
    if m in (1, 2, -2, 3):
        a, b = kappa_routes(m, ctx)
        with ctx.workdps():
            if mp.fabs(a - b) > mp.mpf(10) ** (-(ctx.digits - 3)):
                raise ConsistencyError(f"kappa_{m} routes disagree")
            return +a
    with ctx.workdps():
        if m == -3:
            check_l_one(12, ctx)
            pref = mp.sqrt(mp.sqrt(3) * mp.log(2 + mp.sqrt(3)) / mp.pi) / 2
            cl = _clog(ctx, ONE_MINUS_X2, 12, 5, 7)
        elif m == 5:
            check_l_one(-20, ctx)
            pref = mp.sqrt(mp.sqrt(5) / 2) / 2
            cl = _clog(ctx, ONE_MINUS_X2, 20, 11, 13, 17, 19)
        elif m == -5:
            check_l_one(20, ctx)
            pref = mp.sqrt(mp.sqrt(5) * mp.log(9 + 4 * mp.sqrt(5)) / (3 * mp.pi)) / 2
            cl = _clog(ctx, ONE_MINUS_X2, 5, 2, 3)
        elif m == 6:
            check_l_one(-24, ctx)
            pref = mp.sqrt(mp.sqrt(6) / 2) / 2
            cl = _clog(ctx, ONE_MINUS_X2, 24, 13, 17, 19, 23)
        elif m == -6:
            check_l_one(24, ctx)
            pref = mp.sqrt(mp.sqrt(6) * mp.log(5 + 2 * mp.sqrt(6)) / (2 * mp.pi)) / 2
            cl = _clog(ctx, ONE_MINUS_X2, 24, 7, 11, 13, 17)
        elif m == 7:
            check_l_one(-28, ctx)
            pref = 3 * mp.sqrt(mp.sqrt(7) / 6) / 4
            cl = _clog(ctx, ONE_MINUS_X2, 7, 3, 5, 6)
        elif m == -7:
            check_l_one(28, ctx)
            pref = mp.sqrt(mp.sqrt(7) * mp.log(8 + 3 * mp.sqrt(7)) / (3 * mp.pi)) / 2
            cl = _clog(ctx, ONE_MINUS_X2, 28, 5, 11, 13, 15, 17, 23)
        return +(pref * mp.exp(-cl / 2))


COEFFICIENT_NAMES = ("quadratic", "cubic", "quartic", "octic")


def coefficient_record(name: str, ctx: PrecisionContext) -> dict:
    """Leading asymptotic coefficient plus method metadata."""
    with ctx.workdps():
        if name == "quadratic":
            return {"name": name, "value": +(6 / mp.pi ** 2),
                    "method": "closed form 6/pi^2", "truncation_degree": 0}
        if name == "cubic":
            logg, deg = log_euler_product(
                EulerProductSpec(classes(3, 1), CUBIC_FACTOR), ctx)
            val = 11 * mp.sqrt(3) / (18 * mp.pi) * mp.exp(logg)
            return {"name": name, "value": +val,
                    "method": "accelerated Euler product over p = 1 mod 3",
                    "truncation_degree": deg}
        if name == "quartic":
            K = landau_ramanujan(ctx)
            logg, deg = log_euler_product(
                EulerProductSpec(classes(4, 1), QUARTIC_FACTOR), ctx)
            val = 7 / (16 * mp.pi * K ** 2) * mp.exp(logg)
            return {"name": name, "value": +val,
                    "method": "accelerated Euler product over p = 1 mod 4",
                    "truncation_degree": deg}
        if name == "octic":
            lam = mp.log(1 + mp.sqrt(2))
            s5, d1 = log_euler_product(EulerProductSpec(classes(8, 5), ONE_MINUS_X2), ctx)
            s1, d2 = log_euler_product(EulerProductSpec(classes(8, 1), ONE_MINUS_X2), ctx)
            g5, d3 = log_euler_product(EulerProductSpec(classes(8, 5), QUARTIC_FACTOR), ctx)
            g1, d4 = log_euler_product(EulerProductSpec(classes(8, 1), OCTIC_FACTOR), ctx)
            val = (8 / mp.pi ** 2
                   * (2 * lam) ** mp.mpf("-0.5")
                   * (2 * lam / mp.pi ** 2) ** mp.mpf("1.5")
                   * mp.exp(-s5 - 3 * s1 + g5 + g1))
            return {"name": name, "value": +val,
                    "method": "assembled from the mod-8 class decomposition",
                    "truncation_degree": max(d1, d2, d3, d4)}
    raise UnsupportedParameterError(
        f"coefficient supports {COEFFICIENT_NAMES}, got {name!r}")


def coefficient(name: str, ctx: PrecisionContext):
    return coefficient_record(name, ctx)["value"]


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    lhs: float
    rhs: float
    residual: float
    tolerance: float
    passed: bool

    def to_dict(self) -> dict:
        return {"identity": self.identity, "parameters": {},
                "residual": self.residual, "tolerance": self.tolerance,
                "pass": self.passed}


def verify_residue_formulas(ctx: PrecisionContext) -> list[IdentityReport]:
    """Numerically verify the residue identities linking the kappa family
    to the class products; every residual should sit below 10^-(digits-5).
    """
    reports: list[IdentityReport] = []
    with ctx.workdps():
        tol = mp.mpf(10) ** (-(ctx.digits - 5))
        lam = mp.log(1 + mp.sqrt(2))
        k1 = kappa(1, ctx)
        k2 = kappa(2, ctx)
        km2 = kappa(-2, ctx)
        k3 = kappa(3, ctx)
        km5 = kappa(-5, ctx)
        k7 = kappa(7, ctx)

        def add(name, lhs, rhs):
            res = mp.fabs(lhs - rhs)
            reports.append(IdentityReport(
                identity=name, lhs=float(lhs), rhs=float(rhs),
                residual=float(res), tolerance=float(tol),
                passed=bool(res <= tol)))

        # residue of prod_{p=1 mod 3} (1 - p^-s)^-2 at s = 1
        lm3 = check_l_one(-3, ctx)
        add("cubic-residue",
            lm3 ** 2 / (mp.pi * k3 ** 2),
            mp.sqrt(3) / (2 * mp.pi) * mp.exp(-_clog(ctx, ONE_MINUS_X2, 3, 1)))
        # residue of prod_{p=1 mod 4} (1 - p^-s)^-2 at s = 1
        check_l_one(-4, ctx)
        add("quartic-residue",
            mp.pi / (16 * k1 ** 2),
            mp.exp(-_clog(ctx, ONE_MINUS_X2, 4, 1)) / mp.pi)
        # the three two-class limits of the mod-8 chain
        lim13 = mp.pi / (8 * k2 ** 2)
        lim15 = mp.pi / (16 * k1 ** 2)
        lim17 = lam ** 2 / (2 * mp.pi * km2 ** 2)
        check_l_one(-8, ctx)
        check_l_one(8, ctx)
        add("mod8-two-class-13",
            lim13,
            mp.sqrt(2) / mp.pi * mp.exp(-_clog(ctx, ONE_MINUS_X2, 8, 1, 3)))
        add("mod8-two-class-17",
            lim17,
            2 * mp.sqrt(2) * lam / mp.pi ** 2
            * mp.exp(-_clog(ctx, ONE_MINUS_X2, 8, 1, 7)))
        # odd-prime zeta quotient: prod over all odd p of (1 - p^-2)^-1 = pi^2/8
        add("odd-prime-zeta-quotient",
            mp.exp(-_clog(ctx, ONE_MINUS_X2, 8, 1, 3, 5, 7)),
            mp.pi ** 2 / 8)
        # isolation of p = 1 mod 8 (formula 4) and its consequence (formula 3)
        lim1 = 4 * lim13 * lim15 * lim17
        add("octic-residue-1mod8",
            lim1,
            2 * lam / mp.pi ** 2 * mp.exp(-2 * _clog(ctx, ONE_MINUS_X2, 8, 1)))
        add("octic-residue-5mod8",
            lim15 ** 2 / lim1,
            mp.exp(-2 * _clog(ctx, ONE_MINUS_X2, 8, 5)) / (2 * lam))
        # product form of the isolation chain itself
        chain_lhs = (4 / mp.pi ** 4 * lam * (mp.pi ** 2 / 8)
                     * mp.exp(-2 * _clog(ctx, ONE_MINUS_X2, 8, 1)))
        chain_rhs = (mp.sqrt(2) / mp.pi * mp.exp(-_clog(ctx, ONE_MINUS_X2, 8, 1, 3))
                     * (1 / mp.pi) * mp.exp(-_clog(ctx, ONE_MINUS_X2, 8, 1, 5))
                     * 2 * mp.sqrt(2) * lam / mp.pi ** 2
                     * mp.exp(-_clog(ctx, ONE_MINUS_X2, 8, 1, 7)))
        add("mod8-isolation-chain", chain_lhs, chain_rhs)
        # partial limits for the mod 5 and mod 7 classes
        l945 = mp.log(9 + 4 * mp.sqrt(5))
        add("mod5-partial-limit",
            l945 ** 2 / (45 * mp.pi * km5 ** 2),
            mp.sqrt(5) * l945 / (3 * mp.pi ** 2)
            * mp.exp(-_clog(ctx, ONE_MINUS_X2, 5, 1, 4)))
        add("mod7-partial-limit",
            mp.mpf(9) / 112 / k7 ** 2,
            3 * mp.sqrt(7) / (4 * mp.pi ** 2)
            * mp.exp(-_clog(ctx, ONE_MINUS_X2, 7, 1, 2, 4)))
    return reports
