"""High-precision L-function machinery.

Dirichlet characters mod m with exact root-of-unity values, L(s, chi) at
integer s >= 2, L(1, chi) via digamma sums, and prime sums over residue
classes accelerated through the Möbius-log expansion

    sum_{p = a mod m} p^{-k}
        = (1/phi(m)) sum_chi conj(chi(a)) sum_j (mu(j)/j) log L(jk, chi^j).

mpmath supplies the underlying real/complex arithmetic (Riemann/Hurwitz
zeta via Euler-Maclaurin, digamma); everything character-exact is kept in
rational root-of-unity form until the final evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .arith import as_factorization, is_prime, kronecker, mobius, totient
from .errors import DomainError, UnsupportedParameterError

# Direct series summation beats the Hurwitz route once terms die this fast.
_DIRECT_SERIES_S = 50

_CHARACTERS_MOD_LIMIT = 120


class PrecisionContext:
    """Target significant digits plus guard digits for all intermediates."""

    def __init__(self, digits: int = 25, guard: int = 15):
        if digits < 10:
            raise DomainError(f"need digits >= 10, got {digits}")
        if guard < 0:
            raise DomainError("guard digits must be non-negative")
        self.digits = digits
        self.guard = guard

    @property
    def dps(self) -> int:
        return self.digits + self.guard

    def workdps(self):
        return mp.workdps(self.dps)

    @property
    def eps(self):
        return mp.mpf(10) ** (-self.digits)

    def __repr__(self):
        return f"PrecisionContext(digits={self.digits}, guard={self.guard})"


@dataclass(frozen=True)
class RootOfUnity:
    """Exact e^(2 pi i k/N), stored as the reduced fraction k/N."""

    k: int
    N: int

    def __post_init__(self):
        if self.N < 1:
            raise DomainError("order must be positive")
        g = math.gcd(self.k % self.N, self.N)
        object.__setattr__(self, "k", (self.k % self.N) // g)
        object.__setattr__(self, "N", self.N // g)

    @classmethod
    def from_fraction(cls, angle: Fraction) -> "RootOfUnity":
        return cls(angle.numerator, angle.denominator)

    @property
    def angle(self) -> Fraction:
        return Fraction(self.k, self.N)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        return RootOfUnity.from_fraction(self.angle + other.angle)

    def __pow__(self, j: int) -> "RootOfUnity":
        return RootOfUnity.from_fraction(j * self.angle)

    def conjugate(self) -> "RootOfUnity":
        return RootOfUnity.from_fraction(-self.angle)

    @property
    def is_real(self) -> bool:
        return self.N in (1, 2)

    def value(self):
        """Numeric value at the ambient mpmath precision."""
        if self.N == 1:
            return mp.mpf(1)
        if self.N == 2:
            return mp.mpf(-1)
        return mp.expjpi(mp.mpf(2 * self.k) / self.N)


class CharacterTable:
    """A Dirichlet character mod m with exact root-of-unity values on units."""

    def __init__(self, modulus: int, values: dict[int, RootOfUnity]):
        self.modulus = modulus
        self.values = dict(values)
        self.is_principal = all(v.N == 1 for v in self.values.values())

    def __call__(self, n: int) -> RootOfUnity | None:
        """Exact value at n, or None when gcd(n, m) > 1 (i.e. chi(n) = 0)."""
        return self.values.get(n % self.modulus)

    def power(self, j: int) -> "CharacterTable":
        return CharacterTable(self.modulus,
                              {r: v ** j for r, v in self.values.items()})

    def conjugate(self) -> "CharacterTable":
        return CharacterTable(self.modulus,
                              {r: v.conjugate() for r, v in self.values.items()})

    @property
    def is_real(self) -> bool:
        return all(v.is_real for v in self.values.values())

    def key(self):
        return (self.modulus,
                tuple(sorted((r, v.k, v.N) for r, v in self.values.items())))

    def __eq__(self, other):
        return isinstance(other, CharacterTable) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def _crt_lift(g: int, q: int, m: int) -> int:
    """Element of (Z/mZ)^* congruent to g mod q and 1 mod m/q."""
    rest = m // q
    if rest == 1:
        return g % m
    inv_q = pow(q, -1, rest)
    inv_rest = pow(rest, -1, q)
    return (g * rest * inv_rest + 1 * q * inv_q) % m


def _multiplicative_order(g: int, m: int) -> int:
    order = 1
    x = g % m
    while x != 1:
        x = x * g % m
        order += 1
    return order


def _primitive_root(q: int, phi_q: int) -> int:
    for g in range(2, q):
        if math.gcd(g, q) == 1 and _multiplicative_order(g, q) == phi_q:
            return g
    raise DomainError(f"no primitive root mod {q}")


def _unit_group_generators(m: int) -> list[tuple[int, int]]:
    """(generator, order) pairs whose direct product is (Z/mZ)^*."""
    gens: list[tuple[int, int]] = []
    for p, r in as_factorization(m):
        q = p ** r
        if p == 2:
            if r == 2:
                gens.append((_crt_lift(3, 4, m), 2))
            elif r >= 3:
                gens.append((_crt_lift(q - 1, q, m), 2))
                gens.append((_crt_lift(3, q, m), 2 ** (r - 2)))
        else:
            g = _primitive_root(q, q - p ** (r - 1))
            gens.append((_crt_lift(g, q, m), p ** (r - 1) * (p - 1)))
    return gens


_characters_cache: dict[int, list[CharacterTable]] = {}


def characters_mod(m: int) -> list[CharacterTable]:
    """All phi(m) Dirichlet characters mod m, principal character first."""
    if m < 1:
        raise DomainError(f"modulus must be positive, got {m}")
    if m > _CHARACTERS_MOD_LIMIT:
        raise UnsupportedParameterError(
            f"characters_mod supports m <= {_CHARACTERS_MOD_LIMIT}, got {m}")
    if m in _characters_cache:
        return _characters_cache[m]
    if m == 1:
        chars = [CharacterTable(1, {0: RootOfUnity(0, 1)})]
        _characters_cache[m] = chars
        return chars
    gens = _unit_group_generators(m)
    orders = [d for _, d in gens]
    # discrete-log table by enumerating all exponent tuples
    dlog: dict[int, tuple[int, ...]] = {}
    exps = [0] * len(gens)
    while True:
        x = 1
        for (g, _), e in zip(gens, exps):
            x = x * pow(g, e, m) % m
        dlog[x] = tuple(exps)
        i = 0
        while i < len(exps):
            exps[i] += 1
            if exps[i] < orders[i]:
                break
            exps[i] = 0
            i += 1
        else:
            break
    assert len(dlog) == totient(m)
    chars = []
    cexps = [0] * len(gens)
    while True:
        values = {}
        for r, logs in dlog.items():
            angle = Fraction(0)
            for c, l, d in zip(cexps, logs, orders):
                angle += Fraction(c * l, d)
            values[r] = RootOfUnity.from_fraction(angle)
        chars.append(CharacterTable(m, values))
        i = 0
        while i < len(cexps):
            cexps[i] += 1
            if cexps[i] < orders[i]:
                break
            cexps[i] = 0
            i += 1
        else:
            break
    chars.sort(key=lambda c: not c.is_principal)
    _characters_cache[m] = chars
    return chars


def kronecker_character(d: int) -> CharacterTable:
    """The real character (d/.) as a table mod |d| (d = 0, 1 mod 4)."""
    if d % 4 not in (0, 1):
        raise DomainError(f"(d/.) has period |d| only for d = 0, 1 mod 4, got {d}")
    m = abs(d)
    values = {}
    for r in range(1, m + 1):
        if math.gcd(r, m) == 1:
            s = kronecker(d, r)
            values[r % m] = RootOfUnity(0, 1) if s == 1 else RootOfUnity(1, 2)
    return CharacterTable(m, values)


def zeta_value(s: int, ctx: PrecisionContext):
    """Riemann zeta at integer s >= 2."""
    if s < 2:
        raise UnsupportedParameterError(f"zeta_value needs s >= 2, got {s}")
    with ctx.workdps():
        return +mp.zeta(s)


def hurwitz_zeta(s: int, a, ctx: PrecisionContext):
    """Hurwitz zeta(s, a) for integer s >= 2 and rational 0 < a <= 1."""
    if s < 2:
        raise DomainError(f"hurwitz_zeta needs s >= 2, got {s}")
    with ctx.workdps():
        if isinstance(a, Fraction):
            av = mp.mpf(a.numerator) / a.denominator
        else:
            av = mp.mpf(a)
        if not 0 < av <= 1:
            raise DomainError(f"need 0 < a <= 1, got {a}")
        return +mp.zeta(s, av)


_l_cache: dict[tuple, object] = {}


def l_value(s: int, chi: CharacterTable, ctx: PrecisionContext):
    """L(s, chi) at integer s >= 2; real output for real characters."""
    if s < 2:
        raise UnsupportedParameterError(f"l_value needs s >= 2, got {s}")
    key = (chi.key(), s, ctx.dps)
    if key in _l_cache:
        return _l_cache[key]
    m = chi.modulus
    with ctx.workdps():
        if chi.is_principal:
            result = mp.zeta(s)
            for p, _ in as_factorization(m):
                result *= 1 - mp.mpf(p) ** (-s)
        elif s >= _DIRECT_SERIES_S:
            # terms below n^-s are dominated; very few needed
            result = mp.mpc(0)
            n = 1
            tiny = mp.mpf(10) ** (-(ctx.dps + 3))
            while mp.mpf(n) ** (-s) > tiny:
                v = chi(n)
                if v is not None:
                    result += v.value() * mp.mpf(n) ** (-s)
                n += 1
        else:
            result = mp.mpc(0)
            for r, v in chi.values.items():
                if r == 0:
                    r = m
                result += v.value() * mp.zeta(s, mp.mpf(r) / m)
            result *= mp.mpf(m) ** (-s)
        if chi.is_real and isinstance(result, mp.mpc):
            result = result.real
        result = +result
    _l_cache[key] = result
    return result


def l_one(chi: CharacterTable, ctx: PrecisionContext):
    """L(1, chi) = -(1/m) sum_r chi(r) digamma(r/m), chi non-principal."""
    if chi.is_principal:
        raise DomainError("L(1, chi) has a pole at the principal character")
    m = chi.modulus
    with ctx.workdps():
        total = mp.mpc(0)
        for r, v in chi.values.items():
            if r == 0:
                r = m
            total += v.value() * mp.digamma(mp.mpf(r) / m)
        result = -total / m
        if chi.is_real:
            result = result.real
        return +result


def _log1p(u):
    """log(1 + u) without cancellation for tiny u (principal branch)."""
    if mp.fabs(u) > mp.mpf("1e-8"):
        return mp.log(1 + u)
    total = mp.mpf(0) * u
    term = +u
    j = 1
    tiny = mp.fabs(u) * mp.mpf(10) ** (-(mp.mp.dps + 2))
    while mp.fabs(term) > tiny:
        total += term / j if j % 2 else -term / j
        term *= u
        j += 1
    return total


def _smallest_coprime_prime(m: int) -> int:
    p = 2
    while m % p == 0:
        p += 1
        while not is_prime(p):
            p += 1
    return p


def _log_zeta(s: int, ctx: PrecisionContext):
    """log zeta(s), accurate relative to its own scale 2^-s at large s."""
    if s < 20:
        return mp.log(mp.zeta(s))
    # zeta(s) - 1 summed term by term, then log1p
    zm1 = mp.mpf(0)
    n = 2
    tiny = mp.mpf(2) ** (-s) * mp.mpf(10) ** (-(ctx.dps + 3))
    while mp.mpf(n) ** (-s) > tiny:
        zm1 += mp.mpf(n) ** (-s)
        n += 1
    return _log1p(zm1)


_logl_cache: dict[tuple, object] = {}


def _log_l(s: int, chi: CharacterTable, ctx: PrecisionContext):
    """log L(s, chi) to full relative precision at its own (tiny) scale.

    For large s the value is 1 + O(q^-s); computing L first and taking the
    log would wipe out the perturbation, so L - 1 is summed directly.
    """
    key = (chi.key(), s, ctx.dps)
    if key in _logl_cache:
        return _logl_cache[key]
    m = chi.modulus
    with ctx.workdps():
        q = _smallest_coprime_prime(m)
        if mp.mpf(q) ** (-s) < mp.mpf("1e-6"):
            # L - 1 at its own scale q^-s; going through L itself would
            # absorb the perturbation into the leading 1
            u = mp.mpc(0)
            n = q
            tiny = mp.mpf(q) ** (-s) * mp.mpf(10) ** (-(ctx.dps + 3))
            while mp.mpf(n) ** (-s) > tiny:
                v = chi(n)
                if v is not None and n > 1:
                    u += v.value() * mp.mpf(n) ** (-s)
                n += 1
            result = _log1p(u)
        elif chi.is_principal:
            result = _log_zeta(s, ctx)
            for p, _ in as_factorization(m):
                result += _log1p(-mp.mpf(p) ** (-s))
        else:
            result = mp.log(l_value(s, chi, ctx))
        if chi.is_real and isinstance(result, mp.mpc):
            result = result.real
        result = +result
    _logl_cache[key] = result
    return result


def _prime_power_sum(chi: CharacterTable, k: int, k_stop: int,
                     ctx: PrecisionContext):
    """P_chi(k) = sum_p chi(p) p^-k via the Möbius-log expansion."""
    total = mp.mpc(0)
    j = 1
    while j == 1 or j * k <= k_stop:
        mu = mobius(j)
        if mu:
            total += mp.mpf(mu) / j * _log_l(j * k, chi.power(j), ctx)
        j += 1
    return total


_pcs_cache: dict[tuple, object] = {}


def prime_class_sum(k: int, m: int, S, ctx: PrecisionContext):
    """sum of p^-k over primes p not dividing m with p mod m in S.

    m = 1 (with S = {0}) gives the prime zeta function P(k).
    """
    if k < 2:
        raise DomainError(f"prime_class_sum needs k >= 2, got {k}")
    residues = frozenset(a % m for a in S)
    if not residues:
        raise DomainError("residue set must be non-empty")
    key = (k, m, residues, ctx.dps)
    if key in _pcs_cache:
        return _pcs_cache[key]
    with ctx.workdps():
        # |log L(jk, .)| <= 2^(1-jk); the cutoff is taken well below working
        # precision because callers may scale these sums by large factors
        k_stop = int(2 * ctx.dps * math.log2(10)) + 2
        if m == 1:
            total = mp.mpf(0)
            j = 1
            while j == 1 or j * k <= k_stop:
                mu = mobius(j)
                if mu:
                    total += mp.mpf(mu) / j * _log_zeta(j * k, ctx)
                j += 1
            result = +total
        else:
            for a in residues:
                if math.gcd(a, m) != 1:
                    raise DomainError(f"residue {a} not coprime to {m}")
            total = mp.mpc(0)
            for chi in characters_mod(m):
                weight = mp.mpc(0)
                for a in residues:
                    weight += chi(a).conjugate().value()
                if mp.fabs(weight) < mp.mpf(10) ** (-(ctx.dps - 2)):
                    continue
                total += weight * _prime_power_sum(chi, k, k_stop, ctx)
            total /= totient(m)
            if mp.fabs(total.imag) > mp.mpf(10) ** (-(ctx.digits - 2)):
                raise DomainError("class sum came out non-real; bad residue set?")
            result = +total.real
    _pcs_cache[key] = result
    return result
