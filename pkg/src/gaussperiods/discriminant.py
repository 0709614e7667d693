"""Exact discriminants, Sturm real-root counts and per-field reports.

The ordinary discriminant of psi_e is computed from the resultant
Res(psi, psi') via word-size modular images combined by CRT; the field
discriminant is the closed form +/- q^(e-1) with the sign determined by
(e-1) mod 4 and the parity of f. Their quotient is k^2 for the index k
of the order generated by a period.
"""

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DomainError, IntegrityError
from .numtheory import is_prime
from .periodpoly import IntPoly, period_polynomial

# ---------------------------------------------------------------------------
# modular resultant / discriminant


def _word_primes():
    """62-bit primes, descending from 2^62."""
    n = (1 << 62) - 1
    while True:
        if is_prime(n):
            yield n
        n -= 2


def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_rem_mod(a, b, m):
    """Remainder of a by b mod m; lists ascending, b nonzero mod m."""
    r = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, m)
    while len(r) - 1 >= db and _trim(r):
        t = r[-1] * inv % m
        shift = len(r) - 1 - db
        for i in range(db + 1):
            r[shift + i] = (r[shift + i] - t * b[i]) % m
        r.pop()
        _trim(r)
    return r


def _resultant_mod(a, b, m):
    """Res(a, b) mod m via the Euclidean recurrence."""
    a = _trim([c % m for c in a])
    b = _trim([c % m for c in b])
    res = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return res * pow(b[0], da, m) % m
        r = _poly_rem_mod(a, b, m)
        if not r:
            return 0
        dr = len(r) - 1
        res = res * pow(b[-1], da - dr, m) % m
        if (da * db) % 2:
            res = (-res) % m
        a, b = b, r


def _resultant_crt(p, dp):
    """Res(p, p') for a monic p by CRT over word-size primes.

    The number of moduli is driven by the Hadamard bound on the Sylvester
    determinant, plus one extra modulus of slack; the lift is symmetric so
    the sign comes out exactly.
    """
    dp_deg = len(dp) - 1
    p_deg = len(p) - 1
    s1 = sum(c * c for c in p)
    s2 = sum(c * c for c in dp)
    bound = math.isqrt(s1 ** dp_deg * s2 ** p_deg) + 1
    residues, moduli = [], []
    modulus = 1
    gen = _word_primes()
    need = 2 * bound
    while modulus <= need:
        m = next(gen)
        if dp[-1] % m == 0:  # modulus would drop the degree of p'
            continue
        residues.append(_resultant_mod(p, dp, m))
        moduli.append(m)
        modulus *= m
    while True:  # one extra modulus of slack
        m = next(gen)
        if dp[-1] % m:
            break
    residues.append(_resultant_mod(p, dp, m))
    moduli.append(m)
    modulus *= m
    x = 0
    for r, m in zip(residues, moduli):
        q = modulus // m
        x = (x + r * q * pow(q, -1, m)) % modulus
    if x > modulus // 2:
        x -= modulus
    return x


def poly_discriminant(p):
    """Ordinary discriminant of the monic polynomial p."""
    e = p.degree
    if e < 1:
        raise DomainError("degree must be at least 1")
    dp = list(p.derivative())
    res = _resultant_crt(list(p.coeffs), dp)
    return -res if (e * (e - 1) // 2) % 2 else res


# ---------------------------------------------------------------------------
# field discriminant


@dataclass(frozen=True)
class SignedPrimePower:
    """Exact representation of a field discriminant +/- q^(e-1)."""

    sign: int
    base: int
    exponent: int

    def value(self):
        return self.sign * self.base ** self.exponent

    def __str__(self):
        s = "-" if self.sign < 0 else ""
        return f"{s}{self.base}^{self.exponent}"


def field_discriminant(cfg):
    """Field discriminant of the degree-e subfield: magnitude q^(e-1),
    negative exactly when (e-1) mod 4 = 1 and f is odd."""
    sign = -1 if (cfg.e - 1) % 4 == 1 and cfg.f % 2 == 1 else 1
    return SignedPrimePower(sign, cfg.q, cfg.e - 1)


def field_discriminant_by_pairs(cfg, n_pairs):
    """Same discriminant via the complex-pair count: sign (-1)^n_pairs
    when (e-1) mod 4 = 1, positive otherwise."""
    if n_pairs < 0 or 2 * n_pairs > cfg.e:
        raise DomainError("n_pairs must satisfy 0 <= n_pairs <= e/2")
    sign = (-1) ** n_pairs if (cfg.e - 1) % 4 == 1 else 1
    return SignedPrimePower(sign, cfg.q, cfg.e - 1)


# ---------------------------------------------------------------------------
# Sturm real-root counting


def _primitive(c):
    """Scale a rational coefficient list to a primitive integer list,
    preserving sign."""
    den = 1
    for x in c:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in c]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    return [x // g for x in ints] if g > 1 else ints


def _rational_rem(a, b):
    """Polynomial remainder of a by b over the rationals (ascending)."""
    r = [Fraction(x) for x in a]
    db = len(b) - 1
    lcb = Fraction(b[-1])
    while len(r) - 1 >= db:
        t = r[-1] / lcb
        shift = len(r) - 1 - db
        for i in range(db + 1):
            r[shift + i] -= t * b[i]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def _sturm_chain(coeffs):
    chain = [list(coeffs)]
    d = [i * c for i, c in enumerate(coeffs)][1:]
    chain.append(d)
    while True:
        r = _rational_rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append(_primitive([-x for x in r]))
    return chain


def _variations(signs):
    v = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


def real_root_count(p):
    """Number of real roots of the squarefree polynomial p, by a Sturm
    sequence over exact arithmetic evaluated at -inf/+inf."""
    chain = _sturm_chain(p.coeffs)
    if len(chain[-1]) > 1:
        raise DomainError("polynomial is not squarefree")
    at_pos, at_neg = [], []
    for poly in chain:
        lc = poly[-1]
        deg = len(poly) - 1
        s = 1 if lc > 0 else -1
        at_pos.append(s)
        at_neg.append(s if deg % 2 == 0 else -s)
    return _variations(at_neg) - _variations(at_pos)


# ---------------------------------------------------------------------------
# index and assembled report


def index_k(poly_disc, field_disc):
    """Exact k with poly_disc = k^2 * field_disc; integrity-checked."""
    fd = field_disc.value()
    if fd == 0 or poly_disc % fd != 0:
        raise IntegrityError("field discriminant does not divide poly discriminant")
    quot = poly_disc // fd
    if quot <= 0:
        raise IntegrityError("discriminant quotient is not positive")
    k = math.isqrt(quot)
    if k * k != quot:
        raise IntegrityError("discriminant quotient is not a perfect square")
    return k


@dataclass(frozen=True)
class DiscriminantReport:
    cfg: object
    poly: IntPoly
    poly_disc: int
    field_disc: SignedPrimePower
    index_k: int
    n_real: Optional[int]
    n_pairs: Optional[int]
    monogenic: bool


_DEFAULT_STURM_MAX_E = 31
_STURM_MAX_Q = 2000


def _sturm_allowed(cfg, force_sturm, sturm_max_e):
    if force_sturm:
        return True
    if sturm_max_e is None:
        sturm_max_e = int(os.environ.get("GAUSSPERIOD_STURM_MAX_E",
                                         _DEFAULT_STURM_MAX_E))
    return cfg.e <= sturm_max_e or cfg.q <= _STURM_MAX_Q


def analyze(cfg, force_sturm=False, sturm_max_e=None):
    """Full report for one (q, e): polynomial, both discriminants, index,
    real/complex root counts and monogenicity.

    Sturm counting is skipped (n_real/n_pairs None) above the size policy
    unless forced; when it runs, agreement of the two field-discriminant
    sign rules is asserted.
    """
    poly = period_polynomial(cfg)
    pdisc = poly_discriminant(poly)
    fdisc = field_discriminant(cfg)
    k = index_k(pdisc, fdisc)
    n_real = n_pairs = None
    if _sturm_allowed(cfg, force_sturm, sturm_max_e):
        n_real = real_root_count(poly)
        if (cfg.e - n_real) % 2:
            raise IntegrityError("real root count has wrong parity")
        n_pairs = (cfg.e - n_real) // 2
        if field_discriminant_by_pairs(cfg, n_pairs) != fdisc:
            raise IntegrityError("pair-count sign rule disagrees with parity rule")
    return DiscriminantReport(cfg, poly, pdisc, fdisc, k, n_real, n_pairs,
                              monogenic=(k == 1))
