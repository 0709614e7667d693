"""Primality, factorization, primitive roots and auxiliary-prime enumeration.

The rest of the package works with an AuxConfig: an odd prime q (the
cyclotomic conductor), a degree e dividing q-1, the cofactor f = (q-1)/e,
and the smallest primitive root g mod q.
"""

from dataclasses import dataclass

from .errors import DomainError, UnsupportedRangeError

# Deterministic Miller-Rabin witnesses for n < 3.3 * 10^24, which covers
# the supported range (n < 2^63) with a wide margin.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

_RANGE_LIMIT = 1 << 63


def is_prime(n):
    """Deterministic primality test for 0 <= n < 2^63."""
    if n < 0 or n >= _RANGE_LIMIT:
        raise UnsupportedRangeError("n out of supported range [0, 2^63)")
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factor(n):
    """Trial-division factorization; returns a sorted list of primes with
    multiplicity whose product is n."""
    if n < 2:
        raise DomainError("factor requires n >= 2")
    if n >= _RANGE_LIMIT:
        raise UnsupportedRangeError("n out of supported range")
    out = []
    for p in (2, 3):
        while n % p == 0:
            out.append(p)
            n //= p
    d = 5
    while d * d <= n:
        for p in (d, d + 2):
            while n % p == 0:
                out.append(p)
                n //= p
        d += 6
    if n > 1:
        out.append(n)
    return out


def mult_order(a, q):
    """Multiplicative order of a mod q (q prime, gcd(a, q) = 1)."""
    order = q - 1
    for p in set(factor(q - 1)):
        while order % p == 0 and pow(a, order // p, q) == 1:
            order //= p
    return order


def primitive_root(q):
    """Smallest primitive root g >= 2 of the odd prime q."""
    if not is_prime(q) or q < 3:
        raise DomainError("q must be an odd prime")
    checks = [(q - 1) // p for p in set(factor(q - 1))]
    g = 2
    while True:
        if all(pow(g, c, q) != 1 for c in checks):
            return g
        g += 1


@dataclass(frozen=True)
class AuxConfig:
    """One (q, e) instance: cyclotomic prime q, subfield degree e,
    cofactor f = (q-1)/e, primitive root g."""

    q: int
    e: int
    f: int
    g: int

    def __post_init__(self):
        if not is_prime(self.q) or self.q < 3:
            raise DomainError("q must be an odd prime")
        if self.e < 1 or self.f < 1 or self.e * self.f != self.q - 1:
            raise DomainError("need e*f = q-1 with e, f >= 1")
        if mult_order(self.g, self.q) != self.q - 1:
            raise DomainError("g is not a primitive root mod q")

    @classmethod
    def for_pair(cls, q, e, g=None):
        """Build the config for (q, e); picks the smallest primitive root
        unless g is given explicitly."""
        if not is_prime(q) or q < 3:
            raise DomainError("q must be an odd prime")
        if e < 1 or (q - 1) % e != 0:
            raise DomainError("degree must divide q-1")
        return cls(q, e, (q - 1) // e, primitive_root(q) if g is None else g)


def aux_primes(degree, count, totally_real=True):
    """First `count` primes q with degree | q-1, in increasing order.

    With totally_real=True additionally require f = (q-1)/degree even,
    which selects the subfields whose minimal polynomials have only real
    roots. For odd degree the parity condition is automatic.
    """
    if degree < 1 or count < 1:
        raise DomainError("degree and count must be positive")
    out = []
    q = degree + 1
    while len(out) < count:
        if (q - 1) % degree == 0:
            f = (q - 1) // degree
            if (not totally_real or f % 2 == 0) and q > 2 and is_prime(q):
                out.append(AuxConfig(q, degree, f, primitive_root(q)))
        q += 1
    return out
