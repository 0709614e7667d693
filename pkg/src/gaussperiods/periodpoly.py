"""Construction of the period polynomial psi_e(x) = prod_k (x - eta_k).

Three routes are provided: the fast period-basis construction used
everywhere, a naive dense-cyclotomic construction, and a floating-point
construction; the last two exist purely as independent cross-checks.
"""

import math
from dataclasses import dataclass

import mpmath

from .errors import DomainError, IntegrityError, PrecisionError, UnsupportedRangeError
from .period_core import PeriodElem, _context, eta_column, mul_by_eta, period_trace


@dataclass(frozen=True)
class IntPoly:
    """Monic univariate polynomial with integer coefficients.

    coeffs is ascending: coeffs[i] is the coefficient of x^i.
    """

    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) < 2:
            raise DomainError("degree must be at least 1")
        if self.coeffs[-1] != 1:
            raise DomainError("polynomial must be monic")

    @classmethod
    def from_descending(cls, coeffs):
        return cls(tuple(reversed(tuple(coeffs))))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coeffs_descending(self):
        return tuple(reversed(self.coeffs))

    def derivative(self):
        # not monic in general; returned as a plain ascending tuple
        return tuple(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        return ", ".join(str(c) for c in self.coeffs_descending())


def period_polynomial(cfg):
    """psi_e for cfg, built by multiplying one linear factor (x - eta_k)
    at a time while keeping every partial-product coefficient as an exact
    PeriodElem.

    Every partial-product coefficient is kept in the canonical form of
    PeriodElem.canonical (the spanning set {1, eta_0..eta_{e-1}} is
    redundant, since the periods sum to -1). The final coefficients must
    then be pure integers (zero period part); this is asserted rather
    than assumed.
    """
    e = cfg.e
    if e == 1:
        # single period = sum of all q-th roots except 1 = -1
        return IntPoly((1, 1))
    if cfg.f == 1:
        # each period is a single primitive q-th root, so psi is the
        # q-th cyclotomic polynomial 1 + x + ... + x^(q-1)
        return IntPoly((1,) * cfg.q)
    ps, cn = _context(cfg)
    coeffs = [PeriodElem.integer(1, e)]  # the constant polynomial 1
    for k in range(e):
        rows, n0col = eta_column(cn, k)
        prev = [mul_by_eta(c, k, cn, rows, n0col) for c in coeffs]
        nxt = [-prev[0]]
        for j in range(1, len(coeffs)):
            nxt.append(coeffs[j - 1] - prev[j])
        nxt.append(coeffs[-1])
        coeffs = [c.canonical() for c in nxt]
    out = []
    for c in coeffs:
        if not c.is_integer():
            raise IntegrityError("non-integer coefficient in period polynomial")
        out.append(c.z)
    return IntPoly(tuple(out))


_DENSE_LIMIT = 1000


def period_polynomial_dense(cfg):
    """Independent oracle: same polynomial, computed in the dense
    length-q cyclotomic representation with no shortcuts. Intended for
    q <= 1000 only."""
    q, e = cfg.q, cfg.e
    if q > _DENSE_LIMIT:
        raise UnsupportedRangeError("dense construction limited to q <= 1000")
    ps, _ = _context(cfg)

    def times_eta(vec, exps):
        out = [0] * q
        for a in exps:
            rot = vec[-a:] + vec[:-a]
            out = [x + y for x, y in zip(out, rot)]
        return out

    one = [0] * q
    one[0] = 1
    coeffs = [one]
    for k in range(e):
        exps = ps.classes[k]
        prev = [times_eta(c, exps) for c in coeffs]
        nxt = [[-x for x in prev[0]]]
        for j in range(1, len(coeffs)):
            nxt.append([x - y for x, y in zip(coeffs[j - 1], prev[j])])
        nxt.append(coeffs[-1])
        coeffs = nxt
    out = []
    for vec in coeffs:
        tail = vec[1]
        if any(x != tail for x in vec[2:]):
            raise IntegrityError("non-constant tail in dense coefficient")
        # sum of all q-th roots of unity is 0, so r^1 + ... + r^(q-1) = -1
        out.append(vec[0] - tail)
    return IntPoly(tuple(out))


def period_polynomial_float(cfg, precision_bits):
    """Floating-point oracle at a fixed precision.

    Evaluates the periods from r = exp(2*pi*i/q), forms the product of
    linear factors, and rounds coefficients to the nearest integers.
    Returns (rounded ascending coefficients, max rounding residual);
    acceptance is the caller's decision.
    """
    q, e = cfg.q, cfg.e
    ps, _ = _context(cfg)
    with mpmath.workprec(precision_bits):
        periods = []
        for cls in ps.classes:
            s = mpmath.mpc(0)
            for a in cls:
                s += mpmath.expjpi(mpmath.mpf(2 * a) / q)
            periods.append(s)
        coeffs = [mpmath.mpc(1)]
        for eta in periods:
            nxt = [-coeffs[0] * eta]
            for j in range(1, len(coeffs)):
                nxt.append(coeffs[j - 1] - coeffs[j] * eta)
            nxt.append(coeffs[-1])
            coeffs = nxt
        rounded = []
        residual = mpmath.mpf(0)
        for c in coeffs:
            n = int(mpmath.nint(c.real))
            residual = max(residual, abs(c.real - n), abs(c.imag))
            rounded.append(n)
    return rounded, float(residual)


def float_oracle_polynomial(cfg, max_escalations=3):
    """Escalation loop around period_polynomial_float: start at
    64 + ceil(2.5 * e * log2(q)) bits, double while the residual is not
    clearly below 1/4, give up after max_escalations doublings."""
    bits = 64 + math.ceil(2.5 * cfg.e * math.log2(cfg.q))
    for _ in range(max_escalations + 1):
        rounded, residual = period_polynomial_float(cfg, bits)
        if residual < 0.25:
            return IntPoly(tuple(rounded)), residual
        bits *= 2
    raise PrecisionError(
        f"insufficient precision for (q={cfg.q}, e={cfg.e}) at {bits} bits")


def power_sums(cfg, m_max):
    """Power sums p_m = sum_i eta_i^m = trace(eta_0^m) for m = 1..m_max."""
    if m_max < 1:
        raise DomainError("m_max must be >= 1")
    e = cfg.e
    if e == 1:
        return [(-1) ** m for m in range(1, m_max + 1)]
    ps, cn = _context(cfg)
    rows, n0col = eta_column(cn, 0)
    acc = PeriodElem.eta(0, e)
    sums = [period_trace(acc)]
    for _ in range(m_max - 1):
        acc = mul_by_eta(acc, 0, cn, rows, n0col)
        sums.append(period_trace(acc))
    return sums
