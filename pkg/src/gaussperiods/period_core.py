"""Period systems and the exact multiplication structure of the period ring.

A PeriodSystem partitions the exponents 1..q-1 of the q-th roots of unity
into e classes; the sum of the roots in class i is the period eta_i. The
CycNumbers table holds the classical cyclotomic numbers: the integer
multiplicities expressing a product eta_i * eta_j as a combination of 1
and the periods. Everything downstream multiplies in this basis.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError
from .numtheory import AuxConfig


@dataclass(frozen=True)
class PeriodSystem:
    cfg: AuxConfig
    # classes[i][k] = g^(k*e+i) mod q; class_of[a] = i for a in class i
    classes: tuple
    class_of: tuple

    @property
    def q(self):
        return self.cfg.q

    @property
    def e(self):
        return self.cfg.e

    @property
    def f(self):
        return self.cfg.f


def period_classes(cfg):
    """Partition {1..q-1} into the e period classes of cfg."""
    q, e, f, g = cfg.q, cfg.e, cfg.f, cfg.g
    ge = pow(g, e, q)
    classes = []
    class_of = [-1] * q
    for i in range(e):
        a = pow(g, i, q)
        cls = []
        for _ in range(f):
            cls.append(a)
            class_of[a] = i
            a = a * ge % q
        classes.append(tuple(cls))
    return PeriodSystem(cfg, tuple(classes), tuple(class_of))


@dataclass(frozen=True)
class CycNumbers:
    """Structure constants of the period ring.

    eta_i * eta_j = n0[i][j] * 1 + sum_k nk[i][j][k] * eta_k.
    """

    system: PeriodSystem
    n0: tuple
    nk: tuple

    @property
    def e(self):
        return self.system.e


def structure_constants(ps):
    """Cyclotomic numbers for ps.

    The pair count #{(a,b) in class_i x class_j : a+b = s mod q} is
    constant as s runs over one class, so nk[i][j][k] is obtained by
    counting, for a fixed representative s_k of class k, the a in class_i
    with s_k - a in class_j. This is an O(e^2 * f) pass. The 1-component
    n0[i][j] is f exactly when class j is the negation of class i.
    """
    q, e = ps.q, ps.e
    class_of = ps.class_of
    reps = [cls[0] for cls in ps.classes]
    neg_class = [class_of[q - reps[i]] for i in range(e)]
    n0 = [[0] * e for _ in range(e)]
    nk = [[[0] * e for _ in range(e)] for _ in range(e)]
    for i in range(e):
        n0[i][neg_class[i]] = ps.f
        nki = nk[i]
        for a in ps.classes[i]:
            for k in range(e):
                s = reps[k] - a
                if s != 0 and s != -q:
                    j = class_of[s % q]
                    nki[j][k] += 1
    return CycNumbers(
        ps,
        tuple(tuple(row) for row in n0),
        tuple(tuple(tuple(r) for r in plane) for plane in nk),
    )


@dataclass(frozen=True)
class PeriodElem:
    """Exact element z*1 + sum_k v[k]*eta_k of the period ring."""

    z: int
    v: tuple

    @classmethod
    def integer(cls, z, e):
        return cls(z, (0,) * e)

    @classmethod
    def eta(cls, k, e):
        return cls(0, tuple(1 if i == k else 0 for i in range(e)))

    def __add__(self, other):
        return PeriodElem(self.z + other.z,
                          tuple(a + b for a, b in zip(self.v, other.v)))

    def __sub__(self, other):
        return PeriodElem(self.z - other.z,
                          tuple(a - b for a, b in zip(self.v, other.v)))

    def __neg__(self):
        return PeriodElem(-self.z, tuple(-a for a in self.v))

    def is_integer(self):
        return all(c == 0 for c in self.v)

    def canonical(self):
        """Value-preserving normal form.

        (z, v) and (z - c, v - c*ones) represent the same element because
        the periods sum to -1; subtracting c = min(v) makes the period
        part canonical (and exactly zero for rational elements).
        """
        c = min(self.v)
        if c == 0:
            return self
        return PeriodElem(self.z - c, tuple(x - c for x in self.v))


def period_mul(a, b, cn):
    """Exact product of two period elements via the structure constants."""
    e = cn.e
    if len(a.v) != e or len(b.v) != e:
        raise DomainError("operands do not match the period system")
    z = a.z * b.z
    v = [a.z * bv + b.z * av for av, bv in zip(a.v, b.v)]
    n0, nk = cn.n0, cn.nk
    for i, ai in enumerate(a.v):
        if not ai:
            continue
        n0i, nki = n0[i], nk[i]
        for j, bj in enumerate(b.v):
            if not bj:
                continue
            c = ai * bj
            if n0i[j]:
                z += c * n0i[j]
            for k, m in enumerate(nki[j]):
                if m:
                    v[k] += c * m
    return PeriodElem(z, tuple(v))


def mul_by_eta(a, k, cn, sparse_rows=None, n0col=None):
    """Product a * eta_k; the hot path of polynomial construction.

    sparse_rows/n0col may be supplied by a caller that reuses the same k
    many times (see eta_column).
    """
    e = cn.e
    if sparse_rows is None:
        sparse_rows, n0col = eta_column(cn, k)
    z = 0
    v = [0] * e
    v[k] = a.z
    for i, ai in enumerate(a.v):
        if not ai:
            continue
        if n0col[i]:
            z += ai * n0col[i]
        for m, c in sparse_rows[i]:
            v[m] += ai * c
    return PeriodElem(z, tuple(v))


def eta_column(cn, k):
    """Sparse view of the multiplication-by-eta_k maps: for each i the
    nonzero (m, nk[i][k][m]) pairs, plus the n0[i][k] column."""
    e = cn.e
    rows = [[(m, c) for m, c in enumerate(cn.nk[i][k]) if c] for i in range(e)]
    n0col = [cn.n0[i][k] for i in range(e)]
    return rows, n0col


def period_trace(a, cfg=None):
    """Trace of a period element down to the rationals: e*z - sum(v)."""
    return len(a.v) * a.z - sum(a.v)


@lru_cache(maxsize=16)
def _context(cfg):
    """Cached (PeriodSystem, CycNumbers) for one cfg."""
    ps = period_classes(cfg)
    return ps, structure_constants(ps)
