"""Hilbert series via contour extraction from the graded character.

The series is the constant term in z of (1 - z^2) * prod (1 - t z^w)^-1
over the torus weights w of the rep.  Grouping equal weights first, the
product is split by partial fractions in t; the term attached to the
factor of weight -alpha (alpha >= 0) survives constant term extraction
and turns into an ordinary rational function of t through the
substitution operator U_alpha and the derivative operator D_n.  Factors
of strictly positive weight contribute nothing: their coefficient
functions have strictly positive valuation in z.

All arithmetic is exact; the assembled series is checked against the
brute force monomial counts before being returned.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd
from concurrent.futures import ThreadPoolExecutor

from .exactalg import Polynomial, FactoredDenominator, RationalFunction, taylor_coeffs
from .repmodel import grouped_weights
from . import oracle


class SeriesConsistencyError(RuntimeError):
    """The assembled series disagrees with the brute force counts."""

    def __init__(self, rep, degree, got, want):
        super().__init__(
            "series check failed for %s at degree %d: series gives %s, "
            "direct count gives %s" % (rep, degree, got, want)
        )
        self.rep = rep
        self.degree = degree
        self.got = got
        self.want = want


class ZRationalFunction:
    """Laurent numerator over a product of (1 - z^b)^e factors, b >= 1.

    The numerator is a dict exponent -> coefficient and may reach into
    negative exponents; the denominator factors are always expanded as
    power series in z when coefficients are extracted.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=None, den=None):
        self.num = {e: c for e, c in (num or {}).items() if c}
        self.den = {}
        for b, e in (den or {}).items():
            if b < 1 or e < 0:
                raise ValueError("bad factor (1 - z^%d)^%d" % (b, e))
            if e:
                self.den[b] = self.den.get(b, 0) + e

    @classmethod
    def monomial(cls, coeff, exp=0):
        return cls({exp: coeff})

    @property
    def is_zero(self):
        return not self.num

    def scale(self, c):
        return ZRationalFunction({e: v * c for e, v in self.num.items()}, self.den)

    def shift(self, k):
        return ZRationalFunction({e + k: v for e, v in self.num.items()}, self.den)

    def __mul__(self, other):
        if self.is_zero or other.is_zero:
            return ZRationalFunction()
        num = {}
        for e1, c1 in self.num.items():
            for e2, c2 in other.num.items():
                e = e1 + e2
                num[e] = num.get(e, 0) + c1 * c2
        den = dict(self.den)
        for b, e in other.den.items():
            den[b] = den.get(b, 0) + e
        return ZRationalFunction(num, den)

    def __add__(self, other):
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        common = {
            b: max(self.den.get(b, 0), other.den.get(b, 0))
            for b in set(self.den) | set(other.den)
        }
        ns = _num_times_factors(
            self.num, {b: e - self.den.get(b, 0) for b, e in common.items()}
        )
        no = _num_times_factors(
            other.num, {b: e - other.den.get(b, 0) for b, e in common.items()}
        )
        for e, c in no.items():
            ns[e] = ns.get(e, 0) + c
        return ZRationalFunction(ns, common)

    def __repr__(self):
        return "ZRationalFunction(%r, %r)" % (self.num, self.den)


def _num_times_factors(num, factors):
    out = dict(num)
    for b, e in factors.items():
        for _ in range(e):
            nxt = {}
            for exp, c in out.items():
                nxt[exp] = nxt.get(exp, 0) + c
                nxt[exp + b] = nxt.get(exp + b, 0) - c
            out = {e2: c for e2, c in nxt.items() if c}
    return out


def zr_equal(f, g):
    """Exact equality of z-side functions by cross multiplication."""
    shared = {
        b: min(f.den.get(b, 0), g.den.get(b, 0)) for b in set(f.den) & set(g.den)
    }
    fn = _num_times_factors(f.num, {b: e - shared.get(b, 0) for b, e in g.den.items()})
    gn = _num_times_factors(g.num, {b: e - shared.get(b, 0) for b, e in f.den.items()})
    return fn == gn


def _inv_one_minus(c, e):
    """(1 - z^c)^-e as a ZRationalFunction, for c != 0.

    Negative c is normalized through 1 - z^c = -z^c (1 - z^-c).
    """
    if c > 0:
        return ZRationalFunction({0: 1}, {c: e})
    return ZRationalFunction({-c * e: (-1) ** e}, {-c: e})


@dataclass(frozen=True)
class PartialFractionTerm:
    """One term G / (1 - t z^weight)^order of the split product."""

    weight: int
    order: int
    coeff: ZRationalFunction


def _coeffs_for_index(weights, mults, i):
    """G_{i,0}, ..., G_{i,m_i - 1} for the factor at position i.

    With F(t) the product of all other factors (1 - t z^w)^-m, the
    coefficient of (1 - t z^{w_i})^(j - m_i) is F^(j) (1/x_i) / (j! (-x_i)^j),
    x_i = z^{w_i}.  Derivatives of F come from F' = F * S with S the
    logarithmic derivative, all evaluated at t = 1/x_i.
    """
    wi = weights[i]
    mi = mults[i]
    fval = ZRationalFunction({0: 1})
    for l, (w, m) in enumerate(zip(weights, mults)):
        if l != i:
            fval = fval * _inv_one_minus(w - wi, m)
    derivs = [fval]
    if mi > 1:
        svals = []
        for k in range(mi - 1):
            sk = ZRationalFunction()
            for l, (w, m) in enumerate(zip(weights, mults)):
                if l != i:
                    part = _inv_one_minus(w - wi, k + 1).shift(w * (k + 1))
                    sk = sk + part.scale(m * factorial(k))
            svals.append(sk)
        for j in range(1, mi):
            acc = ZRationalFunction()
            for m in range(j):
                acc = acc + derivs[m] * svals[j - 1 - m].scale(comb(j - 1, m))
            derivs.append(acc)
    out = []
    for j in range(mi):
        g = derivs[j].scale(Fraction((-1) ** j, factorial(j))).shift(-j * wi)
        out.append(g)
    return out


def partial_fraction(weights, mults):
    """Split prod (1 - t z^w)^-m into terms G_{i,j} / (1 - t z^{w_i})^(m_i - j).

    Weights must be distinct; the terms reassemble to the product,
    which is what the tests check.
    """
    if len(set(weights)) != len(weights):
        raise ValueError("weights must be distinct")
    if len(weights) != len(mults):
        raise ValueError("weights and mults must have the same length")
    terms = []
    for i, (w, m) in enumerate(zip(weights, mults)):
        for j, g in enumerate(_coeffs_for_index(weights, mults, i)):
            terms.append(PartialFractionTerm(w, m - j, g))
    return terms


def ua_transform(f, a, degree_budget=None):
    """Extract every a-th z-coefficient of f into a rational function of t.

    U_a sends sum c_n z^n to sum c_{an} t^n.  Each denominator factor
    transforms by (1 - z^b) -> (1 - t^(b/gcd(a,b)))^gcd(a,b); the
    numerator is recovered exactly from a truncated expansion, with a
    margin of two coefficients beyond the degree bound checked to be
    zero.  U_0 keeps the constant coefficient over a factor 1/(1 - t).
    """
    if a < 0:
        raise ValueError("a must be nonnegative")
    if f.is_zero:
        return RationalFunction(Polynomial(), FactoredDenominator())
    if a == 0:
        c0 = _z_coefficient(f, 0)
        return RationalFunction(Polynomial([c0]), FactoredDenominator({1: 1}))
    den_t = {}
    for b, e in f.den.items():
        g = gcd(a, b)
        m = b // g
        den_t[m] = den_t.get(m, 0) + g * e
    q = sum(b * e for b, e in f.den.items())
    p = max(f.num)
    bound = max(0, (p + (a - 1) * q) // a)
    if degree_budget is not None and degree_budget > bound:
        bound = degree_budget
    margin = 2
    sub = _z_subsequence(f, a, bound + margin)
    qpoly = FactoredDenominator(den_t).expand().c
    num = []
    for k in range(bound + margin + 1):
        acc = 0
        for u in range(min(k, len(qpoly) - 1) + 1):
            if qpoly[u]:
                acc += qpoly[u] * sub[k - u]
        num.append(acc)
    for k in range(bound + 1, bound + margin + 1):
        if num[k] != 0:
            raise RuntimeError("numerator degree bound violated in U_%d" % a)
    return RationalFunction(Polynomial(num[:bound + 1]), FactoredDenominator(den_t))


def _expanded_den(f):
    out = [1]
    for b, e in f.den.items():
        for _ in range(e):
            nxt = [0] * (len(out) + b)
            for i, c in enumerate(out):
                if c:
                    nxt[i] += c
                    nxt[i + b] -= c
            out = nxt
    return out


def _z_series(f, top):
    """Laurent coefficients of f from its valuation up to z^top, as (offset, list)."""
    vmin = min(f.num)
    qz = _expanded_den(f)
    length = top - vmin + 1
    if length <= 0:
        return vmin, []
    coeffs = [0] * length
    for j in range(length):
        acc = f.num.get(vmin + j, 0)
        for u in range(1, min(j, len(qz) - 1) + 1):
            if qz[u]:
                acc -= qz[u] * coeffs[j - u]
        coeffs[j] = acc
    return vmin, coeffs


def _z_subsequence(f, a, count):
    """[z^0]f, [z^a]f, ..., [z^(a*count)]f."""
    vmin, coeffs = _z_series(f, a * count)
    out = []
    for i in range(count + 1):
        j = a * i - vmin
        out.append(coeffs[j] if 0 <= j < len(coeffs) else 0)
    return out


def _z_coefficient(f, n):
    vmin, coeffs = _z_series(f, n)
    j = n - vmin
    return coeffs[j] if 0 <= j < len(coeffs) else 0


def dn_apply(f, n):
    """The operator D_n = (d/dt)^n after multiplication by t^n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = RationalFunction(f.num.shifted(n), f.den)
    for _ in range(n):
        out = out.derivative()
    return out


_MEMO = {}


def hilbert_series(rep, check_cap=30, threads=None):
    """Hilbert series of the invariant ring of rep, as num / factored den.

    The result is reduced and verified against brute force monomial
    counts up to min(check_cap, denominator degree); a mismatch raises
    SeriesConsistencyError.  Trivial summands contribute 1/(1-t) each.
    """
    memo_key = (rep.degrees, rep.trivial_count)
    hit = _MEMO.get(memo_key)
    if hit is not None:
        return hit
    if not rep.degrees:
        total = RationalFunction(
            Polynomial([1]),
            FactoredDenominator({1: rep.trivial_count} if rep.trivial_count else {}),
        )
        _MEMO[memo_key] = total
        return total
    gw = grouped_weights(rep)
    weights = list(gw.even_weights) + list(gw.odd_weights)
    mults = list(gw.even_mults) + list(gw.odd_mults)
    one_minus_z2 = ZRationalFunction({0: 1, 2: -1})
    jobs = []
    for alpha, mult in zip(weights, mults):
        if alpha < 0:
            continue
        omitted = weights.index(-alpha)
        jobs.append((alpha, mult, omitted))

    def run_job(job):
        alpha, mult, omitted = job
        parts = []
        for j, g in enumerate(_coeffs_for_index(weights, mults, omitted)):
            order = mult - j
            piece = ua_transform(one_minus_z2 * g, alpha)
            piece = dn_apply(piece, order - 1).scaled(Fraction(1, factorial(order - 1)))
            parts.append(piece)
        return parts

    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            per_job = list(pool.map(run_job, jobs))
    else:
        per_job = [run_job(job) for job in jobs]
    total = RationalFunction(Polynomial(), FactoredDenominator())
    for parts in per_job:
        for piece in parts:
            total = total + piece
    total = total.reduce()
    if rep.trivial_count:
        factors = dict(total.den.factors)
        factors[1] = factors.get(1, 0) + rep.trivial_count
        total = RationalFunction(total.num, FactoredDenominator(factors))
    _verify_against_counts(rep, total, check_cap)
    _MEMO[memo_key] = total
    return total


def _verify_against_counts(rep, total, check_cap):
    if total.num.is_zero or total.degree() > 0:
        raise SeriesConsistencyError(rep, 0, repr(total), "a power series of degree <= 0")
    depth = min(check_cap, total.den.degree)
    got = taylor_coeffs(total, depth + 1)
    want = oracle.truncated_series(rep, depth)
    for n, (g, w) in enumerate(zip(got, want)):
        if g != w:
            raise SeriesConsistencyError(rep, n, g, w)
