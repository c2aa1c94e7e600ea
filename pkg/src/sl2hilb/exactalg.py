"""Exact univariate rational function arithmetic over the rationals.

Everything is dense and exact: polynomials are coefficient lists of
ints or Fractions, denominators stay factored as products of cyclotomic
style factors (1 - t^m)^e, and Laurent expansion at t = 1 is done by
the substitution t = 1 - s followed by truncated series inversion.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb


class Polynomial:
    """Dense polynomial in t; trailing zeros stripped, zero has degree -1."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.c = c

    @classmethod
    def from_dict(cls, d):
        if not d:
            return cls()
        top = max(d)
        coeffs = [0] * (top + 1)
        for e, v in d.items():
            if e < 0:
                raise ValueError("negative exponent %d" % e)
            coeffs[e] = v
        return cls(coeffs)

    @property
    def degree(self):
        return len(self.c) - 1

    @property
    def is_zero(self):
        return not self.c

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.c))

    def __add__(self, other):
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Polynomial(out)

    def __neg__(self):
        return Polynomial([-v for v in self.c])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero or other.is_zero:
                return Polynomial()
            a, b = self.c, other.c
            out = [0] * (len(a) + len(b) - 1)
            for i, u in enumerate(a):
                if u:
                    for j, v in enumerate(b):
                        if v:
                            out[i + j] += u * v
            return Polynomial(out)
        return Polynomial([v * other for v in self.c])

    __rmul__ = __mul__

    def derivative(self):
        return Polynomial([i * v for i, v in enumerate(self.c)][1:])

    def eval_at(self, x):
        acc = 0
        for v in reversed(self.c):
            acc = acc * x + v
        return acc

    def shifted(self, n):
        """Multiply by t^n."""
        if self.is_zero:
            return Polynomial()
        return Polynomial([0] * n + self.c)

    def reversed_(self):
        """t^degree * p(1/t)."""
        return Polynomial(list(reversed(self.c)))

    def divide_exact(self, divisor):
        """Exact quotient self / divisor, or None if the remainder is nonzero."""
        if divisor.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero:
            return Polynomial()
        if self.degree < divisor.degree:
            return None
        rem = list(self.c)
        dc = divisor.c
        lead = dc[-1]
        out = [0] * (len(rem) - len(dc) + 1)
        for i in range(len(out) - 1, -1, -1):
            q = rem[i + len(dc) - 1]
            if q == 0:
                continue
            q = Fraction(q, lead) if lead != 1 else q
            if isinstance(q, Fraction) and q.denominator == 1:
                q = int(q)
            out[i] = q
            for j, v in enumerate(dc):
                rem[i + j] -= q * v
        if any(rem):
            return None
        return Polynomial(out)

    def __repr__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i, v in enumerate(self.c):
            if not v:
                continue
            if i == 0:
                parts.append(str(v))
            elif v == 1:
                parts.append("t" if i == 1 else "t^%d" % i)
            elif v == -1:
                parts.append("-t" if i == 1 else "-t^%d" % i)
            else:
                parts.append("%s*t" % v if i == 1 else "%s*t^%d" % (v, i))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


ONE = Polynomial([1])


def one_minus_power(m):
    """The factor 1 - t^m as a Polynomial."""
    return Polynomial([1] + [0] * (m - 1) + [-1])


class FactoredDenominator:
    """Product of factors (1 - t^m)^e stored as a map m -> e, all e >= 1."""

    __slots__ = ("factors",)

    def __init__(self, factors=None):
        f = {}
        for m, e in (factors or {}).items():
            if m < 1 or e < 0:
                raise ValueError("bad factor (1 - t^%d)^%d" % (m, e))
            if e:
                f[m] = e
        self.factors = f

    @property
    def degree(self):
        return sum(m * e for m, e in self.factors.items())

    @property
    def is_one(self):
        return not self.factors

    def __eq__(self, other):
        if isinstance(other, FactoredDenominator):
            return self.factors == other.factors
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self.factors.items())))

    def expand(self):
        out = ONE
        for m in sorted(self.factors):
            f = one_minus_power(m)
            for _ in range(self.factors[m]):
                out = out * f
        return out

    def items_sorted(self):
        return sorted(self.factors.items())

    def __repr__(self):
        if self.is_one:
            return "1"
        parts = []
        for m, e in self.items_sorted():
            base = "(1-t^%d)" % m if m > 1 else "(1-t)"
            parts.append(base if e == 1 else base + "^%d" % e)
        return "".join(parts)


@dataclass(frozen=True)
class LaurentExpansion:
    """Leading Laurent data at t = 1: f = sum c_j (1-t)^(j - pole_order)."""

    pole_order: int
    coeffs: tuple


class RationalFunction:
    """num / den with a factored denominator; no automatic cancellation."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Polynomial):
            num = Polynomial([num]) if num else Polynomial()
        if den is None:
            den = FactoredDenominator()
        elif not isinstance(den, FactoredDenominator):
            den = FactoredDenominator(den)
        self.num = num
        self.den = den

    @property
    def is_zero(self):
        return self.num.is_zero

    def degree(self):
        """Degree as a rational function: deg num - deg den."""
        if self.num.is_zero:
            raise ValueError("zero function has no degree")
        return self.num.degree - self.den.degree

    def scaled(self, c):
        return RationalFunction(self.num * c, self.den)

    def __add__(self, other):
        fs, fo = self.den.factors, other.den.factors
        common = {m: max(fs.get(m, 0), fo.get(m, 0)) for m in set(fs) | set(fo)}
        ns = self.num * FactoredDenominator(
            {m: e - fs.get(m, 0) for m, e in common.items()}
        ).expand()
        no = other.num * FactoredDenominator(
            {m: e - fo.get(m, 0) for m, e in common.items()}
        ).expand()
        return RationalFunction(ns + no, FactoredDenominator(common))

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def mul_poly(self, p):
        return RationalFunction(self.num * p, self.den)

    def derivative(self):
        """d/dt, with every denominator exponent raised by one."""
        f = self.den.factors
        if not f:
            return RationalFunction(self.num.derivative(), self.den)
        # (P / prod q_m^e_m)' = (P' prod q_m + P sum e_m q_m' prod_{m'!=m} q_m')
        #                       / prod q_m^(e_m+1)
        prod_all = ONE
        for m in f:
            prod_all = prod_all * one_minus_power(m)
        top = self.num.derivative() * prod_all
        for m, e in f.items():
            # from d/dt (1 - t^m)^-e = e m t^(m-1) (1 - t^m)^-(e+1)
            part = Polynomial([0] * (m - 1) + [e * m])
            for m2 in f:
                if m2 != m:
                    part = part * one_minus_power(m2)
            top = top + self.num * part
        return RationalFunction(top, FactoredDenominator({m: e + 1 for m, e in f.items()}))

    def reduce(self):
        """Cancel factors (1 - t^m) dividing the numerator; best effort."""
        num = self.num
        factors = dict(self.den.factors)
        for m in sorted(factors):
            while factors[m] > 0 and not num.is_zero:
                q = num.divide_exact(one_minus_power(m))
                if q is None:
                    break
                num = q
                factors[m] -= 1
            if factors[m] == 0:
                del factors[m]
        return RationalFunction(num, FactoredDenominator(factors))

    def at_reciprocal(self):
        """The rational function f(1/t); requires degree <= 0."""
        p, q = self.num, self.den
        if p.is_zero:
            return RationalFunction(p, q)
        shift = q.degree - p.degree
        if shift < 0:
            raise ValueError("degree must be <= 0")
        sign = (-1) ** sum(q.factors.values())
        return RationalFunction(p.reversed_().shifted(shift) * sign, q)

    def __repr__(self):
        if self.den.is_one:
            return repr(self.num)
        return "(%r)/%r" % (self.num, self.den)


def rf_equal(f, g):
    """Exact equality of rational functions by cross multiplication."""
    fs, gs = f.den.factors, g.den.factors
    # cancel shared factored part first; keeps the cross products small
    shared = {m: min(fs.get(m, 0), gs.get(m, 0)) for m in set(fs) & set(gs)}
    fd = FactoredDenominator({m: e - shared.get(m, 0) for m, e in fs.items()})
    gd = FactoredDenominator({m: e - shared.get(m, 0) for m, e in gs.items()})
    return f.num * gd.expand() == g.num * fd.expand()


def taylor_coeffs(f, count):
    """First `count` Maclaurin coefficients of f; denominator must be 1 at 0."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    q = f.den.expand().c
    p = f.num.c
    out = []
    for n in range(count):
        acc = p[n] if n < len(p) else 0
        for j in range(1, min(n, len(q) - 1) + 1):
            acc -= q[j] * out[n - j]
        out.append(acc)  # q[0] == 1 for factored denominators
    return out


def laurent_at_one(f, count):
    """Laurent expansion of f at t = 1 in powers of s = 1 - t.

    Returns LaurentExpansion(p, (c_0, ..., c_{count-1})) meaning
    f = sum_j c_j (1-t)^(j-p), with c_0 != 0 whenever p > 0.
    """
    if f.num.is_zero:
        raise ValueError("zero function has no Laurent expansion")
    zeros = sum(f.den.factors.values())
    cutoff = zeros + count  # all work truncated at this s-degree
    # numerator in s via Horner: P(1 - s), high coefficients dropped
    cur = [0] * (cutoff + 1)
    for v in reversed(f.num.c):
        for i in range(cutoff, 0, -1):
            cur[i] -= cur[i - 1]
        cur[0] += v
    # each factor 1 - t^m = s * u_m(s) with u_m(0) = m
    unit = [1] + [0] * cutoff
    for m, e in f.den.factors.items():
        um = [-comb(m, j + 1) * (-1) ** (j + 1) for j in range(min(m, cutoff + 1))]
        for _ in range(e):
            unit = _mul_trunc(unit, um, cutoff)
    val = 0
    while val <= cutoff and cur[val] == 0:
        val += 1
    if val > cutoff:
        # the function vanishes at t = 1 beyond the requested window
        return LaurentExpansion(0, (0,) * count)
    pole = zeros - val
    # expand (unit part of numerator) / (unit part of denominator) in s
    length = count if pole >= 0 else max(count + pole, 0)
    top = cur[val:val + length]
    inv = _series_inverse(unit, length)
    series = []
    for n in range(length):
        acc = 0
        for j in range(min(n, len(top) - 1) + 1):
            acc += top[j] * inv[n - j]
        series.append(_normalize(acc))
    if pole >= 0:
        return LaurentExpansion(pole, tuple(series))
    return LaurentExpansion(0, tuple(([0] * min(-pole, count) + series)[:count]))


def _mul_trunc(a, b, cutoff):
    out = [0] * (cutoff + 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                if i + j > cutoff:
                    break
                if v:
                    out[i + j] += u * v
    return out


def _series_inverse(coeffs, count):
    """First `count` coefficients of 1 / sum coeffs[j] s^j, coeffs[0] != 0."""
    c0 = coeffs[0]
    inv = [Fraction(1, 1) / c0]
    for n in range(1, count):
        acc = 0
        for j in range(1, min(n, len(coeffs) - 1) + 1):
            acc += coeffs[j] * inv[n - j]
        inv.append(-acc / c0)
    return inv


def _normalize(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x
