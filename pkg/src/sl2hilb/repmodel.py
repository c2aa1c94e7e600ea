"""Finite dimensional SL2 representations and their torus weight data.

A representation is a direct sum of irreducibles V_d (binary forms of
degree d).  The diagonal torus acts on the standard basis of V_d with
weights 2i - d, i = 0..d, and every computation downstream (series,
closed forms, brute force counting) is driven by that weight multiset.

Trivial summands V_0 are tracked separately: they contribute a free
polynomial variable each, i.e. a factor 1/(1-t) in the Hilbert series,
and are excluded from the weight combinatorics.
"""

from dataclasses import dataclass


class RepParseError(ValueError):
    """Raised for malformed representation specs, with a 0-based position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = "%s (at position %d)" % (message, position)
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class Representation:
    """Multiset of irreducible degrees, kept sorted ascending.

    degrees holds the nontrivial degrees d_k >= 1; trivial_count the
    number of V_0 summands.  dim counts the nontrivial part only.
    """

    degrees: tuple
    trivial_count: int = 0

    def __post_init__(self):
        degs = tuple(sorted(self.degrees))
        if any(not isinstance(d, int) or d < 1 for d in degs):
            raise ValueError("degrees must be positive integers")
        if not isinstance(self.trivial_count, int) or self.trivial_count < 0:
            raise ValueError("trivial_count must be a nonnegative integer")
        object.__setattr__(self, "degrees", degs)

    @property
    def dim(self):
        # dim of the nontrivial part: sum of (d_k + 1)
        return len(self.degrees) + sum(self.degrees)

    @property
    def key(self):
        """Canonical text form, e.g. '2V3+V4' or '1' for the trivial rep."""
        if not self.degrees and not self.trivial_count:
            return "0"
        parts = []
        if self.trivial_count:
            parts.append(_term_text(0, self.trivial_count))
        seen = []
        for d in self.degrees:
            if seen and seen[-1][0] == d:
                seen[-1][1] += 1
            else:
                seen.append([d, 1])
        parts.extend(_term_text(d, m) for d, m in seen)
        return "+".join(parts)

    def __str__(self):
        return self.key


def _term_text(d, m):
    return ("%dV%d" % (m, d)) if m > 1 else ("V%d" % d)


@dataclass(frozen=True)
class WeightSystem:
    """Torus weights of the nontrivial part, indexed by (k, i).

    theta lists all basis weights a_{k,i} = 2i - d_k in lexicographic
    (k, i) order; lam the strictly positive ones in the same order.
    Invariants: dim = 2*npos + neven, sum of theta weights is 0, and
    every odd power sum over theta vanishes.
    """

    theta: tuple        # ((k, i, weight), ...)
    lam: tuple          # positive-weight subset of theta
    a_vec: tuple        # weights of lam in order
    npos: int           # number of positive weights, C
    neven: int          # number of even degrees, e
    dim: int            # D
    sigma: int          # 2 if all degrees even else 1


def weight_system(rep):
    theta = []
    lam = []
    for k, d in enumerate(rep.degrees, start=1):
        for i in range(d + 1):
            w = 2 * i - d
            theta.append((k, i, w))
            if w > 0:
                lam.append((k, i, w))
    neven = sum(1 for d in rep.degrees if d % 2 == 0)
    sigma = 2 if rep.degrees and neven == len(rep.degrees) else 1
    return WeightSystem(
        theta=tuple(theta),
        lam=tuple(lam),
        a_vec=tuple(w for _, _, w in lam),
        npos=len(lam),
        neven=neven,
        dim=rep.dim,
        sigma=sigma,
    )


# Degree multisets whose first Laurent coefficient has no closed form;
# these also lack the closed forms for the three higher coefficients.
GAMMA0_EXCEPTIONS = frozenset({(1,), (2,), (3,), (4,), (1, 1)})

# Degree multisets where only the third coefficient lacks a closed form.
GAMMA2_ONLY_EXCEPTIONS = frozenset(
    {(5,), (6,), (8,), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4), (3, 3), (4, 4)}
)

CASE_EXCEPTION_GAMMA0 = "ExceptionGamma0"
CASE_EXCEPTION_GAMMA2_ONLY = "ExceptionGamma2Only"
CASE_ONE_V1_REST_EVEN = "OneV1RestEven"
CASE_GENERIC = "GenericEvenOrOdd"


@dataclass(frozen=True)
class CaseTag:
    case: str
    in_gamma0_exceptions: bool
    in_gamma2_exceptions: bool
    one_v1_rest_even: bool


def classify_case(rep):
    """Classify rep for dispatch of the closed coefficient formulas.

    Requires a rep without trivial summands; the coefficient formulas
    do not apply once factors of 1/(1-t) are mixed in.
    """
    if rep.trivial_count:
        raise ValueError("classify_case requires a rep without trivial summands")
    if not rep.degrees:
        raise ValueError("classify_case requires a nonzero rep")
    degs = rep.degrees
    g0 = degs in GAMMA0_EXCEPTIONS
    g2 = degs in GAMMA2_ONLY_EXCEPTIONS
    one_v1 = degs[0] == 1 and degs.count(1) == 1 and all(d % 2 == 0 for d in degs[1:])
    if g0:
        case = CASE_EXCEPTION_GAMMA0
    elif g2:
        case = CASE_EXCEPTION_GAMMA2_ONLY
    elif one_v1:
        case = CASE_ONE_V1_REST_EVEN
    else:
        case = CASE_GENERIC
    return CaseTag(case, g0, g2, one_v1)


@dataclass(frozen=True)
class GroupedWeights:
    """Distinct weights with multiplicities, split by parity family.

    Even degrees share the weight ladder of the largest even degree;
    within the family the weight w occurs with multiplicity equal to
    the number of even summands of degree >= |w|.  Odd degrees behave
    the same way on the odd ladder.  Total multiplicity is dim.
    """

    even_weights: tuple
    even_mults: tuple
    odd_weights: tuple
    odd_mults: tuple


def grouped_weights(rep):
    def family(degs):
        if not degs:
            return (), ()
        top = max(degs)
        weights = tuple(top - 2 * i for i in range(top + 1))
        mults = tuple(sum(1 for d in degs if d >= abs(w)) for w in weights)
        return weights, mults

    ew, em = family([d for d in rep.degrees if d % 2 == 0])
    ow, om = family([d for d in rep.degrees if d % 2 == 1])
    return GroupedWeights(ew, em, ow, om)


def parse_rep(text):
    """Parse a rep spec: either 'V3+2V2' style terms or a '3,2,2' list.

    Multiplicities allow an optional '*': '2*V3' and '2V3' agree.  The
    letter V is case insensitive and whitespace is ignored.  Degree 0
    terms are recorded as trivial summands.
    """
    if not isinstance(text, str):
        raise RepParseError("rep spec must be a string")
    stripped = [(idx, ch) for idx, ch in enumerate(text) if not ch.isspace()]
    if not stripped:
        raise RepParseError("empty rep spec", 0)
    if any(ch in "vV" for _, ch in stripped):
        return _parse_terms(stripped)
    return _parse_list(text, stripped)


def _parse_list(text, stripped):
    chunks = []
    cur = []
    for idx, ch in stripped:
        if ch == ",":
            chunks.append(cur)
            cur = []
        else:
            cur.append((idx, ch))
    chunks.append(cur)
    degrees = []
    trivial = 0
    pos_after = len(text)
    for chunk in chunks:
        if not chunk:
            raise RepParseError("expected a degree", pos_after)
        s = "".join(ch for _, ch in chunk)
        start = chunk[0][0]
        try:
            d = int(s)
        except ValueError:
            raise RepParseError("expected an integer degree, got %r" % s, start) from None
        if d < 0:
            raise RepParseError("negative degree %d" % d, start)
        if d == 0:
            trivial += 1
        else:
            degrees.append(d)
    return Representation(tuple(degrees), trivial)


def _parse_terms(stripped):
    terms = []
    cur = []
    for idx, ch in stripped:
        if ch == "+":
            terms.append(cur)
            cur = []
        else:
            cur.append((idx, ch))
    terms.append(cur)
    degrees = []
    trivial = 0
    end_pos = stripped[-1][0] + 1
    for term in terms:
        mult, degree = _parse_term(term, end_pos)
        if degree == 0:
            trivial += mult
        else:
            degrees.extend([degree] * mult)
    return Representation(tuple(degrees), trivial)


def _parse_term(term, end_pos):
    if not term:
        raise RepParseError("empty term", end_pos)
    pos = 0
    n = len(term)

    def take_int():
        nonlocal pos
        start = pos
        while pos < n and term[pos][1].isdigit():
            pos += 1
        if pos == start:
            return None
        return int("".join(ch for _, ch in term[start:pos]))

    mult = take_int()
    if pos < n and term[pos][1] == "*":
        if mult is None:
            raise RepParseError("'*' without a multiplicity", term[pos][0])
        pos += 1
    if mult is None:
        mult = 1
    elif mult == 0:
        raise RepParseError("zero multiplicity", term[0][0])
    if pos >= n or term[pos][1] not in "vV":
        where = term[pos][0] if pos < n else term[-1][0] + 1
        raise RepParseError("expected 'V'", where)
    pos += 1
    degree = take_int()
    if degree is None:
        where = term[pos][0] if pos < n else term[-1][0] + 1
        raise RepParseError("expected a degree after 'V'", where)
    if pos != n:
        raise RepParseError("trailing characters %r" % "".join(ch for _, ch in term[pos:]), term[pos][0])
    return mult, degree
