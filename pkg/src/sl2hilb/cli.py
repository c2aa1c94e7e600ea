"""Command-line front end.

Subcommands: series (rational function, optionally leading coefficients),
gamma (Laurent data), verify (oracle and identity checks), table (recompute
the shipped fixture table), expand (series coefficients only).  Results cache
as one JSON file per canonical representation key.
"""

import argparse
import json
import os
import random
import sys
import tempfile
import time
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .exactalg import (FactoredDenominator, Polynomial, RationalFunction,
                       laurent_at_one, rf_equal, taylor_coeffs)
from .laurent import first_coeff_sum, gammas, random_params, sigma_sum_raw, \
    sigma_sum_schur
from .oracle import truncated_series
from .repmodel import RepParseError, parse_rep
from .series import SeriesConsistencyError, hilbert_series

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

_INT64_MAX = 2 ** 63


@dataclass
class HilbertResult:
    rep_degrees: tuple
    numerator: list
    denominator: list          # [(m, e)] sorted by m
    gamma: tuple               # four Fractions, or None with trivial summands
    a_invariant: int
    pole_order: int
    methods: tuple
    version: str
    timing: float = None       # seconds; not serialized

    @classmethod
    def compute(cls, rep, threads=None):
        t0 = time.perf_counter()
        series = hilbert_series(rep, threads=threads)
        if rep.degrees and not rep.trivial_count:
            res = gammas(rep)
            gamma, methods = res.gamma, res.methods
            a_inv, pole = res.a_invariant, res.pole_order
        else:
            gamma, methods = None, None
            a_inv = series.degree()
            pole = laurent_at_one(series, 1).pole_order
        degrees = (0,) * rep.trivial_count + rep.degrees
        return cls(degrees, list(series.num.c), series.den.items_sorted(),
                   gamma, a_inv, pole, methods, __version__,
                   time.perf_counter() - t0)

    def series(self):
        return RationalFunction(Polynomial(self.numerator),
                                FactoredDenominator(dict(self.denominator)))

    def to_json_dict(self):
        return {
            "rep": list(self.rep_degrees),
            "numerator": [_int_out(v) for v in self.numerator],
            "denominator": [[m, e] for m, e in self.denominator],
            "gamma": None if self.gamma is None
                     else ["%d/%d" % (g.numerator, g.denominator) for g in self.gamma],
            "a_invariant": self.a_invariant,
            "pole_order": self.pole_order,
            "methods": None if self.methods is None else list(self.methods),
            "version": self.version,
        }

    @classmethod
    def from_json_dict(cls, data):
        gamma = data["gamma"]
        return cls(
            rep_degrees=tuple(data["rep"]),
            numerator=[_int_in(v) for v in data["numerator"]],
            denominator=[(m, e) for m, e in data["denominator"]],
            gamma=None if gamma is None else tuple(Fraction(g) for g in gamma),
            a_invariant=data["a_invariant"],
            pole_order=data["pole_order"],
            methods=None if data["methods"] is None else tuple(data["methods"]),
            version=data["version"],
        )


def _int_out(v):
    # arbitrary precision survives JSON as decimal strings past 64 bits
    return v if -_INT64_MAX <= v < _INT64_MAX else str(v)


def _int_in(v):
    return int(v)


@dataclass(frozen=True)
class FixtureRow:
    key: str
    dim: int
    series: RationalFunction
    gamma: tuple
    a_invariant: int


def _rf(num, den):
    if isinstance(num, dict):
        coeffs = [0] * (max(num) + 1)
        for e, c in num.items():
            coeffs[e] = c
        num = coeffs
    return RationalFunction(Polynomial(num), FactoredDenominator(den))


def _g(*vals):
    return tuple(Fraction(v) for v in vals)


FIXTURES = [
    FixtureRow("V1", 2, _rf([1], {}), _g(1, 0, 0, 0), 0),
    FixtureRow("V2", 3, _rf([1], {2: 1}), _g("1/2", "1/4", "1/8", "1/16"), -2),
    FixtureRow("V3", 4, _rf([1], {4: 1}), _g("1/4", "3/8", "5/16", "5/32"), -4),
    FixtureRow("V4", 5, _rf([1], {2: 1, 3: 1}),
               _g("1/6", "1/4", "17/72", "25/144"), -5),
    FixtureRow("V5", 6, _rf({0: 1, 18: 1}, {4: 1, 8: 1, 12: 1}),
               _g("1/192", "1/128", "199/1152", "965/2304"), -6),
    FixtureRow("V6", 7, _rf({0: 1, 15: 1}, {2: 1, 4: 1, 6: 1, 10: 1}),
               _g("1/240", "1/160", "71/720", "17/72"), -7),
    FixtureRow("V8", 9,
               _rf({0: 1, 8: 1, 9: 1, 10: 1, 18: 1},
                   {2: 1, 3: 1, 4: 1, 5: 1, 6: 1, 7: 1}),
               _g("1/1008", "1/672", "191/15120", "11/378"), -9),
    FixtureRow("2V1", 4, _rf([1], {2: 1}), _g("1/2", "1/4", "1/8", "1/16"), -2),
    FixtureRow("2V2", 6, _rf([1], {2: 3}), _g("1/8", "3/16", "3/16", "5/32"), -6),
    FixtureRow("2V3", 8, _rf({0: 1, 4: 1, 6: 1, 10: 1}, {2: 1, 4: 4}),
               _g("1/128", "3/256", "23/512", "95/1024"), -8),
    FixtureRow("2V4", 10, _rf({0: 1, 4: 1, 8: 1}, {2: 3, 3: 4}),
               _g("1/216", "1/144", "11/432", "5/96"), -10),
    FixtureRow("V1+V2", 5, _rf([1], {2: 1, 3: 1}),
               _g("1/6", "1/4", "17/72", "25/144"), -5),
    FixtureRow("V1+V3", 6, _rf({0: 1, 6: 1}, {4: 3}),
               _g("1/32", "3/64", "9/64", "35/128"), -6),
    FixtureRow("V1+V4", 7, _rf({0: 1, 9: 1}, {2: 1, 3: 1, 5: 1, 6: 1}),
               _g("1/90", "1/60", "109/1080", "97/432"), -7),
    FixtureRow("V2+V3", 7, _rf({0: 1, 7: 1}, {2: 1, 3: 1, 4: 1, 5: 1}),
               _g("1/60", "1/40", "71/720", "59/288"), -7),
    FixtureRow("V2+V4", 8, _rf({0: 1, 6: 1}, {2: 2, 3: 2, 4: 1}),
               _g("1/72", "1/48", "29/432", "115/864"), -8),
]


def _cache_dir():
    base = os.environ.get("SL2HILB_CACHE_DIR")
    if not base:
        base = os.path.join(os.path.expanduser("~"), ".cache", "sl2hilb")
    return base


def _cache_path(rep):
    return os.path.join(_cache_dir(), rep.key + ".json")


def load_cached(rep):
    path = _cache_path(rep)
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, ValueError):
        return None
    if data.get("version") != __version__:
        return None
    try:
        return HilbertResult.from_json_dict(data)
    except (KeyError, TypeError, ValueError):
        return None


def store_cached(rep, result):
    path = _cache_path(rep)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(result.to_json_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _get_result(rep, threads=None, use_cache=True):
    if use_cache:
        cached = load_cached(rep)
        if cached is not None:
            return cached
    result = HilbertResult.compute(rep, threads=threads)
    if use_cache:
        store_cached(rep, result)
    return result


def _poly_latex(poly):
    terms = []
    for e, c in enumerate(poly.c):
        if not c:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            mono = "t" if e == 1 else "t^{%d}" % e
            if c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append("%d %s" % (c, mono))
    if not terms:
        return "0"
    out = terms[0]
    for term in terms[1:]:
        out += " - " + term[1:] if term.startswith("-") else " + " + term
    return out


def _series_latex(rf):
    num = _poly_latex(rf.num)
    if rf.den.is_one:
        return num
    den = "".join("(1-t^{%d})%s" % (m, "^{%d}" % e if e > 1 else "")
                  for m, e in rf.den.items_sorted())
    return "\\frac{%s}{%s}" % (num, den)


def _print_series(result, fmt, terms, out):
    series = result.series()
    if fmt == "json":
        payload = result.to_json_dict()
        if terms:
            payload["coefficients"] = taylor_coeffs(series, terms)
        json.dump(payload, out, indent=2, sort_keys=True)
        out.write("\n")
        return
    if fmt == "latex":
        out.write("H(t) = %s\n" % _series_latex(series))
        return
    out.write("%r\n" % series)
    if terms:
        coeffs = taylor_coeffs(series, terms)
        out.write("coefficients: %s\n" % ", ".join(str(c) for c in coeffs))


def cmd_series(args, out=None):
    out = out or sys.stdout
    rep = parse_rep(args.spec)
    result = _get_result(rep, threads=args.threads, use_cache=not args.no_cache)
    _print_series(result, args.format, args.terms, out)
    return EXIT_OK


def cmd_expand(args, out=None):
    out = out or sys.stdout
    rep = parse_rep(args.spec)
    result = _get_result(rep, threads=args.threads, use_cache=not args.no_cache)
    coeffs = taylor_coeffs(result.series(), args.terms)
    if args.format == "json":
        json.dump({"rep": list(result.rep_degrees), "coefficients": coeffs},
                  out, sort_keys=True)
        out.write("\n")
    else:
        out.write(", ".join(str(c) for c in coeffs) + "\n")
    return EXIT_OK


def cmd_gamma(args, out=None):
    out = out or sys.stdout
    rep = parse_rep(args.spec)
    if not rep.degrees or rep.trivial_count:
        raise RepParseError("trivial summand not allowed for gamma", 0)
    result = _get_result(rep, threads=args.threads, use_cache=not args.no_cache)
    if args.format == "json":
        json.dump(result.to_json_dict(), out, indent=2, sort_keys=True)
        out.write("\n")
        return EXIT_OK
    if args.format == "latex":
        for i, g in enumerate(result.gamma):
            out.write("\\gamma_%d = \\frac{%d}{%d}\n"
                      % (i, g.numerator, g.denominator))
        out.write("a = %d\n" % result.a_invariant)
        return EXIT_OK
    out.write("rep        %s\n" % rep.key)
    for i, (g, m) in enumerate(zip(result.gamma, result.methods)):
        out.write("gamma%d     %-12s (%s)\n" % (i, g, m))
    out.write("a          %d\n" % result.a_invariant)
    out.write("pole       %d\n" % result.pole_order)
    return EXIT_OK


def _verify_rep(rep, max_degree, draws, seed, threads, out):
    failures = []

    def check(name, ok, detail=""):
        line = "%s %s" % ("PASS" if ok else "FAIL", name)
        if detail and not ok:
            line += ": " + detail
        out.write(line + "\n")
        if not ok:
            failures.append(name)

    series = hilbert_series(rep, threads=threads)
    want = truncated_series(rep, max_degree)
    got = taylor_coeffs(series, max_degree + 1)
    bad = next((n for n in range(max_degree + 1) if got[n] != want[n]), None)
    check("oracle to degree %d" % max_degree, bad is None,
          "degree %s: series %s oracle %s" % (bad, got[bad] if bad is not None else "",
                                              want[bad] if bad is not None else ""))

    nontrivial = bool(rep.degrees) and not rep.trivial_count
    if nontrivial:
        dim = rep.dim
        res = gammas(rep)
        exp = laurent_at_one(series, 4)

        check("series degree equals a-invariant",
              series.degree() == res.a_invariant,
              "degree %d vs %d" % (series.degree(), res.a_invariant))

        if rep.degrees not in {(1,), (1, 1), (2,)}:
            check("pole order %d" % (dim - 3), res.pole_order == dim - 3,
                  "got %d" % res.pole_order)
            flip = series.at_reciprocal()
            shifted = RationalFunction(series.num.shifted(dim) * ((-1) ** (dim - 3)),
                                       series.den)
            check("functional equation", rf_equal(flip, shifted))

        fcs = first_coeff_sum(rep)
        expected_fcs = {(1,): Fraction(1), (2,): Fraction(-1, 4),
                        (1, 1): Fraction(-1)}.get(rep.degrees, Fraction(0))
        check("leading coefficient sum", fcs == expected_fcs,
              "got %s want %s" % (fcs, expected_fcs))

        check("gamma methods agree with series", tuple(res.gamma) == exp.coeffs,
              "closed %s series %s" % (res.gamma, exp.coeffs))

        row = next((r for r in FIXTURES if r.key == rep.key), None)
        if row is not None:
            check("fixture table row", res.gamma == row.gamma
                  and res.a_invariant == row.a_invariant
                  and rf_equal(series, row.series))

        if draws:
            rng = random.Random(seed)
            shapes = [("R", (dim - 3,)), ("RS", (dim - 4, 1)),
                      ("RST", (dim - 5, 1, 1)), ("RSTU", (dim - 6, 1, 1, 1))]
            bad_draw = None
            for n in range(draws):
                params = random_params(rep, rng)
                for which, exps in shapes:
                    if sigma_sum_raw(which, exps, params) != \
                            sigma_sum_schur(which, exps, params):
                        bad_draw = (n, which)
                        break
                if bad_draw:
                    break
            check("weight sum identities (%d draws)" % draws, bad_draw is None,
                  "draw %s arity %s" % bad_draw if bad_draw else "")

    return EXIT_VERIFY if failures else EXIT_OK


def cmd_verify(args, out=None):
    out = out or sys.stdout
    rep = parse_rep(args.spec)
    return _verify_rep(rep, args.max_degree, args.draws, args.seed,
                       args.threads, out)


def cmd_table(args, out=None):
    out = out or sys.stdout
    bad = 0
    for row in FIXTURES:
        rep = parse_rep(row.key)
        series = hilbert_series(rep, threads=args.threads)
        res = gammas(rep)
        problems = []
        if not rf_equal(series, row.series):
            problems.append("series %r vs %r" % (series, row.series))
        if res.gamma != row.gamma:
            problems.append("gamma %s vs %s" %
                            (list(map(str, res.gamma)), list(map(str, row.gamma))))
        if res.a_invariant != row.a_invariant:
            problems.append("a %d vs %d" % (res.a_invariant, row.a_invariant))
        if problems:
            bad += 1
            out.write("%-6s DIFF %s\n" % (row.key, "; ".join(problems)))
        else:
            out.write("%-6s OK\n" % row.key)
    out.write("%d/%d rows match\n" % (len(FIXTURES) - bad, len(FIXTURES)))
    return EXIT_VERIFY if bad else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sl2hilb",
        description="Hilbert series and Laurent data of SL2 invariant rings")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, spec=True):
        if spec:
            p.add_argument("spec", help="representation, e.g. V6, 2V3+V4, '2,3,3'")
        p.add_argument("--format", choices=["text", "json", "latex"],
                       default="text")
        p.add_argument("--threads", type=int, default=None)
        p.add_argument("--no-cache", action="store_true",
                       help="skip the result cache")

    p = sub.add_parser("series", help="exact Hilbert series")
    common(p)
    p.add_argument("--terms", type=int, default=0,
                   help="also print this many leading coefficients")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("expand", help="leading series coefficients")
    common(p)
    p.add_argument("--terms", type=int, default=10)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("gamma", help="Laurent coefficients and a-invariant")
    common(p)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("verify", help="oracle and identity checks")
    common(p)
    p.add_argument("--max-degree", type=int, default=20)
    p.add_argument("--draws", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="recompute the shipped fixture table")
    common(p, spec=False)
    p.set_defaults(func=cmd_table)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except RepParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except SeriesConsistencyError as exc:
        print("internal error: %s" % exc, file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
