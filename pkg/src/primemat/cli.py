"""``primemat`` command line.

Exit status: 0 success (or "true" for boolean queries), 1 domain error (or
"false"), 2 usage or parse error. Results go to stdout, diagnostics to
stderr. The default output format comes from ``PRIMEMAT_FORMAT`` (``text``
if unset).
"""
import argparse
import os
import random
import sys
from typing import List

from . import arith, families, gaussian, mdcrt, normal_forms
from .core import IntMatrix, determinant, format_matrix
from .errors import DomainError, ParseError
from .io import (
    dumps,
    parse_matrix,
    parse_matrix_list,
    parse_vector,
    parse_vector_list,
    read_source,
)
from .primes import PROBABLE, certainty

FORMAT_ENV = "PRIMEMAT_FORMAT"


class _Out:
    def __init__(self, fmt: str, stdout, stderr):
        self.fmt = fmt
        self.stdout = stdout
        self.stderr = stderr

    @property
    def json(self) -> bool:
        return self.fmt == "json"

    def emit(self, json_obj, text: str) -> None:
        print(dumps(json_obj) if self.json else text, file=self.stdout)

    def warn(self, msg: str) -> None:
        print(f"primemat: warning: {msg}", file=self.stderr)


def _matrices_text(ms) -> str:
    return "\n\n".join(format_matrix(m) for m in ms)


def _labelled(**ms) -> str:
    return "\n".join(f"{k}:\n{format_matrix(m)}" for k, m in ms.items())


def _matrix(arg: str, stdin) -> IntMatrix:
    return parse_matrix(read_source(arg, stdin))


def _bool(out: _Out, value: bool, json_obj) -> int:
    out.emit(json_obj, "true" if value else "false")
    return 0 if value else 1


def _probable(out: _Out, n: int, obj: dict) -> None:
    if certainty(n) == PROBABLE:
        obj["certainty"] = PROBABLE
        if not out.json:
            out.warn(f"primality of {n} is probable, not proven")


def cmd_det(args, out, stdin):
    d = determinant(_matrix(args.matrix, stdin))
    out.emit({"det": d}, str(d))


def cmd_hnf(args, out, stdin):
    dec = normal_forms.hnf(_matrix(args.matrix, stdin))
    out.emit(dec.to_json(), _labelled(h=dec.h, u=dec.u))


def cmd_snf(args, out, stdin):
    dec = normal_forms.snf(_matrix(args.matrix, stdin))
    out.emit(dec.to_json(), _labelled(u=dec.u, **{"lambda": dec.lam}, v=dec.v))


def cmd_canon(args, out, stdin):
    h = normal_forms.canonical_form(_matrix(args.matrix, stdin))
    out.emit(h.to_json(), format_matrix(h))


def cmd_is_prime(args, out, stdin):
    a = _matrix(args.matrix, stdin)
    value = arith.is_prime_matrix(a)
    n = abs(determinant(a))
    obj = {"prime": value, "abs_det": n, "certainty": certainty(n)}
    _probable(out, n, obj)
    return _bool(out, value, obj)


def cmd_coprime(args, out, stdin):
    value = arith.are_coprime(_matrix(args.a, stdin), _matrix(args.b, stdin))
    return _bool(out, value, {"coprime": value})


def cmd_gcld(args, out, stdin):
    g = arith.gcld([_matrix(m, stdin) for m in args.matrices])
    out.emit(g.to_json(), format_matrix(g))


def cmd_lcrm(args, out, stdin):
    m = arith.lcrm([_matrix(m, stdin) for m in args.matrices])
    out.emit(m.to_json(), format_matrix(m))


def cmd_bezout(args, out, stdin):
    w = arith.bezout(_matrix(args.a, stdin), _matrix(args.b, stdin))
    out.emit(w.to_json(), _labelled(p=w.p, q=w.q))


def cmd_factorize(args, out, stdin):
    f = arith.prime_factorize(_matrix(args.matrix, stdin))
    if f.is_unit:
        out.emit(f.to_json(), "unit\n" + format_matrix(f.unit))
        return
    if f.certainty == PROBABLE and not out.json:
        out.warn("some prime factors are probable primes")
    out.emit(f.to_json(), _matrices_text(f.factors))


def _prime_list(text: str) -> List[int]:
    try:
        return [int(p) for p in text.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"bad prime list {text!r}") from None


def cmd_gen_family(args, out, stdin):
    primes = []
    if args.prime is not None:
        primes.append(args.prime)
    if args.primes:
        primes.extend(p for p in _prime_list(args.primes) if p not in primes)
    if not primes:
        raise ParseError("give --prime and/or --primes")
    counts = {} if args.count is None else {p: args.count for p in primes}
    ms = families.build_coprime_family(args.dim, primes, counts)
    spec = {"primes": primes, "per_prime_count": "all" if args.count is None else args.count}
    manifest = {"dim": args.dim, "spec": spec, "count": len(ms)}
    out.emit({"manifest": manifest, "matrices": [m.to_json() for m in ms]}, _matrices_text(ms))


def cmd_gaussian(args, out, stdin):
    zs = [gaussian.parse_gaussian(z) for z in args.z]
    op = args.op
    need = 2 if op == "coprime" else 1
    if len(zs) != need:
        raise ParseError(f"gaussian {op} takes {need} argument(s)")
    z = zs[0]
    if op == "rep":
        m = gaussian.matrix_rep(z)
        out.emit(m.to_json(), format_matrix(m))
    elif op == "norm":
        n = gaussian.norm(z)
        out.emit({"norm": n}, str(n))
    elif op == "is-prime":
        rep = gaussian.primality_relation_report(z)
        obj = rep.to_json()
        _probable(out, z.norm(), obj)
        return _bool(out, rep.gaussian_prime, obj)
    elif op == "coprime":
        value = gaussian.gaussian_coprime(zs[0], zs[1])
        return _bool(out, value, {"coprime": value})
    elif op == "factorize":
        fs = gaussian.gaussian_factorize(z)
        out.emit({"factors": [f.to_json() for f in fs]}, " ".join(f"({f})" for f in fs))


def cmd_reduce(args, out, stdin):
    m = _matrix(args.modulus, stdin)
    v = parse_vector(read_source(args.vector, stdin))
    r = mdcrt.reduce(v, m)
    out.emit({"r": list(r)}, " ".join(map(str, r)))


def cmd_crt(args, out, stdin):
    moduli = parse_matrix_list(read_source(args.moduli, stdin))
    plan = mdcrt.CrtPlan(moduli)
    if args.self_test:
        rng = random.Random(args.seed)
        lcrm_red = mdcrt.Reducer(plan.lcrm_modulus)
        bound = max(abs(x) for row in plan.lcrm_modulus.rows for x in row) * plan.dim
        trials = []
        ok = True
        for _ in range(args.trials):
            v = lcrm_red(tuple(rng.randint(-bound, bound) for _ in range(plan.dim)))
            rems = [red(v) for red in plan.reducers]
            sol = plan.solve(rems)
            ok = ok and sol.n == v
            trials.append({"v": list(v), "remainders": [list(r) for r in rems], "n": list(sol.n)})
        obj = {"ok": ok, "lcrm": plan.lcrm_modulus.to_json(), "trials": trials}
        text = f"{'ok' if ok else 'FAILED'}: {args.trials} round trips\nlcrm:\n{format_matrix(plan.lcrm_modulus)}"
        out.emit(obj, text)
        return 0 if ok else 1
    if args.remainders is None:
        raise ParseError("crt needs --remainders or --self-test")
    rems = parse_vector_list(read_source(args.remainders, stdin))
    sol = plan.solve(rems)
    out.emit(sol.to_json(), " ".join(map(str, sol.n)) + "\nlcrm:\n" + format_matrix(sol.lcrm_modulus))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    default_fmt = os.environ.get(FORMAT_ENV, "text")
    if default_fmt not in ("json", "text"):
        default_fmt = "text"
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS,
                        help=f"output format (default: ${FORMAT_ENV} or text)")

    p = _Parser(prog="primemat", description=__doc__.splitlines()[0], parents=[common])
    p.set_defaults(format=default_fmt)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    mat_help = 'matrix: "1 0; 2 3", JSON, a file path, @file, or - for stdin'

    def one(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("matrix", help=mat_help)
        sp.set_defaults(func=fn)

    one("det", cmd_det, "determinant")
    one("hnf", cmd_hnf, "column Hermite normal form A = H U")
    one("snf", cmd_snf, "Smith normal form A = U Lambda V")
    one("canon", cmd_canon, "canonical representative of the right-associate class")
    one("is-prime", cmd_is_prime, "is |det A| a rational prime")
    one("factorize", cmd_factorize, "prime matrix factorization")

    for name, fn, help_ in (("coprime", cmd_coprime, "left coprimality of two matrices"),
                            ("bezout", cmd_bezout, "P, Q with A P + B Q = I")):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("a", help=mat_help)
        sp.add_argument("b", help=mat_help)
        sp.set_defaults(func=fn)

    for name, fn, help_ in (("gcld", cmd_gcld, "greatest common left divisor"),
                            ("lcrm", cmd_lcrm, "least common right multiple")):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("matrices", nargs="+", help=mat_help)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("gen-family", parents=[common], help="pairwise-coprime prime matrices")
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--prime", type=int)
    sp.add_argument("--primes", help="comma-separated primes")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--count", type=int, help="forms per prime")
    g.add_argument("--all", action="store_true", help="every form per prime (default)")
    sp.set_defaults(func=cmd_gen_family)

    sp = sub.add_parser("gaussian", parents=[common], help="Gaussian integer operations")
    sp.add_argument("op", choices=("rep", "norm", "is-prime", "coprime", "factorize"))
    sp.add_argument("z", nargs="+", help='Gaussian integer such as "4+5j"')
    sp.set_defaults(func=cmd_gaussian)

    sp = sub.add_parser("reduce", parents=[common], help="remainder of a vector modulo a matrix")
    sp.add_argument("--modulus", required=True, help=mat_help)
    sp.add_argument("--vector", required=True)
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("crt", parents=[common], help="reconstruct a vector from its remainders")
    sp.add_argument("--moduli", required=True, help="JSON list / family output / blank-line separated text")
    sp.add_argument("--remainders", help="JSON list of vectors or one vector per line")
    sp.add_argument("--self-test", action="store_true", help="round-trip random vectors instead")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=10)
    sp.set_defaults(func=cmd_crt)
    return p


def run(argv=None, stdout=None, stderr=None, stdin=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    out = _Out(args.format, stdout, stderr)
    try:
        rc = args.func(args, out, stdin)
    except ParseError as e:
        print(f"primemat: error: {e}", file=stderr)
        return 2
    except DomainError as e:
        print(f"primemat: {e}", file=stderr)
        return 1
    except ValueError as e:
        # remaining ValueErrors are argument-contract violations (bad pivot row, empty list...)
        print(f"primemat: error: {e}", file=stderr)
        return 2
    return rc or 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
