"""Command-line front end.

Exit codes: 0 success, 1 unreadable input, 2 generic instability,
3 bad flags or parameters, 4 a verify check failed, 5 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (BudgetExhausted, GenericInstability, ParseError, ShiftlabError)
from .exterior import exterior_shift
from .homology import betti, reduced_betti
from .io import read_complex
from .linalg import ShiftConfig, default_prime, is_prime
from .minors import contract, is_admissible, is_minor
from .obstruction import smith_class, vk_vanishes_Z
from .rigidity import is_generically_rigid, rigidity_rank, stress_space_dim
from .symmetric import symmetric_shift
from .verify import CHECKS, run_check

EXIT_PARSE, EXIT_INSTABLE, EXIT_FLAGS, EXIT_CHECK, EXIT_BUDGET = 1, 2, 3, 4, 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_FLAGS, f"{self.prog}: error: {message}\n")


def _emit(obj) -> None:
    print(json.dumps(obj))


def _config(args) -> ShiftConfig:
    p = args.prime if args.prime is not None else default_prime()
    if not is_prime(p) or p >= 2**31:
        raise ValueError(f"--prime {p} is not a prime below 2^31")
    return ShiftConfig(prime=p, seeds=(args.seed, args.seed + 1))


def cmd_shift(args) -> int:
    K = read_complex(args.file)
    cfg = _config(args)
    fn = exterior_shift if args.variant == "ext" else symmetric_shift
    res = fn(K, cfg)
    _emit({"input": args.file, **res.to_json()})
    return 0


def cmd_fvector(args) -> int:
    K = read_complex(args.file)
    _emit({"f_vector": list(K.f_vector())})
    return 0


def cmd_betti(args) -> int:
    K = read_complex(args.file)
    p = _config(args).prime
    _emit({"prime": p, "reduced_betti": list(betti(K, p)), "reduced_betti_minus1": reduced_betti(K, -1, p)})
    return 0


def cmd_rigidity(args) -> int:
    G = read_complex(args.file)
    cfg = _config(args)
    _emit({"dim": args.dim, "rank": rigidity_rank(G, args.dim, cfg),
           "rigid": is_generically_rigid(G, args.dim, cfg),
           "stress_dim": stress_space_dim(G, args.dim, cfg)})
    return 0


def cmd_obstruction(args) -> int:
    K = read_complex(args.file)
    if args.kind == "smith":
        res = smith_class(K, args.m)
        _emit({"kind": "smith", "m": args.m, "vanishes": res.vanishes, "beyond_dimension": res.exhausted})
    else:
        _emit({"kind": "vk", "m": args.m, "vanishes": vk_vanishes_Z(K, args.m),
               "convention": "solved over Z in " + ("symmetric" if args.m % 2 == 0 else "antisymmetric") + " orbit cochains"})
    return 0


def cmd_minor(args) -> int:
    K = read_complex(args.file)
    H = read_complex(args.target)
    w = is_minor(H, K, budget=args.budget)
    _emit({"minor": w is not None, "witness": w.to_json() if w else None})
    return 0


def cmd_contract(args) -> int:
    K = read_complex(args.file)
    out = contract(K, args.u, args.v)
    _emit({"admissible": is_admissible(K, args.u, args.v), "n": out.n,
           "facets": [list(f) for f in out.facets if f], "f_vector": list(out.f_vector())})
    return 0


def cmd_verify(args) -> int:
    names = list(CHECKS) if args.name == "all" else [args.name]
    if any(n not in CHECKS for n in names):
        raise ValueError(f"unknown check {args.name!r}; known: all, {', '.join(CHECKS)}")
    failed = False
    for name in names:
        res = run_check(name, args.seed)
        _emit(res.to_json())
        sys.stdout.flush()
        failed |= not res.ok
    return EXIT_CHECK if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="shiftlab", description="Algebraic shifting of simplicial complexes.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_field(p):
        p.add_argument("--prime", type=int, default=None, help="field characteristic (default: $SHIFTLAB_PRIME or 2^31-1)")
        p.add_argument("--seed", type=int, default=1, help="first seed of the generic pair")

    p = sub.add_parser("shift", help="shift a complex")
    p.add_argument("file")
    p.add_argument("--variant", choices=["ext", "sym"], default="ext")
    with_field(p)
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("fvector", help="print the f-vector")
    p.add_argument("file")
    p.set_defaults(func=cmd_fvector)

    p = sub.add_parser("betti", help="reduced Betti numbers over F_p")
    p.add_argument("file")
    with_field(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("rigidity", help="generic rigidity of a graph")
    p.add_argument("file")
    p.add_argument("--dim", type=int, required=True)
    with_field(p)
    p.set_defaults(func=cmd_rigidity)

    p = sub.add_parser("obstruction", help="Smith class or van Kampen obstruction")
    p.add_argument("kind", choices=["smith", "vk"])
    p.add_argument("file")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_obstruction)

    p = sub.add_parser("minor", help="search for the target as a minor of the input")
    p.add_argument("file")
    p.add_argument("--target", required=True)
    p.add_argument("--budget", type=int, default=20000)
    p.set_defaults(func=cmd_minor)

    p = sub.add_parser("contract", help="identify vertex u with vertex v")
    p.add_argument("file")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("verify", help="run a named check (or 'all')")
    p.add_argument("name")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help or a bad flag
        return exc.code if isinstance(exc.code, int) else EXIT_FLAGS
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"shiftlab: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GenericInstability as exc:
        print(f"shiftlab: {exc}", file=sys.stderr)
        return EXIT_INSTABLE
    except BudgetExhausted as exc:
        print(f"shiftlab: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, ShiftlabError) as exc:
        print(f"shiftlab: {exc}", file=sys.stderr)
        return EXIT_FLAGS


if __name__ == "__main__":
    sys.exit(main())
