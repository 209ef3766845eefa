"""Command line interface: ``latmark <command> <latticefile> [options]``.

Exit codes: 0 success, 1 verification failed, 2 input error, 3 fiber cap
exceeded (see ``LATMARK_MAX_FIBER``).
"""

from __future__ import annotations

import argparse
import sys

from .binomial import monomial_str
from .ci import block_matrix, is_binomial_ci
from .errors import FiberTooLargeError, LatmarkError, NotInLatticeError
from .io import format_binomial, format_monomial, format_vector, read_binomials, read_lattice, to_json
from .pure import decompose, verify_pure_markov
from .synthesis import (
    fiber_descriptor,
    generating_set_failures,
    indispensables_general,
    markov_basis_general,
    markov_failures,
)

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


def _sigma(sigma) -> str:
    return "{" + ",".join(str(i + 1) for i in sigma) + "}"


def _names(L):
    """Variable names of the coordinates outside sigma."""
    return [f"x{i + 1}" for i in decompose(L).complement]


def _card(x) -> str:
    return "infinite" if x == float("inf") else str(x)


def cmd_decompose(L, args, out):
    d = decompose(L)
    if args.json:
        return print(to_json(d), file=out)
    print(f"sigma: {_sigma(d.sigma)}", file=out)
    print(f"witness: {format_vector(d.witness) if d.witness else 'none'}", file=out)
    print(f"rank: {L.rank} = {d.rank_projected} (projected) + {d.rank_pure} (pure)", file=out)
    print("pure basis:", file=out)
    for v in d.pure_basis:
        print(f"  {format_vector(v)}", file=out)
    print("projected basis:", file=out)
    for v in d.projected_basis:
        print(f"  {format_vector(v)}", file=out)
    q = d.quotient
    size = "infinite" if q.cardinality is None else str(q.cardinality)
    print(f"quotient: factors {list(q.factors)}, free rank {q.free_rank}, size {size}", file=out)
    cmd_hilbert(L, args, out, d)


def cmd_hilbert(L, args, out, d=None):
    d = d or decompose(L)
    if args.json and args.command == "hilbert":
        return print(to_json(d.hilbert), file=out)
    print("hilbert basis:", file=out)
    for h in d.hilbert:
        print(f"  {format_monomial(h)}", file=out)


def cmd_markov(L, args, out):
    r = markov_basis_general(L, args.seed)
    if args.json:
        return print(to_json(r), file=out)
    print(f"mu: {r.mu}", file=out)
    print("basis:", file=out)
    for B in r.basis:
        print(f"  {format_binomial(B)}", file=out)
    print(f"pure part: {len(r.pure_part)} binomials", file=out)
    print("classes (projected fibers):", file=out)
    names = _names(L)
    for c in r.class_multiset:
        fiber = ", ".join(monomial_str(v, names) for v in c.projected_fiber)
        print(f"  t={c.t_value} size={_card(c.class_cardinality)} {{{fiber}}}", file=out)
    print(f"universal markov basis finite: {'yes' if r.universal_markov_finite else 'no'}", file=out)
    print(f"binomial complete intersection: {'yes' if r.is_ci else 'no'}", file=out)


def cmd_verify(L, args, out):
    if not args.set:
        raise LatmarkError("verify needs --set FILE")
    S = read_binomials(args.set, L.ambient_dim)
    if args.mode == "generating":
        failures = generating_set_failures(L, S)
    elif args.mode == "markov":
        failures = markov_failures(L, S)
    else:
        d = decompose(L)
        if d.rank_projected:
            failures = ["lattice is not pure"]
        else:
            for B in S:
                if B.vector not in L:
                    raise NotInLatticeError(f"{B}: not a lattice element")
            failures = [] if verify_pure_markov(d.pure_lattice, S, d.sigma) else ["not a Markov basis of the pure lattice"]
    if args.json:
        print(to_json(None, ok=not failures, failures=failures), file=out)
    elif failures:
        for f in failures:
            print(f"FAIL: {f}", file=out)
    else:
        print("OK", file=out)
    return EXIT_FALSE if failures else EXIT_OK


def cmd_fibers(L, args, out):
    if not args.monomial:
        raise LatmarkError("fibers needs --monomial e1,e2,...")
    try:
        u = tuple(int(x) for x in args.monomial.replace(" ", "").split(","))
    except ValueError:
        raise LatmarkError(f"bad monomial {args.monomial!r}") from None
    fd = fiber_descriptor(L, u)
    if args.json:
        return print(to_json(fd), file=out)
    print(f"minimal generators ({len(fd.min_generators)}):", file=out)
    for v in fd.min_generators:
        print(f"  {format_monomial(v)}", file=out)
    print(f"projected fiber ({len(fd.projected_fiber)}):", file=out)
    names = _names(L)
    for p, cls, c in zip(fd.projected_fiber.elements, fd.sim_classes, fd.gamma_labels):
        members = ", ".join(monomial_str(v) for v in cls)
        print(f"  {monomial_str(p, names)}  component {c}  class {{{members}}}", file=out)
    print(f"components: {fd.t_value}", file=out)


def cmd_ci(L, args, out):
    r = is_binomial_ci(L)
    if args.json:
        return print(to_json(r), file=out)
    print(f"binomial complete intersection: {'yes' if r.is_ci else 'no'}", file=out)
    if r.certificate_matrix is not None:
        print("certificate (mixed dominating basis of the projected lattice):", file=out)
        for row in r.certificate_matrix:
            print(f"  {format_vector(row)}", file=out)
        print("block presentation [A M; C 0] (sigma columns first):", file=out)
        for row in block_matrix(r):
            print(f"  {format_vector(row)}", file=out)


def cmd_indispensable(L, args, out):
    bins, mons = indispensables_general(L)
    if args.json:
        return print(to_json(None, binomials=bins, monomials=mons), file=out)
    print("binomials: " + ("none" if not bins else "; ".join(str(B) for B in bins)), file=out)
    print("monomials: " + ("none" if not mons else ", ".join(monomial_str(v) for v in mons)), file=out)


COMMANDS = {
    "decompose": cmd_decompose,
    "markov": cmd_markov,
    "verify": cmd_verify,
    "fibers": cmd_fibers,
    "ci": cmd_ci,
    "indispensable": cmd_indispensable,
    "hilbert": cmd_hilbert,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="latmark", description="Markov bases of lattice ideals")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("lattice", help="lattice file: header 'n m' then m rows")
    p.add_argument("--set", help="binomial set file (verify)")
    p.add_argument("--mode", choices=["generating", "markov", "pure"], default="markov")
    p.add_argument("--monomial", help="exponent vector, comma separated (fibers)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=None, help="tie-break seed (markov)")
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        L = read_lattice(args.lattice)
        code = COMMANDS[args.command](L, args, out)
    except NotInLatticeError as exc:
        print(f"error: not a lattice element: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FiberTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (LatmarkError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return code or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
