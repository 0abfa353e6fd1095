"""Batch command-line surface.

Subcommands: expand, convert, product, coproduct, fillings, mnrule, verify.
Compositions are written as comma-separated parts (1,2,1,1); set compositions
as slash-separated blocks (3,4/1,5/2).  Exit codes: 0 success, 1 domain
error, 2 verification failure.
"""

import argparse
import json
import sys
from fractions import Fraction

from .combinat import (
    Composition, Partition, SetComposition, sort_composition,
    NATURAL_DESCENDING, NATURAL_ASCENDING, DTILDE, part_order_from_ranking,
)
from .formal import FormalSum, BasisMismatch
from . import qsym, ncqsym, mn, fillings, suites


class CommandError(ValueError):
    pass


# ---------------------------------------------------------------------------
# parsing and rendering

def parse_composition(text):
    if text in ("", "-"):
        return Composition()
    try:
        return Composition(int(p) for p in text.split(","))
    except ValueError as exc:
        raise CommandError("bad composition %r: %s" % (text, exc))


def parse_set_composition(text):
    if text in ("", "-"):
        return SetComposition()
    try:
        return SetComposition((int(x) for x in block.split(","))
                              for block in text.split("/"))
    except ValueError as exc:
        raise CommandError("bad set composition %r: %s" % (text, exc))


def resolve_order(args):
    name = getattr(args, "order", "descending") or "descending"
    if name == "descending":
        return NATURAL_DESCENDING
    if name == "ascending":
        return NATURAL_ASCENDING
    if name == "custom-file":
        path = getattr(args, "order_file", None)
        if not path:
            raise CommandError("--order custom-file requires --order-file")
        with open(path) as handle:
            ranking = [int(line.split("#")[0]) for line in handle
                       if line.split("#")[0].strip()]
        order = part_order_from_ranking(ranking, name="custom:%s" % path)
        qsym.register_order(order)
        return order
    raise CommandError("unknown order %r" % name)


def coeff_str(coeff):
    coeff = Fraction(coeff)
    if coeff.denominator == 1:
        return str(coeff.numerator)
    return "%d/%d" % (coeff.numerator, coeff.denominator)


def index_json(idx):
    if isinstance(idx, SetComposition):
        return [sorted(b) for b in idx]
    return list(idx)


def _tag_parts(basis):
    name, _, order = basis.partition(":")
    return name, order


def sum_json(x):
    name, order = _tag_parts(x.basis)
    out = {"basis": name}
    if order:
        out["order"] = order
    out["terms"] = [{"index": index_json(i), "coeff": coeff_str(c)}
                    for i, c in x.items()]
    return out


def sum_text(x):
    if not x.terms:
        return "0"
    name, _ = _tag_parts(x.basis)
    bits = []
    for idx, coeff in x.items():
        bits.append("%s*%s[%s]" % (coeff_str(coeff), name, idx))
    return " + ".join(bits)


def tensor_text(ts):
    if not ts.terms:
        return "0"
    name, _ = _tag_parts(ts.basis)
    return " + ".join("%s*%s[%s] (x) %s[%s]" % (coeff_str(c), name, a, name, b)
                      for (a, b), c in ts.items())


def tensor_json(ts):
    name, order = _tag_parts(ts.basis)
    out = {"basis": name}
    if order:
        out["order"] = order
    out["terms"] = [{"left": index_json(a), "right": index_json(b),
                     "coeff": coeff_str(c)} for (a, b), c in ts.items()]
    return out


def emit(args, text, payload):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


QSYM_BASES = ("M", "F", "P", "Ptilde", "m", "p")
NC_BASES = ("M_nc", "P_nc")


def basis_tag(name, args):
    if name in ("M", "F", "m", "p"):
        return name
    if name in ("P", "Ptilde"):
        return "%s:%s" % (name, resolve_order(args).name)
    if name == "M_nc":
        return ncqsym.M_NC
    if name == "P_nc":
        return ncqsym.P_nc(DTILDE)
    raise CommandError("unknown basis %r" % name)


def parse_element(args, basis_name, text):
    tag = basis_tag(basis_name, args)
    if basis_name in NC_BASES:
        return FormalSum(tag, [(parse_set_composition(text), 1)])
    idx = parse_composition(text)
    if basis_name in ("m", "p"):
        idx = Partition(sort_composition(idx))
    return FormalSum(tag, [(idx, 1)])


# ---------------------------------------------------------------------------
# subcommands

def cmd_expand(args):
    x = parse_element(args, args.basis, args.index)
    if args.basis in NC_BASES:
        if args.to in ("M_nc",):
            result = x if args.basis == "M_nc" else x.map_linear(
                lambda p: ncqsym.P_to_M_nc(p, DTILDE), basis=ncqsym.M_NC)
        elif args.to in ("M", "F"):
            result = ncqsym.project_rho(x)
            if args.to == "F":
                result = qsym.from_M(result, qsym.F)
        else:
            raise CommandError("cannot expand %s into %s" % (args.basis, args.to))
    else:
        result = qsym.convert(x, basis_tag(args.to, args))
    emit(args, sum_text(result), sum_json(result))
    return 0


def cmd_convert(args):
    if args.infile == "-":
        data = json.load(sys.stdin)
    else:
        with open(args.infile) as handle:
            data = json.load(handle)
    try:
        name = data["basis"]
        if name in NC_BASES:
            raise CommandError("convert handles the commuting bases; "
                               "use expand for set-composition elements")
        tag = name if name in ("M", "F", "m", "p") else \
            "%s:%s" % (name, data.get("order", "descending"))
        terms = []
        for term in data["terms"]:
            idx = Composition(term["index"])
            if name in ("m", "p"):
                idx = Partition(idx)
            terms.append((idx, Fraction(term["coeff"])))
        x = FormalSum(tag, terms)
    except (KeyError, TypeError) as exc:
        raise CommandError("malformed element: %s" % exc)
    result = qsym.convert(x, basis_tag(args.to, args))
    emit(args, sum_text(result), sum_json(result))
    return 0


def cmd_product(args):
    if args.basis in NC_BASES:
        if args.basis != "P_nc":
            raise CommandError("the set-composition product is defined on P_nc only")
        x = parse_element(args, args.basis, args.left)
        y = parse_element(args, args.basis, args.right)
        result = ncqsym.product_nc(x, y)
    else:
        x = parse_element(args, args.basis, args.left)
        y = parse_element(args, args.basis, args.right)
        result = qsym.product(x, y)
    emit(args, sum_text(result), sum_json(result))
    return 0


def cmd_coproduct(args):
    x = parse_element(args, args.basis, args.index)
    if args.basis in NC_BASES:
        if args.basis != "P_nc":
            raise CommandError("the set-composition coproduct is defined on P_nc only")
        ts = ncqsym.coproduct_nc(x)
    else:
        ts = qsym.coproduct(x)
    emit(args, tensor_text(ts), tensor_json(ts))
    return 0


def filling_json(f):
    if isinstance(f, fillings.SetFilling):
        return {"rows": [{"block": sorted(b), "col": c} for b, c in f]}
    return {"rows": [{"value": v, "col": c} for v, c in f]}


def cmd_fillings(args):
    if args.kind == "A":
        found = fillings.enumerate_A(Partition(sort_composition(
            parse_composition(args.index))))
    elif args.kind == "SD":
        found = fillings.enumerate_SD(parse_composition(args.index),
                                      resolve_order(args))
    elif args.kind == "LDD":
        found = fillings.enumerate_LDD(parse_set_composition(args.index), DTILDE)
    else:
        raise CommandError("unknown filling kind %r" % args.kind)
    ordered = sorted(found, key=lambda f: tuple((tuple(sorted(v)), c)
                                                if isinstance(v, frozenset) else (v, c)
                                                for v, c in f))
    if args.format == "json":
        print(json.dumps([filling_json(f) for f in ordered], sort_keys=True))
    else:
        print("%d filling(s)" % len(ordered))
        for f in ordered:
            print(fillings.render_filling(f))
            print()
    return 0


def cmd_mnrule(args):
    alpha = parse_composition(args.index)
    expansion = mn.P_to_F(alpha)
    details = []
    from .combinat import interval, runs_C, runs_I
    for beta in sorted(interval(runs_I(alpha), runs_C(alpha)),
                       key=Composition.sort_key):
        tup, height = mn.build_D(beta, alpha)
        details.append({
            "beta": list(beta),
            "height": height,
            "sdr": tup.sdr_count(),
            "coefficient": coeff_str((-1) ** height * tup.sdr_count()),
            "ribbons": [sorted(map(list, r)) for r in tup if r],
        })
    if args.format == "json":
        print(json.dumps({"expansion": sum_json(expansion), "details": details},
                         sort_keys=True))
    else:
        print("P[%s] = %s" % (alpha, sum_text(expansion)))
        for d in details:
            print("  beta=(%s)  ht=%d  |SDR|=%d  coeff=%s" %
                  (",".join(map(str, d["beta"])), d["height"], d["sdr"],
                   d["coefficient"]))
    return 0


def cmd_verify(args):
    names = list(suites.SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in suites.SUITES:
            raise CommandError("unknown suite %r; choose from %s"
                               % (name, ", ".join(suites.SUITES)))
    failed = False
    for name in names:
        failures = suites.run_suite(name, args.max_weight)
        status = "PASS" if not failures else "FAIL"
        print("%s: %s" % (name, status))
        if failures:
            failed = True
            print("  first counterexample: %s" % failures[0])
    return 2 if failed else 0


# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="qpow",
        description="Exact computations in quasisymmetric powersum bases.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, order=True, fmt=True):
        if order:
            p.add_argument("--order", default="descending",
                           choices=["descending", "ascending", "custom-file"])
            p.add_argument("--order-file", help="ranking file for custom-file order")
        if fmt:
            p.add_argument("--format", default="text", choices=["text", "json"])

    p = sub.add_parser("expand", help="expand one basis element in another basis")
    p.add_argument("--basis", required=True, choices=QSYM_BASES + NC_BASES)
    p.add_argument("--index", required=True)
    p.add_argument("--to", required=True, choices=QSYM_BASES + NC_BASES)
    add_common(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("convert", help="convert a JSON element between bases")
    p.add_argument("--in", dest="infile", default="-", help="JSON file or - for stdin")
    p.add_argument("--to", required=True, choices=("M", "F", "P", "Ptilde"))
    add_common(p)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("product", help="multiply two basis elements")
    p.add_argument("--basis", required=True,
                   choices=("M", "F", "P", "Ptilde", "P_nc"))
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    add_common(p)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("coproduct", help="coproduct of a basis element")
    p.add_argument("--basis", required=True,
                   choices=("M", "F", "P", "Ptilde", "P_nc"))
    p.add_argument("--index", required=True)
    add_common(p)
    p.set_defaults(func=cmd_coproduct)

    p = sub.add_parser("fillings", help="enumerate fillings")
    p.add_argument("--kind", required=True, choices=("A", "SD", "LDD"))
    p.add_argument("--index", required=True)
    add_common(p)
    p.set_defaults(func=cmd_fillings)

    p = sub.add_parser("mnrule", help="powersum to fundamental change of basis")
    p.add_argument("--index", required=True)
    add_common(p, order=False)
    p.set_defaults(func=cmd_mnrule)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="all")
    p.add_argument("--max-weight", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CommandError, BasisMismatch, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
