"""Command-line interface.

Exit codes: 0 success, 1 domain error (including a failed axiom or sphere
check), 2 input error, 3 resource error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import finite, homology as hq, monodromy as mono, qhomology, torus
from .constructors import from_name, load_quandle
from .errors import InputError, QuandleError
from .free import parse as parse_free


def _json_arg(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON: {text!r}") from exc


def _slope(text: str) -> torus.Slope:
    text = text.strip()
    return torus.Slope.from_json("I" if text == "I" else _json_arg(text))


def _homology_element(text: str, ring: str, genus: int | None, reduced: bool):
    value = _json_arg(text)
    if isinstance(value, dict):
        x = hq.HomologyElement.from_json(value)
    elif isinstance(value, list):
        x = hq.element(value, ring, genus)
    else:
        raise InputError(f"homology element must be a coordinate list or object, got {text!r}")
    return hq.reduce(x) if reduced else x


def _load_json_file(path: str):
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError as exc:
        raise InputError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _raw_table(spec: str):
    """The operation table behind a quandle argument, without validating it."""
    if spec.endswith(".json") or Path(spec).is_file():
        data = _load_json_file(spec)
        if not isinstance(data, dict) or "rt" not in data:
            raise InputError("quandle JSON needs an 'rt' table")
        return data["rt"]
    return from_name(spec).rt


def _datum(path: str) -> mono.MonodromyDatum:
    return mono.MonodromyDatum.from_json(_load_json_file(path))


# -- subcommands -------------------------------------------------------------

def cmd_axioms(args):
    report = finite.check_axioms(_raw_table(args.quandle))
    payload = {"ok": report.ok, "truncated": report.truncated,
               "violations": [{"axiom": a, "witness": list(w)} for a, w in report.violations]}
    return payload, str(report), 0 if report.ok else 1


def cmd_hom_count(args):
    src, tgt = load_quandle(args.source), load_quandle(args.target)
    cap = args.cap or finite.HOM_CAP
    if args.enumerate:
        homs = finite.enumerate_homs(src, tgt, cap=cap, threads=args.threads)
        payload = {"count": len(homs), "homs": [list(h.map) for h in homs]}
        text = "\n".join([str(len(homs))] + [" ".join(map(str, h.map)) for h in homs])
        return payload, text, 0
    count = finite.hom_count(src, tgt, cap=cap, threads=args.threads)
    return {"count": count}, str(count), 0


def cmd_torus_op(args):
    a, b = _slope(args.a), _slope(args.b)
    result = torus.op_right(a, b) if args.op == "rt" else torus.op_left(a, b)
    out = result.to_json()
    return out, json.dumps(out, separators=(",", ":")), 0


def cmd_hq_op(args):
    x = _homology_element(args.x, args.ring, args.genus, args.reduced)
    y = _homology_element(args.y, args.ring, args.genus, args.reduced)
    if args.reduced:
        z = hq.hd_right(x, y) if args.op == "rt" else hq.hd_left(x, y)
    else:
        z = hq.aq_right(x, y) if args.op == "rt" else hq.aq_left(x, y)
    return z.to_json(), json.dumps(list(z.coords), separators=(",", ":")), 0


def cmd_reduce(args):
    z = hq.reduce(_homology_element(args.x, args.ring, args.genus, False))
    return z.to_json(), json.dumps(list(z.coords), separators=(",", ":")), 0


def cmd_monodromy(args):
    d = _datum(args.file)
    t = d.target
    cap = args.cap or mono.ORBIT_CAP
    if args.action == "check":
        res = mono.sphere_check(d)
        payload = {"passed": res.passed, "residual": t.dump_group(res.residual), "note": res.note}
        text = "pass" if res.passed else "fail " + json.dumps(payload["residual"], separators=(",", ":"))
        return payload, text, 0 if res.passed else 1
    if args.action == "canonical":
        canon = mono.orbit_canonical(d, args.cyclic, args.conj, cap)
        payload = {"datum": canon.datum.to_json(), "orbit_size": canon.orbit_size}
        return payload, json.dumps(canon.datum.to_json(), sort_keys=True), 0
    if args.action == "invariants":
        report = mono.invariant_report(d, cap=cap)
        return report, "\n".join(f"{k}: {json.dumps(v, sort_keys=True)}" for k, v in sorted(report.items())), 0
    if args.action == "move":
        if args.random is not None:
            d = mono.random_moves(d, args.random, random.Random(args.seed))
        else:
            if args.index is None:
                raise InputError("move needs --index (or --random N)")
            d = mono.hurwitz_move(d, args.index, args.direction)
        return d.to_json(), json.dumps(d.to_json(), sort_keys=True), 0
    if args.action == "eval":
        if args.element is None:
            raise InputError("eval needs --element, e.g. 's0 ^ [g1+]'")
        value = mono.quandle_monodromy_eval(d, parse_free(args.element, len(d.cycles)))
        out = t.dump(value)
        return {"value": out}, json.dumps(out, separators=(",", ":")), 0
    raise InputError(f"unknown monodromy action {args.action!r}")


def cmd_qhomology(args):
    q = load_quandle(args.quandle)
    cap = args.cap or qhomology.DEGREE_CAP
    if args.coefficients is not None:
        group = qhomology.cohomology(q, args.n, args.coefficients, quandle=not args.rack, cap=cap)
    elif args.rack:
        group = qhomology.rack_homology(q, args.n, cap=cap)
    else:
        group = qhomology.quandle_homology(q, args.n, cap=cap)
    return group.to_json(), str(group), 0


def cmd_quotient(args):
    q = load_quandle(args.quandle)
    if args.kind == "involutory":
        quotient, proj = finite.universal_involutory_quotient(q)
    elif args.kind == "abelian":
        quotient, proj = finite.universal_abelian_quotient(q)
    else:
        pairs = _json_arg(args.pairs or "[]")
        if not isinstance(pairs, list) or not all(isinstance(p, list) and len(p) == 2 for p in pairs):
            raise InputError("--pairs must be a JSON list of [x, y] pairs")
        quotient, proj = finite.congruence_quotient(q, [tuple(p) for p in pairs])
    payload = {"quotient": quotient.to_json(), "projection": proj}
    text = f"size {quotient.size}\nprojection {' '.join(map(str, proj))}"
    return payload, text, 0


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit key-sorted JSON")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized steps (default 0)")
    common.add_argument("--cap", type=int, default=None, help="resource cap for searches")
    common.add_argument("--threads", type=int, default=1, help="worker threads (results do not depend on it)")

    parser = argparse.ArgumentParser(prog="quandlekit", description="Quandles, Dehn twists and monodromy.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("axioms", parents=[common], help="check the quandle axioms")
    p.add_argument("quandle")
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser("hom-count", parents=[common], help="count quandle homomorphisms")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--enumerate", action="store_true")
    p.set_defaults(func=cmd_hom_count)

    p = sub.add_parser("torus-op", parents=[common], help="Dehn quandle of the torus")
    p.add_argument("op", choices=("rt", "lt"))
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_torus_op)

    for name, func in (("hq-op", cmd_hq_op), ("reduce", cmd_reduce)):
        p = sub.add_parser(name, parents=[common])
        if name == "hq-op":
            p.add_argument("op", choices=("rt", "lt"))
            p.add_argument("x")
            p.add_argument("y")
            p.add_argument("--reduced", action="store_true")
        else:
            p.add_argument("x")
        p.add_argument("--ring", default="Z")
        p.add_argument("--genus", type=int, default=None)
        p.set_defaults(func=func)

    p = sub.add_parser("monodromy", parents=[common], help="vanishing-cycle tuples")
    p.add_argument("action", choices=("check", "canonical", "invariants", "move", "eval"))
    p.add_argument("file")
    p.add_argument("--index", type=int)
    p.add_argument("--direction", choices=("forward", "backward"), default="forward")
    p.add_argument("--random", type=int, default=None, metavar="N", help="apply N random moves")
    p.add_argument("--cyclic", action="store_true", help="allow cyclic rotation (sphere base)")
    p.add_argument("--conj", action="store_true", help="allow global conjugation")
    p.add_argument("--element", help="free quandle element for eval")
    p.set_defaults(func=cmd_monodromy)

    p = sub.add_parser("qhomology", parents=[common], help="quandle or rack homology")
    p.add_argument("quandle")
    p.add_argument("n", type=int)
    p.add_argument("--rack", action="store_true")
    p.add_argument("--coefficients", type=int, default=None, metavar="M",
                   help="cohomology with Z/M coefficients (0 for Z)")
    p.set_defaults(func=cmd_qhomology)

    p = sub.add_parser("quotient", parents=[common], help="quotient quandles")
    p.add_argument("kind", choices=("involutory", "abelian", "pairs"))
    p.add_argument("quandle")
    p.add_argument("--pairs", help="JSON list of [x, y] pairs to identify")
    p.set_defaults(func=cmd_quotient)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads < 1:
        print("error: input: --threads must be positive", file=stderr)
        return 2
    try:
        payload, text, code = args.func(args)
    except QuandleError as exc:
        print(f"error: {exc.kind}: {' '.join(str(exc).split())}", file=stderr)
        return exc.exit_code
    if args.json:
        print(json.dumps(payload, sort_keys=True), file=stdout)
    else:
        print(text, file=stdout)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
