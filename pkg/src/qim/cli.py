"""Command line front end: ``qim <subcommand> --quiver FILE``.

Exit status is 0 when everything checked passes, 1 when a verification
fails (JSON output then carries a non-empty ``failures`` list) and 2 on
usage, input or budget errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Callable

from . import __version__
from .bimodule import decompose, enumerate_subbimodules, path_basis, support
from .errors import BudgetExceeded, QimError
from .monoid import (
    DEFAULT_MAX_ELEMENTS,
    b_omega,
    b_omega_census,
    check_relations,
    ideal_monoid,
    indecomposable_monoid,
    maximal_elements,
    maximal_elements_census,
    minimal_generating_check,
    special_subtrees,
)
from .presentation import decategorify, hk_chain, ind_chain
from .quiver import (
    Quiver,
    _parse_json,
    _parse_lines,
    admissible_trees,
    validate_arrows,
)
from .relations import b_generators, j_generators
from .specialfunc import bimodule_of_function, catalan_check, function_of_bimodule, special_by_support

COMMANDS: dict[str, Callable] = {}
FORMATS = ("json", "csv", "text")


def command(name: str):
    def deco(fn):
        COMMANDS[name] = fn
        return fn

    return deco


class Result:
    """Payload plus failures; ``rows``/``text`` drive the csv and text renderers."""

    def __init__(self, payload: dict, failures=None, rows=None, text=None):
        self.payload = payload
        self.failures = list(failures or [])
        self.rows = rows
        self.text = text

    def to_json(self) -> dict:
        return {**self.payload, "failures": self.failures}


def _pairs(b) -> list:
    return [list(p) for p in b.pairs()]


# ---------------------------------------------------------------- commands


@command("validate")
def cmd_validate(q: Quiver, args) -> Result:
    rep = validate_arrows(q.n, q.arrows)
    payload = {
        "vertices": q.n,
        "arrows": [list(a) for a in q.arrows],
        **rep.to_json(),
        "sinks": sorted(q.sinks),
        "sources": sorted(q.sources),
        "K": sorted(q.K),
        "Kprime": sorted(q.Kprime),
        "maximal_chains": [list(c) for c in q.chains],
    }
    text = (
        f"{q.n} vertices, {len(q.arrows)} arrows; tree: {rep.tree}; admissible: {rep.admissible}\n"
        f"K = {sorted(q.K)}, K' = {sorted(q.Kprime)}\n"
        + "".join(f"chain {' -> '.join(map(str, c))}\n" for c in q.chains)
    )
    rows = [["key", "value"], ["tree", rep.tree], ["admissible", rep.admissible]]
    return Result(payload, rows=rows, text=text)


@command("basis")
def cmd_basis(q: Quiver, args) -> Result:
    basis = [list(p) for p in path_basis(q)]
    text = f"{len(basis)} basis paths\n" + "".join(f"a_{t},{s}\n" for t, s in basis)
    return Result({"count": len(basis), "basis": basis}, rows=[["t", "s"]] + basis, text=text)


@command("ideals")
def cmd_ideals(q: Quiver, args) -> Result:
    ideals = enumerate_subbimodules(q, args.max_elements)
    recs = [{"pairs": _pairs(b), "summands": len(decompose(b))} for b in ideals]
    text = f"{len(ideals)} subbimodules\n" + "".join(f"{b!r}\n" for b in ideals)
    rows = [["index", "size", "summands", "pairs"]] + [
        [k, len(b), r["summands"], json.dumps(r["pairs"])] for k, (b, r) in enumerate(zip(ideals, recs))
    ]
    return Result({"count": len(ideals), "ideals": recs}, rows=rows, text=text)


@command("indecomposables")
def cmd_indecomposables(q: Quiver, args) -> Result:
    ideals = enumerate_subbimodules(q, args.max_elements)
    census = [b for b in ideals if len(decompose(b)) <= 1]
    funcs = {a for fs in special_by_support(q).values() for a in fs}
    failures, recs = [], []
    seen = set()
    for b in census:
        alpha = function_of_bimodule(b)
        seen.add(alpha)
        ok = alpha in funcs and bimodule_of_function(q, alpha) == b
        if not ok:
            failures.append({"pairs": _pairs(b), "function": list(alpha), "reason": "round trip"})
        recs.append({"pairs": _pairs(b), "function": list(alpha), "support": sorted(support(b).vertices)})
    for alpha in sorted(funcs - seen):
        failures.append({"function": list(alpha), "reason": "no matching indecomposable"})
    text = f"{len(census)} elements (indecomposables and zero)\n" + "".join(
        f"{tuple(r['function'])}  support {r['support']}\n" for r in recs
    )
    rows = [["function", "support", "pairs"]] + [
        [json.dumps(r["function"]), json.dumps(r["support"]), json.dumps(r["pairs"])] for r in recs
    ]
    return Result({"count": len(census), "elements": recs}, failures, rows, text)


@command("special-functions")
def cmd_special(q: Quiver, args) -> Result:
    groups = special_by_support(q)
    recs = [{"function": list(a), "support": list(k)} for k, fs in groups.items() for a in fs]
    text = f"{len(recs)} special functions\n" + "".join(
        f"support {list(k)}: {len(fs)}\n" + "".join(f"  {a}\n" for a in fs) for k, fs in groups.items()
    )
    rows = [["function", "support"]] + [[json.dumps(r["function"]), json.dumps(r["support"])] for r in recs]
    payload = {
        "count": len(recs),
        "functions": recs,
        "by_support": [{"support": list(k), "count": len(fs)} for k, fs in groups.items()],
    }
    return Result(payload, rows=rows, text=text)


@command("catalan-check")
def cmd_catalan(q: Quiver, args) -> Result:
    rows = catalan_check(q)
    failures = [r for r in rows if r["formula"] != r["brute_force"]]
    text = "".join(
        f"C({r['i']},{r['j']}) case {r['case']}: formula {r['formula']}, census {r['brute_force']}\n" for r in rows
    )
    table = [["i", "j", "case", "formula", "brute_force"]] + [list(r.values()) for r in rows]
    return Result({"pairs": rows}, failures, table, text)


def _monoid(q: Quiver, args):
    if args.which == "Iind":
        return indecomposable_monoid(q, args.max_elements)
    return ideal_monoid(q, args.max_elements)


@command("monoid")
def cmd_monoid(q: Quiver, args) -> Result:
    m = _monoid(q, args)
    payload = {"which": args.which, "order": len(m), **m.to_json(_pairs)}
    failures = [] if m.check_associativity() else [{"reason": "table is not associative"}]
    labels = [m.label(x) for x in range(len(m))]
    text = f"{args.which}: {len(m)} elements, zero = {labels[m.zero] if m.zero is not None else None}\n"
    text += "".join(f"{k}: {lab}\n" for k, lab in enumerate(labels))
    rows = list(csv.reader(io.StringIO(m.table_csv())))
    return Result(payload, failures, rows, text)


@command("relations")
def cmd_relations(q: Quiver, args) -> Result:
    modes = ["prop51"] if args.which == "I" else ["prop52"]
    if args.which is None:
        modes = ["prop51", "prop52"] if q.is_admissible else ["prop51"]
    reports = [check_relations(q, m) for m in modes]
    failures = [f for r in reports for f in r.failures]
    text = "".join(f"{r.mode}: {r.checked} relations, {len(r.failures)} failures\n" for r in reports)
    rows = [["mode", "checked", "failures"]] + [[r.mode, r.checked, len(r.failures)] for r in reports]
    return Result({"reports": [r.to_json() for r in reports]}, failures, rows, text)


@command("generators")
def cmd_generators(q: Quiver, args) -> Result:
    out, failures = {}, []
    ideals = set(enumerate_subbimodules(q, args.max_elements))
    cases = [("I", ideal_monoid, ideals)]
    if q.is_admissible:
        cases.append(("Iind", indecomposable_monoid, {b for b in ideals if len(decompose(b)) <= 1}))
    for name, build, expected in cases:
        m = build(q, args.max_elements)
        ess = minimal_generating_check(m)
        generates = set(m.elements) == expected
        out[name] = {"order": len(m), "generates": generates, "essential": ess}
        if not generates:
            failures.append({"monoid": name, "reason": "closure differs from census"})
        failures += [{"monoid": name, "generator": g, "reason": "redundant"} for g, e in ess.items() if not e]
    if q.is_admissible:
        got, want = set(maximal_elements(q)), set(maximal_elements_census(q))
        out["maximal_elements"] = [_pairs(b) for b in maximal_elements(q)]
        if got != want:
            failures.append({"reason": "maximal elements differ from census"})
    text = "".join(
        f"{k}: order {v['order']}, generates: {v['generates']}, essential: "
        + ", ".join(f"{g}={e}" for g, e in v["essential"].items())
        + "\n"
        for k, v in out.items()
        if k != "maximal_elements"
    )
    rows = [["monoid", "generator", "essential"]] + [
        [k, g, e] for k, v in out.items() if k != "maximal_elements" for g, e in v["essential"].items()
    ]
    return Result(out, failures, rows, text)


@command("presentation-check")
def cmd_presentation(q: Quiver, args) -> Result:
    out = {"hk": hk_chain(q, args.max_elements, args.max_steps)}
    if q.is_admissible:
        out["ind"] = ind_chain(q, args.max_elements, args.max_steps)
    failures = [{"chain": k, **f} for k, v in out.items() for f in v["failures"]]
    text = ""
    for k, v in out.items():
        orders = ", ".join(f"{a} {b}" for a, b in v["orders"].items())
        text += f"{k}: {orders}; isomorphic: {v['isomorphic']}\n"
    rows = [["chain", "monoid", "order"]] + [[k, a, b] for k, v in out.items() for a, b in v["orders"].items()]
    return Result(out, failures, rows, text)


@command("decategorify")
def cmd_decategorify(q: Quiver, args) -> Result:
    gens = dict(j_generators(q))
    if q.is_admissible:
        gens.update(b_generators(q))
    mats = {name: [list(r) for r in decategorify(b)] for name, b in gens.items()}
    text = "".join(f"{name}:\n" + "".join(" ".join(map(str, r)) + "\n" for r in m) for name, m in mats.items())
    rows = [["generator", "row"] + [f"c{k}" for k in q.vertices]]
    rows += [[name, i] + r for name, m in mats.items() for i, r in enumerate(m, 1)]
    return Result({"matrices": mats}, rows=rows, text=text)


@command("b-omega")
def cmd_b_omega(q: Quiver, args) -> Result:
    recs, failures = [], []
    for om in special_subtrees(q):
        prod = b_omega(q, om)
        census = b_omega_census(q, om)
        rec = {"support": sorted(om.vertices), "product": _pairs(prod), "agrees": prod == census}
        if prod != census:
            failures.append({**rec, "census": _pairs(census)})
        recs.append(rec)
    text = "".join(f"{r['support']}: {'ok' if r['agrees'] else 'MISMATCH'}\n" for r in recs)
    rows = [["support", "agrees"]] + [[json.dumps(r["support"]), r["agrees"]] for r in recs]
    return Result({"count": len(recs), "subtrees": recs}, failures, rows, text)


# ------------------------------------------------------------------ driver


def _budget_default(parser: argparse.ArgumentParser) -> int:
    env = os.environ.get("QIM_BUDGET_ELEMENTS")
    if env is None:
        return DEFAULT_MAX_ELEMENTS
    try:
        value = int(env)
    except ValueError:
        value = 0
    if value <= 0:
        parser.error(f"QIM_BUDGET_ELEMENTS must be a positive integer, got {env!r}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qim", description="Ideals of path algebras of oriented trees.")
    p.add_argument("--version", action="version", version=f"qim {__version__}")
    p.add_argument("command", choices=sorted(COMMANDS))
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--quiver", help="quiver file (JSON or line format)")
    src.add_argument(
        "--all-orientations",
        type=_positive,
        metavar="N",
        help="run over every admissible tree on 2..N vertices, up to isomorphism",
    )
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--which", choices=("I", "Iind"), default=None)
    p.add_argument("--max-elements", type=_positive, default=None)
    p.add_argument("--max-steps", type=_positive, default=10_000_000)
    return p


def _read_quiver(path: str):
    with open(path, encoding="utf-8") as fh:
        text = fh.read().strip()
    return _parse_json(text) if text.startswith("{") else _parse_lines(text)


def _render(results: list[tuple[Quiver, Result]], fmt: str, suite: bool) -> str:
    if fmt == "json":
        if not suite:
            return json.dumps(results[0][1].to_json(), sort_keys=True) + "\n"
        doc = {
            "suite": [
                {"quiver": {"vertices": q.n, "arrows": [list(a) for a in q.arrows]}, **r.to_json()}
                for q, r in results
            ],
            "failures": [
                {"quiver": [list(a) for a in q.arrows], **f} for q, r in results for f in r.failures
            ],
        }
        return json.dumps(doc, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for q, r in results:
            if suite:
                w.writerow([f"# quiver {q!r}"])
            w.writerows(r.rows or [])
        return buf.getvalue()
    parts = []
    for q, r in results:
        head = f"== {q!r}\n" if suite else ""
        tail = "".join(f"FAIL {json.dumps(f, sort_keys=True)}\n" for f in r.failures)
        parts.append(head + (r.text or "") + tail)
    return "".join(parts)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_elements is None:
        args.max_elements = _budget_default(parser)
    if args.which is None and args.command == "monoid":
        args.which = "I"
    try:
        if args.quiver is not None:
            n, arrows = _read_quiver(args.quiver)
            if args.command == "validate":
                rep = validate_arrows(n, arrows)
                if not (rep.connected and rep.tree):
                    out = {"vertices": n, "arrows": [list(a) for a in arrows], **rep.to_json()}
                    out["failures"] = [{"reason": "not a tree"}]
                    _emit(json.dumps(out, sort_keys=True) + "\n" if args.format == "json" else "not a tree\n", args)
                    return 1
            quivers = [Quiver(n, tuple(arrows))]
        else:
            quivers = [q for k in range(2, args.all_orientations + 1) for q in admissible_trees(k)]
        results = [(q, COMMANDS[args.command](q, args)) for q in quivers]
    except BudgetExceeded as exc:
        print(f"qim: budget exceeded: {exc}", file=sys.stderr)
        return 2
    except (QimError, OSError) as exc:
        print(f"qim: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    _emit(_render(results, args.format, args.quiver is None), args)
    return 1 if any(r.failures for _, r in results) else 0


def _emit(text: str, args) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    sys.exit(main())
