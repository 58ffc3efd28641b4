"""Command-line interface.

Subcommands: count (run the counting methods on a graph file), family
(emit a family graph with its closed-form count when known), verify
(seeded randomized cross-validation of every method and invariant),
identity (evaluate the weighted identity at chosen weight points), fpoly
(incidence-product expansion report), bound (degree-product bound vs the
actual count).

Exit codes: 0 success, 1 usage error, 2 graph-file parse error,
3 invariant violation.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
import time
from typing import Sequence

from .algebra import DEFAULT_TERM_BUDGET
from .counting import (
    FamilySpec,
    closed_form_tau,
    enumerate_spanning_trees,
    generate_family,
    tau_deletion_contraction,
    tau_matrix_tree,
    tau_weighted_matrix_tree,
)
from .degree_formula import (
    best_thomassen_bound,
    direct_formula_value,
    tau_via_direct_formula,
    tau_via_grouped_formula,
    thomassen_bound,
)
from .errors import (
    BudgetExceededError,
    DisconnectedError,
    EmptyGraphError,
    InvalidSpecError,
    LengthMismatchError,
    ParseError,
    TreecountError,
)
from .fpoly import (
    brute_force_edge_cover,
    brute_force_matching,
    edge_cover_number_from_f,
    expand_f,
    matching_number_from_f,
    perfect_matchings_from_f,
)
from .graph import Multigraph, parse, serialize
from .identity import check_identity
from .randgraph import RandomSpec, random_multigraph

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_VIOLATION = 3

ENUM_VERTEX_CAP = 12
FPOLY_VERIFY_CAP = 10

COUNT_METHODS = ("matrix-tree", "del-con", "degree", "degree-direct", "enum")


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; the contract here reserves 2 for
    # unparseable graph files, so remap usage errors to 1
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true", help="emit one JSON document")
    shared.add_argument("--quiet", action="store_true", help="only the essential lines")
    shared.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_TERM_BUDGET,
        help="monomial budget for polynomial expansion",
    )

    parser = _Parser(prog="treecount", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", parents=[shared], help="count spanning trees")
    p_count.add_argument("file", help="graph file")
    p_count.add_argument(
        "--method",
        choices=COUNT_METHODS + ("all",),
        default="all",
        help="counting method (default: all)",
    )
    p_count.add_argument("--root", type=int, default=None, help="root vertex for degree methods")

    p_family = sub.add_parser("family", parents=[shared], help="generate a family graph")
    p_family.add_argument("kind", choices=("complete", "multipartite", "hypercube", "wheel", "multiwheel"))
    p_family.add_argument("sizes", type=int, nargs="+", help="size parameters")
    p_family.add_argument("-o", "--output", default=None, help="write the graph here instead of stdout")

    p_verify = sub.add_parser("verify", parents=[shared], help="randomized cross-validation")
    p_verify.add_argument("--n", type=int, default=7, help="vertices per trial graph")
    p_verify.add_argument("--m", type=int, default=12, help="edges per trial graph")
    p_verify.add_argument("--trials", type=int, default=100)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--parallel-prob", type=float, default=0.3)
    p_verify.add_argument("--points", type=int, default=3, help="weight points per identity check")
    p_verify.add_argument(
        "--allow-disconnected",
        action="store_true",
        help="drop the connectivity requirement and probe the degree expression on disconnected graphs",
    )

    p_identity = sub.add_parser("identity", parents=[shared], help="check the weighted identity")
    p_identity.add_argument("file", help="graph file")
    p_identity.add_argument("--root", type=int, default=None)
    p_identity.add_argument(
        "--weights",
        default="ones",
        help="'ones', 'random:<seed>', or a comma list like 1,2,3",
    )
    p_identity.add_argument("--weights-file", default=None, help="file with one integer per line")
    p_identity.add_argument("--trials", type=int, default=1, help="points to draw when weights are random")

    p_fpoly = sub.add_parser("fpoly", parents=[shared], help="expand the incidence product")
    p_fpoly.add_argument("file", help="graph file")
    p_fpoly.add_argument("--max-vertices", type=int, default=14)
    p_fpoly.add_argument("--dump", action="store_true", help="print every term")

    p_bound = sub.add_parser("bound", parents=[shared], help="degree-product bound report")
    p_bound.add_argument("file", help="graph file")
    p_bound.add_argument("--root", type=int, default=None)
    p_bound.add_argument("--best", action="store_true", help="pick the root minimizing the bound")

    return parser


def _load_graph(path: str) -> Multigraph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse(text)


def _emit(doc: dict, as_json: bool, lines: list[str], quiet_lines: list[str], quiet: bool) -> None:
    if as_json:
        print(json.dumps(doc, sort_keys=True))
    elif quiet:
        for line in quiet_lines:
            print(line)
    else:
        for line in lines:
            print(line)


# ---------------------------------------------------------------- count


def _run_method(name: str, g: Multigraph, root: int | None) -> dict:
    entry: dict = {}
    start = time.perf_counter()
    try:
        if name == "matrix-tree":
            entry["value"] = tau_matrix_tree(g)
        elif name == "del-con":
            entry["value"] = tau_deletion_contraction(g)
        elif name == "enum":
            if g.n > ENUM_VERTEX_CAP:
                raise BudgetExceededError(
                    f"enumeration skipped: n={g.n} exceeds the cap of {ENUM_VERTEX_CAP}"
                )
            entry["value"] = sum(1 for _ in enumerate_spanning_trees(g))
        else:
            if g.n == 0:
                raise EmptyGraphError("tau needs at least one vertex")
            u = best_thomassen_bound(g)[0] if root is None else root
            entry["root"] = u
            if name == "degree":
                entry["value"] = tau_via_grouped_formula(g, u)
            else:
                entry["value"] = tau_via_direct_formula(g, u)
    except TreecountError as exc:
        entry["error"] = str(exc)
    entry["ms"] = round((time.perf_counter() - start) * 1000, 3)
    return entry


def cmd_count(args: argparse.Namespace) -> int:
    g = _load_graph(args.file)
    names = COUNT_METHODS if args.method == "all" else (args.method,)
    methods = {name: _run_method(name, g, args.root) for name in names}
    values = {e["value"] for e in methods.values() if "value" in e}
    agreement = len(values) <= 1
    root, bound = best_thomassen_bound(g) if g.n >= 1 else (None, None)
    doc = {
        "graph": {"n": g.n, "m": g.m, "connected": g.is_connected()},
        "methods": methods,
        "agreement": agreement,
        "bound": {"root": root, "value": bound},
    }
    lines = [f"graph: n={g.n} m={g.m} connected={'yes' if doc['graph']['connected'] else 'no'}"]
    quiet_lines = []
    for name in names:
        entry = methods[name]
        if "value" in entry:
            extra = f"  root={entry['root']}" if "root" in entry else ""
            lines.append(f"{name:<14} {entry['value']}   {entry['ms']} ms{extra}")
            quiet_lines.append(f"{name} {entry['value']}")
        else:
            lines.append(f"{name:<14} error: {entry['error']}")
            quiet_lines.append(f"{name} error")
    lines.append(f"agreement: {'yes' if agreement else 'NO'}")
    if bound is not None:
        lines.append(f"thomassen: root={root} bound={bound}")
    _emit(doc, args.json, lines, quiet_lines, args.quiet)
    return EXIT_OK if agreement else EXIT_VIOLATION


# ---------------------------------------------------------------- family


def cmd_family(args: argparse.Namespace) -> int:
    try:
        spec = FamilySpec(args.kind, tuple(args.sizes))
    except InvalidSpecError as exc:
        print(f"treecount family: {exc}", file=sys.stderr)
        return EXIT_USAGE
    g = generate_family(spec)
    closed = closed_form_tau(spec)
    closed_text = "unavailable" if closed is None else str(closed)
    doc = {
        "kind": spec.kind,
        "sizes": list(spec.sizes),
        "n": g.n,
        "m": g.m,
        "closed_form": closed,
        "output": args.output,
    }
    if args.json:
        print(json.dumps(doc, sort_keys=True))
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(serialize(g))
        return EXIT_OK
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(serialize(g))
        if not args.quiet:
            print(f"wrote {args.output} (n={g.n}, m={g.m})")
        print(f"closed form: {closed_text}")
    else:
        sys.stdout.write(serialize(g))
        print(f"# closed form: {closed_text}")
    return EXIT_OK


# ---------------------------------------------------------------- verify


def _check_cross_method(g: Multigraph) -> tuple[bool, dict[str, int]]:
    values = {
        "matrix-tree": tau_matrix_tree(g),
        "del-con": tau_deletion_contraction(g),
        "del-con-alt": tau_deletion_contraction(g, "first-edge"),
    }
    if g.n <= ENUM_VERTEX_CAP:
        values["enum"] = sum(1 for _ in enumerate_spanning_trees(g))
    if g.is_connected():
        root = best_thomassen_bound(g)[0]
        values["degree"] = tau_via_grouped_formula(g, root)
        values["degree-direct"] = tau_via_direct_formula(g, root)
    return len(set(values.values())) == 1, values


def cmd_verify(args: argparse.Namespace) -> int:
    if args.trials < 1:
        print("treecount verify: --trials must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    counters = {
        "cross_method": [0, 0],
        "thomassen": [0, 0],
        "identity": [0, 0],
        "fpoly": [0, 0],
        "disconnected_probe": [0, 0],
    }
    violations = 0
    clean_trials = 0
    failures: list[str] = []

    def record(check: str, ok: bool, trial_seed: int, detail: str) -> bool:
        nonlocal violations
        counters[check][1] += 1
        if ok:
            counters[check][0] += 1
        else:
            violations += 1
            failures.append(
                f"violation[{check}] {detail} "
                f"(reproduce: treecount verify --n {args.n} --m {args.m} "
                f"--parallel-prob {args.parallel_prob} --trials 1 --seed {trial_seed}"
                f"{' --allow-disconnected' if args.allow_disconnected else ''})"
            )
        return ok

    try:
        for t in range(args.trials):
            trial_seed = args.seed + t
            g = random_multigraph(
                RandomSpec(
                    n=args.n,
                    m=args.m,
                    parallel_prob=args.parallel_prob,
                    seed=trial_seed,
                    require_connected=not args.allow_disconnected,
                )
            )
            trial_ok = True

            agree, values = _check_cross_method(g)
            trial_ok &= record("cross_method", agree, trial_seed, f"values={values}")

            tau = values["matrix-tree"]
            bound_ok = all(tau <= thomassen_bound(g, u) for u in range(g.n))
            trial_ok &= record("thomassen", bound_ok, trial_seed, f"tau={tau}")

            if g.is_connected() and g.n >= 2:
                root = best_thomassen_bound(g)[0]
                rng_w = random.Random(trial_seed + 10_000_019)
                ok = True
                for _ in range(args.points):
                    w = [rng_w.randint(-1000, 1000) for _ in range(g.m)]
                    report = check_identity(g, root, w)
                    if not report.holds:
                        ok = False
                        break
                trial_ok &= record("identity", ok, trial_seed, f"root={root}")

            if not g.has_isolated_vertex() and 2 <= g.n <= FPOLY_VERIFY_CAP:
                terms = expand_f(g, max_vertices=FPOLY_VERIFY_CAP, budget=args.budget)
                degree_product = math.prod(g.degrees())
                ok = (
                    matching_number_from_f(terms) == brute_force_matching(g)
                    and edge_cover_number_from_f(terms) == brute_force_edge_cover(g)
                    and sum(t.coefficient for t in terms) == degree_product
                )
                trial_ok &= record("fpoly", ok, trial_seed, "expansion vs oracles")

            if args.allow_disconnected and not g.is_connected():
                probe_ok = all(direct_formula_value(g, u) == 0 for u in range(g.n))
                trial_ok &= record(
                    "disconnected_probe", probe_ok, trial_seed, "degree expression vs tau=0"
                )

            if trial_ok:
                clean_trials += 1
    except InvalidSpecError as exc:
        print(f"treecount verify: {exc}", file=sys.stderr)
        return EXIT_USAGE

    summary = f"{clean_trials}/{args.trials} agreements, {violations} violations"
    doc = {
        "spec": {
            "n": args.n,
            "m": args.m,
            "parallel_prob": args.parallel_prob,
            "seed": args.seed,
            "trials": args.trials,
            "points": args.points,
            "allow_disconnected": args.allow_disconnected,
        },
        "checks": {
            name: {"ok": ok, "total": total}
            for name, (ok, total) in counters.items()
            if total
        },
        "clean_trials": clean_trials,
        "violations": violations,
    }
    lines = [
        f"verify: n={args.n} m={args.m} trials={args.trials} seed={args.seed} "
        f"parallel-prob={args.parallel_prob} "
        f"connected={'optional' if args.allow_disconnected else 'required'}"
    ]
    lines.extend(failures)
    for name, (ok, total) in counters.items():
        if total:
            lines.append(f"{name.replace('_', '-')}: {ok}/{total} ok")
    lines.append(summary)
    _emit(doc, args.json, lines, [summary], args.quiet)
    return EXIT_VIOLATION if violations else EXIT_OK


# ---------------------------------------------------------------- identity


def _weight_points(args: argparse.Namespace, m: int) -> list[list[int]]:
    if args.weights_file is not None:
        with open(args.weights_file, "r", encoding="utf-8") as fh:
            values = []
            for lineno, raw in enumerate(fh, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                try:
                    values.append(int(line))
                except ValueError:
                    raise ParseError(
                        f"{args.weights_file}:{lineno}: not an integer: {line!r}"
                    ) from None
        return [values]
    source = args.weights
    if source == "ones":
        return [[1] * m]
    if source.startswith("random:"):
        try:
            seed = int(source.split(":", 1)[1])
        except ValueError:
            raise ParseError(f"bad random weight seed in {source!r}") from None
        rng = random.Random(seed)
        return [
            [rng.randint(-1000, 1000) for _ in range(m)] for _ in range(args.trials)
        ]
    try:
        return [[int(tok) for tok in source.split(",")]]
    except ValueError:
        raise ParseError(f"bad weight list {source!r}") from None


def cmd_identity(args: argparse.Namespace) -> int:
    g = _load_graph(args.file)
    if not g.is_connected():
        print("treecount identity: graph must be connected", file=sys.stderr)
        return EXIT_USAGE
    root = best_thomassen_bound(g)[0] if args.root is None else args.root
    try:
        points = _weight_points(args, g.m)
    except ParseError as exc:
        print(f"treecount identity: {exc}", file=sys.stderr)
        return EXIT_PARSE
    reports = []
    try:
        for w in points:
            reports.append(check_identity(g, root, w))
    except (LengthMismatchError, TreecountError) as exc:
        print(f"treecount identity: {exc}", file=sys.stderr)
        return EXIT_USAGE
    all_hold = all(r.holds for r in reports)
    doc = {
        "graph": {"n": g.n, "m": g.m},
        "root": root,
        "reports": [
            {
                "lhs": r.lhs,
                "tau": r.tau_term,
                "nst": r.nst_sum,
                "holds": r.holds,
                "weights": list(r.weight_point),
            }
            for r in reports
        ],
        "all_hold": all_hold,
    }
    lines = [f"graph: n={g.n} m={g.m} root={root}"]
    for i, r in enumerate(reports, start=1):
        lines.append(
            f"point {i}: weights={list(r.weight_point)} lhs={r.lhs} "
            f"tau={r.tau_term} nst={r.nst_sum} holds={'yes' if r.holds else 'NO'}"
        )
    verdict = f"{sum(r.holds for r in reports)}/{len(reports)} points hold"
    lines.append(verdict)
    _emit(doc, args.json, lines, [verdict], args.quiet)
    return EXIT_OK if all_hold else EXIT_VIOLATION


# ---------------------------------------------------------------- fpoly


def cmd_fpoly(args: argparse.Namespace) -> int:
    g = _load_graph(args.file)
    estimate = 1
    for v in range(g.n):
        estimate *= g.degree(v)
    if g.has_isolated_vertex():
        doc = {
            "graph": {"n": g.n, "m": g.m},
            "isolated_vertex": True,
            "terms": 0,
        }
        line = "isolated vertex present: the incidence product is identically 0"
        _emit(doc, args.json, [line], [line], args.quiet)
        return EXIT_OK
    try:
        terms = expand_f(g, max_vertices=args.max_vertices, budget=args.budget)
    except BudgetExceededError as exc:
        print(f"treecount fpoly: {exc}", file=sys.stderr)
        return EXIT_USAGE
    nu = matching_number_from_f(terms)
    rho = edge_cover_number_from_f(terms)
    matchings = perfect_matchings_from_f(terms)
    nu_oracle = brute_force_matching(g)
    rho_oracle = brute_force_edge_cover(g)
    agree = nu == nu_oracle and rho == rho_oracle
    doc = {
        "graph": {"n": g.n, "m": g.m},
        "cost_estimate": estimate,
        "terms": len(terms),
        "coefficient_sum": sum(t.coefficient for t in terms),
        "matching_number": nu,
        "edge_cover_number": rho,
        "matching_oracle": nu_oracle,
        "edge_cover_oracle": rho_oracle,
        "perfect_matchings": [sorted(pm) for pm in matchings],
        "oracle_agreement": agree,
    }
    lines = [
        f"graph: n={g.n} m={g.m}",
        f"cost estimate: {estimate} (degree product)",
        f"terms: {len(terms)} (coefficient sum {doc['coefficient_sum']})",
        f"matching number: {nu} (brute force {nu_oracle})",
        f"edge cover number: {rho} (brute force {rho_oracle})",
        "perfect matchings: "
        + (" ".join("{" + ",".join(map(str, sorted(pm))) + "}" for pm in matchings) or "none"),
        f"oracle agreement: {'yes' if agree else 'NO'}",
    ]
    if args.dump:
        for t in terms:
            lines.append(
                "2:{" + ",".join(map(str, sorted(t.doubled))) + "} "
                "1:{" + ",".join(map(str, sorted(t.single))) + "} "
                f"c:{t.coefficient}"
            )
    quiet_lines = [f"nu={nu} rho={rho} agree={'yes' if agree else 'NO'}"]
    _emit(doc, args.json, lines, quiet_lines, args.quiet)
    return EXIT_OK if agree else EXIT_VIOLATION


# ---------------------------------------------------------------- bound


def cmd_bound(args: argparse.Namespace) -> int:
    g = _load_graph(args.file)
    if g.n == 0:
        print("treecount bound: the empty graph has no vertices to root at", file=sys.stderr)
        return EXIT_USAGE
    if args.root is not None:
        root = args.root
        try:
            bound = thomassen_bound(g, root)
        except TreecountError as exc:
            print(f"treecount bound: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        root, bound = best_thomassen_bound(g)
    tau = tau_matrix_tree(g)
    gap = bound - tau
    doc = {
        "graph": {"n": g.n, "m": g.m},
        "root": root,
        "bound": bound,
        "tau": tau,
        "gap": gap,
    }
    line = f"root {root}: bound={bound} tau={tau} gap={gap}"
    _emit(doc, args.json, [f"graph: n={g.n} m={g.m}", line], [line], args.quiet)
    return EXIT_OK


# ---------------------------------------------------------------- main


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "count": cmd_count,
        "family": cmd_family,
        "verify": cmd_verify,
        "identity": cmd_identity,
        "fpoly": cmd_fpoly,
        "bound": cmd_bound,
    }
    try:
        return handlers[args.command](args)
    except ParseError as exc:
        print(f"treecount: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DisconnectedError as exc:
        print(f"treecount: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
