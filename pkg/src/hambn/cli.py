"""Command-line interface.

Exit codes: 0 success or pass, 1 property fails or suite violation, 2 usage
or parse error. Every network argument accepts ``-`` for standard input.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import suites
from .construction import (
    FIXTURE_IDS,
    UnrealizableError,
    Variant,
    build_family,
    dependency_at,
    fixture_source,
    realize_hamiltonian,
    realize_two_hamiltonian,
    table1_predicate,
    z_config,
)
from .core import BooleanNetwork, Configuration, DimensionError, format_word, index_mask
from .dynamics import FunctionalGraph, analyze, classify, isomorphic, transition_graph, two_hamiltonian_witness
from .formats import ParseError, export_dot, load_network, serialize_network
from .interaction import connectivity, interaction_graph, local_interaction_graph
from .properties import (
    UnateStatus,
    assumability_violation,
    is_balanced,
    is_self_dual,
    threshold_feasibility,
    unate_analysis,
)

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from exc


def _network(source: str) -> BooleanNetwork:
    return load_network(_read(source))


def _config(text: str, n: int) -> Configuration:
    try:
        x = Configuration.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad configuration {text!r}: {exc}") from exc
    if x.n != n:
        raise UsageError(f"configuration {text} has {x.n} bits, network has {n} variables")
    return x


def _index_set(text: Optional[str], n: int) -> list[int]:
    if not text:
        return list(range(1, n + 1))
    try:
        members = [int(t) for t in text.replace(" ", "").split(",") if t]
        index_mask(members, n)
    except (ValueError, DimensionError) as exc:
        raise UsageError(f"bad index set {text!r}: {exc}") from exc
    return members


def _out(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _figure(path, render):
    if path:
        from . import plotting

        fig = render(plotting, path)
        import matplotlib.pyplot as plt

        plt.close(fig)
        print(f"figure\t{path}", file=sys.stderr)


# subcommands ---------------------------------------------------------------------


def cmd_eval(args) -> int:
    f = _network(args.network)
    x = _config(args.config, f.n)
    _out(format_word(int(f.successor[x.bits]), f.n))
    return OK


def cmd_dynamics(args) -> int:
    f = _network(args.network)
    g = transition_graph(f)
    if args.dot:
        _out(export_dot(g, name="dynamics"))
    else:
        s = analyze(g)
        w = lambda v: format_word(v, f.n)  # noqa: E731
        rows = [
            ("fixed_points", " ".join(w(v) for v in s.fixed_points) or "-"),
            ("limit_cycles", "; ".join(" ".join(w(v) for v in c) for c in s.limit_cycles) or "-"),
            ("gardens", " ".join(w(v) for v in s.gardens) or "-"),
            ("height", str(s.height)),
            ("period", str(s.period)),
            ("preimages", " ".join(f"{k}:{v}" for k, v in sorted(s.preimage_histogram.items()))),
            ("class", str(classify(g))),
        ]
        _out("\n".join(f"{k}\t{v}" for k, v in rows))
    _figure(args.figure, lambda p, path: p.plot_functional_graph(g, path))
    return OK


def cmd_igraph(args) -> int:
    f = _network(args.network)
    if args.at:
        g = local_interaction_graph(f, _config(args.at, f.n))
    else:
        g = interaction_graph(f)
    if args.dot:
        _out(export_dot(g, name="interaction"))
    else:
        lines = [f"x{i}\tx{j}\t{s.value}" for i, j, s in g.arcs]
        lines.append(f"connectivity\t{connectivity(g)}")
        _out("\n".join(lines))
    _figure(args.figure, lambda p, path: p.plot_signed_digraph(g, path))
    return OK


def cmd_check(args) -> int:
    f = _network(args.network)
    prop = args.property
    if prop == "balanced":
        ok = is_balanced(f)
        _out("balanced" if ok else "not-balanced")
        return OK if ok else FAILED
    if prop in ("unate", "monotone"):
        r = unate_analysis(f)
        ok = r.is_unate if prop == "unate" else r.status is UnateStatus.MONOTONE
        line = r.status.value
        if r.witness:
            j, i, x, x2 = r.witness
            line += f"\tf{j} increases in x{i} at {format_word(x, f.n)} and decreases at {format_word(x2, f.n)}"
        _out(line)
        return OK if ok else FAILED
    if prop == "selfdual":
        members = _index_set(args.index_set, f.n)
        r = is_self_dual(f, members)
        if r:
            _out("self-dual")
            return OK
        _out(f"not-self-dual\tcounterexample {format_word(r.counterexample, f.n)}")
        return FAILED
    j = args.fn
    if j is None or not 1 <= j <= f.n:
        raise UsageError(f"{prop} needs --fn in 1..{f.n}")
    t = f.locals[j - 1]
    if prop == "threshold":
        try:
            cert = threshold_feasibility(t)
        except (ValueError, DimensionError) as exc:
            raise UsageError(str(exc)) from exc
        if cert.feasible:
            _out(f"feasible\ta=({', '.join(str(a) for a in cert.weights)})\tb={cert.threshold}")
            return OK
        _out("infeasible")
        return FAILED
    r = assumability_violation(t, args.k)
    if r is None:
        _out(f"assumable\tno violation with k <= {args.k}")
        return OK
    T, F = r
    w = lambda v: format_word(v, f.n)  # noqa: E731
    _out(f"not-assumable\tk={len(T)}\tT: {' '.join(map(w, T))}\tF: {' '.join(map(w, F))}")
    return FAILED


def cmd_classify(args) -> int:
    f = _network(args.network)
    g = transition_graph(f)
    cls = classify(g)
    lines = [str(cls)]
    if g.size >= 2:
        wit = two_hamiltonian_witness(g)
        if wit is None:
            lines.append("2-hamiltonian\tno")
        else:
            u, v = wit
            lines.append(f"2-hamiltonian\tyes\t{format_word(u, f.n)} {format_word(v, f.n)}")
    _out("\n".join(lines))
    return OK


def _parse_target(text: str) -> FunctionalGraph:
    if "," in text and not Path(text).exists():
        try:
            succ = [int(t) for t in text.split(",")]
        except ValueError as exc:
            raise UsageError(f"bad successor list {text!r}") from exc
        try:
            return FunctionalGraph(succ)
        except (ValueError, DimensionError) as exc:
            raise UsageError(str(exc)) from exc
    return transition_graph(_network(text))


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "realize":
        if args.n is None or args.period is None:
            raise UsageError("realize needs --n and --period")
        try:
            f = realize_hamiltonian(args.n, args.period)
        except (ValueError, DimensionError) as exc:
            raise UsageError(str(exc)) from exc
    elif kind == "realize-2ham":
        if not args.target:
            raise UsageError("realize-2ham needs --target (a .bn file or a successor list)")
        try:
            f = realize_two_hamiltonian(_parse_target(args.target))
        except UnrealizableError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return FAILED
    else:
        if args.n is None:
            raise UsageError(f"{kind} needs --n")
        try:
            f = build_family(args.n, Variant(kind)).network
        except (ValueError, DimensionError) as exc:
            raise UsageError(str(exc)) from exc
    _out(serialize_network(f, args.mode))
    return OK


def cmd_fixture(args) -> int:
    _out(fixture_source(args.name).strip())
    return OK


def cmd_iso(args) -> int:
    a, b = _network(args.first), _network(args.second)
    same = a.n == b.n and isomorphic(transition_graph(a), transition_graph(b))
    _out("isomorphic" if same else "not-isomorphic")
    return OK if same else FAILED


def _n_list(text: Optional[str]):
    if text is None:
        return None
    out = []
    try:
        for part in text.split(","):
            if "-" in part or ".." in part:
                lo, hi = part.replace("..", "-").split("-")
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
    except ValueError as exc:
        raise UsageError(f"bad --n value {text!r}; use 3, 3,4 or 1-12") from exc
    return out


def _report_rows(report) -> list[list[str]]:
    rows = [["section", "key", "value"]]
    for key in ("suite", "seed", "instances_checked", "verdict"):
        rows.append(["summary", key, str(getattr(report, key))])
    rows.append(["summary", "violations", str(len(report.violations))])
    rows.append(["summary", "elapsed_ms", f"{report.elapsed * 1000:.1f}"])
    for section, value in report.details.items():
        if isinstance(value, dict):
            for k, v in value.items():
                rows.append([section, k, str(v)])
        else:
            rows.append(["details", section, str(value)])
    return rows


def _suite_figure(report, plotting, path):
    if report.suite == "table1":
        n = max(report.params["n"])
        f = build_family(n).network
        computed = dependency_at(f, z_config(n).bits)
        reference = [[table1_predicate(n, i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
        return plotting.plot_dependency_matrix(computed, reference, path, title=f"dependency at z, n={n} (red: disagrees with table)")
    if report.suite == "realize":
        rows = []
        for n in report.params["n"]:
            for p in range(1, (1 << n) + 1):
                s = analyze(transition_graph(realize_hamiltonian(n, p)))
                rows.append((n, s.period, s.height))
        return plotting.plot_realization(rows, path)
    return plotting.plot_report(report, path)


def cmd_verify(args) -> int:
    if args.list:
        for name, s in suites.SUITES.items():
            lo, hi = s.n_range
            kind = "conjecture" if s.conjecture else "theorem"
            _out(f"{name}\t{kind}\tn={lo}..{hi}\tdefault n={s.defaults['n']}")
        return OK
    if not args.suite:
        raise UsageError("verify needs a suite name (see verify --list)")
    params = {"n": _n_list(args.n), "samples": args.samples, "seed": args.seed, "workers": args.workers}
    try:
        report = suites.run_suite(args.suite, params)
    except suites.SuiteError as exc:
        raise UsageError(str(exc)) from exc
    _out(report.to_json() if args.json else report.table())
    if args.csv:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(_report_rows(report))
        Path(args.csv).write_text(buf.getvalue())
    _figure(args.figure, lambda p, path: _suite_figure(report, p, path))
    return FAILED if report.verdict == suites.FAIL else OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hambn", description="Boolean networks with Hamiltonian dynamics.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def net(sp, name="network"):
        sp.add_argument(name, nargs="?", default="-", help=".bn file, or - for stdin (default)")

    s = sub.add_parser("eval", help="image of a configuration")
    s.add_argument("network")
    s.add_argument("config", help="bit string x1..xn, e.g. 110")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("dynamics", help="fixed points, cycles, gardens, height, period")
    net(s)
    s.add_argument("--dot", action="store_true", help="emit the transition graph as DOT")
    s.add_argument("--figure", metavar="PNG")
    s.set_defaults(func=cmd_dynamics)

    s = sub.add_parser("igraph", help="signed interaction graph and its connectivity")
    net(s)
    s.add_argument("--at", metavar="CONFIG", help="local graph at a configuration")
    s.add_argument("--dot", action="store_true")
    s.add_argument("--figure", metavar="PNG")
    s.set_defaults(func=cmd_igraph)

    s = sub.add_parser("check", help="function-class membership")
    s.add_argument("property", choices=["balanced", "unate", "monotone", "selfdual", "threshold", "assumable"])
    net(s)
    s.add_argument("--fn", type=int, help="local function index for threshold/assumable")
    s.add_argument("--index-set", help="comma-separated index set for selfdual (default all)")
    s.add_argument("--k", type=int, default=3, help="largest k searched by assumable (default 3)")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("classify", help="Hamiltonian class and 2-Hamiltonian witness")
    net(s)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("construct", help="emit a constructed network as .bn")
    s.add_argument("kind", choices=[v.value for v in Variant] + ["realize", "realize-2ham"])
    s.add_argument("--n", type=int)
    s.add_argument("--period", type=int)
    s.add_argument("--target", help=".bn file or comma-separated successor list")
    s.add_argument("--mode", choices=["table", "expr"], default="table")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("fixture", help="emit a stored example network")
    s.add_argument("name", choices=FIXTURE_IDS)
    s.set_defaults(func=cmd_fixture)

    s = sub.add_parser("iso", help="are two networks' dynamics isomorphic?")
    s.add_argument("first")
    s.add_argument("second")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("suite", nargs="?", choices=list(suites.SUITES))
    s.add_argument("--list", action="store_true", help="list suites and their caps")
    s.add_argument("--n", help="3, 3,4 or 1-12")
    s.add_argument("--samples", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--json", action="store_true")
    s.add_argument("--csv", metavar="PATH", help="also write the report as CSV")
    s.add_argument("--figure", metavar="PNG")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
        # argparse fills an optional positional before later options are seen
        if len(extra) == 1 and not extra[0].startswith("--") and getattr(args, "network", None) == "-":
            args.network = extra[0]
        elif extra:
            raise UsageError(f"unrecognized arguments: {' '.join(extra)}")
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return USAGE
    except (DimensionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def cli(argv: Optional[Sequence[str]] = None) -> int:
    return main(argv)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
