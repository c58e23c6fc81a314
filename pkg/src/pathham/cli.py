"""Command-line entry point.

Exit status: 0 when every check passed, 1 when a theorem check failed
(the witness is printed), 2 for usage or input errors.  Reports go to
stdout, progress to stderr.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import kernels
from .enumerate import (
    enumerate_graphs,
    enumerate_regular_graphs,
    theorem_range,
    write_corpus,
)
from .graph import Graph, is_2_connected, is_k_regular
from .graph6 import Graph6Error, emit_graph6, parse_graph6, read_graph6_file
from .hopping import check_hopping_invariants, compute_closure, format_trace
from .reports import (
    band_text,
    band_tsv,
    corollary4_text,
    fmt_cycle,
    fmt_path,
    text_report,
    tsv_report,
)
from .search import find_ham_cycle_containing_path, is_l_path_hamiltonian
from .verify import (
    _map,
    corollary4_suite,
    explore_open_band,
    find_uncoverable_paths,
    kronk_condition,
    sharpness_construct,
    theorem2_suite,
    verify_corollary4,
    verify_theorem2,
)


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _log(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _load_input(path: str, k: int) -> list[Graph]:
    graphs = read_graph6_file(path)
    for i, g in enumerate(graphs, 1):
        if not is_k_regular(g, k) or not is_2_connected(g) or g.n > 2 * k:
            raise UsageError(f"{path}: graph {i} is not a 2-connected {k}-regular graph "
                             f"on at most {2 * k} vertices")
    return graphs


def cmd_enumerate(args) -> int:
    if args.n is not None:
        ns = [args.n]
    elif args.band:
        ns = theorem_range(args.k)
    else:
        ns = list(range(args.k + 1, 2 * args.k + 1))
    two_c = not args.all_graphs
    for n in ns:
        graphs = enumerate_regular_graphs(args.k, n, two_c, args.workers)
        _log(f"k={args.k} n={n}: {len(graphs)} graphs")
        if args.out:
            os.makedirs(args.out, exist_ok=True)
            path = write_corpus(args.out, args.k, n, two_c, graphs)
            print(f"{path}\t{len(graphs)}")
        else:
            for g in graphs:
                print(emit_graph6(g).decode())
    return 0


def cmd_verify(args) -> int:
    if args.input:
        graphs = _load_input(args.input, args.k)
        reports = _map(_Bound(verify_theorem2, args.k), graphs, args.workers)
    else:
        ns = [args.n] if args.n is not None else None
        reports = theorem2_suite(args.k, ns, args.workers, quiet=False)
    if args.format == "tsv":
        sys.stdout.write(tsv_report(reports))
    else:
        sys.stdout.write(text_report(f"2-path check k={args.k}", reports))
    return 0 if all(r.ok for r in reports) else 1


def cmd_corollary4(args) -> int:
    if args.input:
        graphs = _load_input(args.input, args.k)
        results = _map(_Bound(verify_corollary4, args.k), graphs, args.workers)
    else:
        ns = [args.n] if args.n is not None else None
        results = corollary4_suite(args.k, ns, args.workers, quiet=False)
    if args.format == "tsv":
        sys.stdout.write(tsv_report([r.report for r in results]))
    else:
        sys.stdout.write(corollary4_text(f"2-path Hamiltonicity k={args.k}", results))
    return 0 if all(r.ok for r in results) else 1


def _kronk_one(g: Graph, ls: tuple[int, ...]):
    out = []
    for l in ls:
        if not 1 <= l <= g.n - 2:
            continue
        if kronk_condition(g, l):
            ok, failing = is_l_path_hamiltonian(g, l)
            out.append((l, True, ok, failing))
        else:
            out.append((l, False, None, None))
    return out


class _Bound:
    """Picklable ``fn(x, *args)`` for process pools."""

    def __init__(self, fn, *args):
        self.fn, self.args = fn, args

    def __call__(self, x):
        return self.fn(x, *self.args)


def cmd_kronk(args) -> int:
    ls = (args.l,) if args.l else (1, 2)
    if args.input:
        graphs = read_graph6_file(args.input)
    else:
        max_n = args.n or 8
        if not 3 <= max_n <= 9:
            raise UsageError("--n for the kronk sweep must be in 3..9")
        graphs = [g for n in range(3, max_n + 1) for g in enumerate_graphs(n, True, args.workers)]
    _log(f"kronk sweep over {len(graphs)} graphs")
    results = _map(_Bound(_kronk_one, ls), graphs, args.workers)
    applicable = violations = 0
    for g, res in zip(graphs, results):
        for l, cond, ok, failing in res:
            if cond:
                applicable += 1
                if not ok:
                    violations += 1
                    print(f"VIOLATION {emit_graph6(g).decode()} l={l} path {fmt_path(failing)}")
    print(f"summary graphs={len(graphs)} condition_holds={applicable} violations={violations}")
    return 1 if violations else 0


def cmd_sharpness(args) -> int:
    sg = sharpness_construct(args.k)
    g = sg.graph
    if g.n > 16:
        raise UsageError("sharpness check needs 2k+2 <= 16")
    print(f"graph6 {emit_graph6(g).decode()}")
    print("labels " + " ".join(f"{name}={v}" for name, v in sorted(sg.labels.items(), key=lambda t: t[1])))
    print(f"n={g.n} k={args.k} regular={int(is_k_regular(g, args.k))} "
          f"two_connected={int(is_2_connected(g))}")
    uncoverable = [(p, cut) for p, cut in find_uncoverable_paths(g, 2) if len(p) == 3]
    for p, cut in uncoverable:
        print(f"uncoverable {fmt_path(p)} cut_set={int(cut)}")
    non_cut = [p for p, cut in uncoverable if not cut]
    print(f"summary uncoverable_2paths={len(uncoverable)} non_cut_set={len(non_cut)}")
    return 0 if non_cut else 1


def cmd_band(args) -> int:
    rows = explore_open_band(args.k, args.workers, quiet=False)
    sys.stdout.write(band_tsv(args.k, rows) if args.format == "tsv" else band_text(args.k, rows))
    return 0


def _graph_arg(args) -> Graph:
    if not args.g6:
        raise UsageError("--g6 is required")
    return parse_graph6(args.g6)


def cmd_hop(args) -> int:
    g = _graph_arg(args)
    if args.cycle is None or args.v0 is None:
        raise UsageError("hop needs --cycle and --v0")
    hc = compute_closure(g, args.cycle, args.v0)
    print(format_trace(hc))
    rep = check_hopping_invariants(g, args.cycle, args.v0, hc, args.k)
    print(f"x_on_cycle={int(rep.x_on_cycle)} disjoint={int(rep.disjoint)} "
          f"no_consecutive={int(rep.no_consecutive)}"
          + ("" if rep.x_at_least_k is None else f" x_at_least_k={int(rep.x_at_least_k)}"))
    for what, witness in rep.violations:
        print(f"violation {what}: {list(witness)}")
    return 0


def cmd_check(args) -> int:
    g = _graph_arg(args)
    if args.path is None:
        raise UsageError("check needs --path")
    c = find_ham_cycle_containing_path(g, args.path)
    print("NONE" if c is None else fmt_cycle(c))
    return 0


COMMANDS = {
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "corollary4": cmd_corollary4,
    "kronk": cmd_kronk,
    "sharpness": cmd_sharpness,
    "band": cmd_band,
    "hop": cmd_hop,
    "check": cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathham", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s 0.1.0 ({kernels.BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, k_required=False):
        p.add_argument("--k", type=int, required=k_required)
        p.add_argument("--n", type=int)
        p.add_argument("--workers", type=_positive, default=1)

    p = sub.add_parser("enumerate", help="write corpora of k-regular graphs")
    common(p, True)
    p.add_argument("--band", action="store_true", help="all feasible n in 2k-2..2k+2")
    p.add_argument("--all-graphs", action="store_true", help="skip the 2-connected filter")
    p.add_argument("--out", help="directory for r{k}_n{n}[_2c].g6 files")

    for name, help_ in (("verify", "2-path check over n <= 2k"),
                        ("corollary4", "2-path Hamiltonicity check over n <= 2k")):
        p = sub.add_parser(name, help=help_)
        common(p, True)
        p.add_argument("--in", dest="input", help="graph6 file instead of enumeration")
        p.add_argument("--format", choices=("text", "tsv"), default="text")

    p = sub.add_parser("kronk", help="degree-sum condition sweep over connected graphs")
    common(p)
    p.add_argument("--l", type=int, choices=(1, 2))
    p.add_argument("--in", dest="input", help="graph6 file instead of enumeration")

    p = sub.add_parser("sharpness", help="two-copy construction on 2k+2 vertices")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("band", help="explore n = 2k+1, 2k+2 without asserting")
    common(p, True)
    p.add_argument("--format", choices=("text", "tsv"), default="text")

    p = sub.add_parser("hop", help="hopping closure trace for one instance")
    p.add_argument("--g6")
    p.add_argument("--cycle", type=_int_list)
    p.add_argument("--v0", type=int)
    p.add_argument("--k", type=int, help="also check |X| >= k")

    p = sub.add_parser("check", help="Hamiltonian cycle through one path")
    p.add_argument("--g6")
    p.add_argument("--path", type=_int_list)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except Graph6Error as exc:
        print(f"error: malformed graph6 input: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
