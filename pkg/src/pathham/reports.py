"""Plain-text and tab-separated serialization of verification reports.

Column order of the tabular form is fixed; see ``docs/report-format.md``.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Path
from .verify import BandRow, Corollary4Result, VerificationReport

TSV_COLUMNS = ("graph_id", "n", "k", "length", "paths_total", "hypothesis_failures",
               "covered", "conclusion_failures")
BAND_COLUMNS = ("graph_id", "n", "k", "paths_total", "hypothesis_failures",
                "conclusion_failures")


def fmt_path(p: Path) -> str:
    return "-".join(map(str, p))


def fmt_cycle(c) -> str:
    return ",".join(map(str, c))


def report_lines(rep: VerificationReport) -> list[str]:
    lines = []
    for length, c in sorted(rep.counts.items()):
        lines.append(f"graph {rep.graph_id} n={rep.n} k={rep.k} length={length} "
                     f"paths={c.paths_total} hypothesis_failures={c.hypothesis_failures} "
                     f"covered={c.covered} conclusion_failures={c.conclusion_failures}")
    for p, method in rep.conclusion_failures:
        lines.append(f"  FAIL path {fmt_path(p)} lies on no Hamiltonian cycle ({method})")
    return lines


def summary_line(reports: Sequence[VerificationReport]) -> str:
    paths = hyp = cov = fail = 0
    for r in reports:
        t = r.totals()
        paths += t.paths_total
        hyp += t.hypothesis_failures
        cov += t.covered
        fail += t.conclusion_failures
    return (f"summary graphs={len(reports)} paths={paths} hypothesis_failures={hyp} "
            f"covered={cov} conclusion_failures={fail}")


def text_report(title: str, reports: Sequence[VerificationReport]) -> str:
    lines = [f"# {title}"]
    for r in reports:
        lines += report_lines(r)
    lines.append(summary_line(reports))
    return "\n".join(lines) + "\n"


def tsv_report(reports: Sequence[VerificationReport]) -> str:
    lines = ["\t".join(TSV_COLUMNS)]
    for r in reports:
        for length, c in sorted(r.counts.items()):
            lines.append("\t".join(map(str, (r.graph_id, r.n, r.k, length, c.paths_total,
                                              c.hypothesis_failures, c.covered,
                                              c.conclusion_failures))))
    return "\n".join(lines) + "\n"


def corollary4_text(title: str, results: Sequence[Corollary4Result]) -> str:
    lines = [f"# {title}"]
    for res in results:
        r = res.report
        status = "exempt" if not res.hypothesis else ("holds" if res.conclusion else "FAILS")
        line = (f"graph {r.graph_id} n={r.n} k={r.k} hypothesis={int(res.hypothesis)} "
                f"two_path_hamiltonian={int(res.conclusion)} {status}")
        if res.failing_path is not None:
            line += f" first_uncovered={fmt_path(res.failing_path)}"
        lines.append(line)
    failures = sum(not res.ok for res in results)
    exempt = sum(not res.hypothesis for res in results)
    lines.append(f"summary graphs={len(results)} exempt={exempt} failures={failures}")
    return "\n".join(lines) + "\n"


def band_text(k: int, rows: Sequence[BandRow]) -> str:
    lines = [f"# open band k={k} (exploratory, nothing asserted)"]
    for row in rows:
        lines.append(f"graph {row.graph_id} n={row.n} paths={row.paths_total} "
                     f"hypothesis_failures={row.hypothesis_failures} "
                     f"uncovered_non_cut={row.conclusion_failures}")
    with_fail = sum(r.conclusion_failures > 0 for r in rows)
    lines.append(f"summary graphs={len(rows)} graphs_with_uncovered={with_fail}")
    return "\n".join(lines) + "\n"


def band_tsv(k: int, rows: Sequence[BandRow]) -> str:
    lines = ["\t".join(BAND_COLUMNS)]
    for r in rows:
        lines.append("\t".join(map(str, (r.graph_id, r.n, k, r.paths_total,
                                          r.hypothesis_failures, r.conclusion_failures))))
    return "\n".join(lines) + "\n"
