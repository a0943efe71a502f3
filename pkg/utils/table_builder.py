"""
對齊的 ASCII 表格（table 輸出模式）
"""
from typing import Any, List, Sequence

from models.schemas import AnalysisReport, CorpusSummary, VerificationResult


class TableBuilder:
    """ASCII 表格建構器"""

    @staticmethod
    def table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
        """
        欄寬依內容對齊的表格

        Args:
            headers: 欄名
            rows: 資料列（任意值，以 str() 轉換）

        Returns:
            str: 多行文字
        """
        cells = [[str(h) for h in headers]] + [[TableBuilder._cell(v) for v in row] for row in rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
        rule = "+" + "+".join("-" * (w + 2) for w in widths) + "+"
        lines = [rule, TableBuilder._line(cells[0], widths), rule]
        lines.extend(TableBuilder._line(r, widths) for r in cells[1:])
        lines.append(rule)
        return "\n".join(lines)

    @staticmethod
    def key_values(title: str, pairs: Sequence[Sequence[Any]]) -> str:
        return title + "\n" + TableBuilder.table(["field", "value"], pairs)

    @staticmethod
    def analysis(report: AnalysisReport) -> str:
        """分析報告的表格版本"""
        g, p, ideal, flags = report.graph, report.polytope, report.ideal, report.flags
        s = ideal.summary
        sections = [
            TableBuilder.key_values("graph", [
                ("n", g.n), ("m", g.m), ("edges", g.literal),
                ("bipartite", g.bipartite), ("degree sequence", g.degree_sequence),
            ]),
            TableBuilder.key_values("polytope", [
                ("dim", p.dim), ("delta", p.delta), ("degree", p.degree),
                ("codegree", p.codegree), ("codegree (interior)", p.codegree_by_interior),
                ("L(0..d)", p.ehrhart_counts),
            ]),
            TableBuilder.table(
                ["q", "mu_q", "beta_2,q+1", "EG expected"],
                [
                    (c.q, ideal.betti.mu.get(c.q, 0), ideal.betti.beta2.get(c.q + 1, "-"), c.expected)
                    for c in s.eisenbud_goto
                ]
            ),
            TableBuilder.key_values("ideal", [
                ("codim", s.codim), ("generator degrees", s.generator_degrees),
                ("hypersurface", s.hypersurface),
                ("linear in degree", [q for q, ok in s.linearity.items() if ok]),
                ("truncated at", f"q_max={ideal.betti.q_max}, j_max={ideal.betti.j_max}"),
            ]),
            TableBuilder.key_values("flags", [
                ("4-cycle", flags.has_4_cycle), ("triangles", flags.triangle_count),
                ("disjoint odd cycles", flags.disjoint_odd_cycles or "-"),
                ("odd cycles pairwise intersect", flags.odd_cycles_pairwise_intersect),
                ("special subgraphs", TableBuilder._special_counts(report)),
            ]),
        ]
        return "\n\n".join(sections)

    @staticmethod
    def corpus(summary: CorpusSummary) -> str:
        """語料庫摘要：逐圖一列 + 總計"""
        rows = [
            (r.index, r.n, r.m, r.graph, r.bipartite, r.has_4_cycle,
             "-" if r.degree is None else r.degree,
             "-" if r.hypersurface is None else r.hypersurface)
            for r in summary.records
        ]
        body = TableBuilder.table(["#", "n", "m", "graph", "bipartite", "4-cycle", "deg", "hypersurface"], rows)
        totals = [
            ("graphs", summary.total),
            ("by n", summary.counts_by_n),
            ("with 4-cycle", summary.four_cycle_count),
            ("hypersurfaces", "-" if summary.hypersurface_count is None else summary.hypersurface_count),
            ("degree histogram", summary.degree_histogram or "-"),
        ]
        return body + "\n\n" + TableBuilder.key_values("totals", totals)

    @staticmethod
    def verification(result: VerificationResult) -> str:
        pairs = [
            ("lemma", result.lemma_id.value),
            ("instances checked", result.instances_checked),
            ("counterexamples", len(result.counterexamples)),
            ("asserted", result.asserted),
            ("wall time (s)", f"{result.wall_time:.2f}"),
        ]
        pairs.extend((k, v) for k, v in result.details.items())
        text = TableBuilder.key_values(result.lemma_id.value, pairs)
        for ce in result.counterexamples:
            text += f"\n\ncounterexample {ce.graph}\n{ce.edge_list}"
        return text

    @staticmethod
    def _special_counts(report: AnalysisReport) -> str:
        counts: dict = {}
        for s in report.flags.special_subgraphs:
            label = s.tag.value if s.k is None else f"C_{s.k},{s.l}"
            counts[label] = counts.get(label, 0) + 1
        return ", ".join(f"{k} x{v}" for k, v in counts.items()) or "-"

    @staticmethod
    def _cell(value: Any) -> str:
        if isinstance(value, bool):
            return "yes" if value else "no"
        if isinstance(value, (list, tuple)):
            return "[" + ", ".join(str(v) for v in value) + "]"
        return str(value)

    @staticmethod
    def _line(cells: List[str], widths: List[int]) -> str:
        return "| " + " | ".join(c.ljust(w) for c, w in zip(cells, widths)) + " |"
