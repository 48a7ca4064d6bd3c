"""Score formatting for the smatch and pipeline-eval commands."""

import logging
from pathlib import Path
from typing import Dict, List, Union

from amrsmith.eval.models import EvalResult
from amrsmith.smatch.models import CorpusScore, MetricKind, ScoreReport

logger = logging.getLogger(__name__)

PER_PAIR_HEADER = "index\tmatched\tpred_total\tgold_total\tP\tR\tF"


class ScoreReporter:
    """Format corpus scores, the fine-grained table and per-pair rows."""

    def summary_line(self, report: ScoreReport) -> str:
        return report.summary_line()

    def breakdown_lines(self, table: Dict[MetricKind, ScoreReport]) -> List[str]:
        """Fine-grained table: metric, P, R, F, one row per metric view."""
        width = max(len(metric.title) for metric in table) if table else 0
        lines = [f"{'Metric':<{width}}  {'P':>6}  {'R':>6}  {'F':>6}"]
        for metric, report in table.items():
            lines.append(
                f"{metric.title:<{width}}  {report.precision:6.4f}  {report.recall:6.4f}  {report.f:6.4f}"
            )
        return lines

    def per_pair_rows(self, score: CorpusScore) -> List[str]:
        rows = [PER_PAIR_HEADER]
        for index, report in enumerate(score.pairs):
            rows.append(
                f"{index}\t{report.matched}\t{report.pred_total}\t{report.gold_total}\t"
                f"{report.precision:.4f}\t{report.recall:.4f}\t{report.f:.4f}"
            )
        return rows

    def write_per_pair(self, score: CorpusScore, path: Union[str, Path]) -> None:
        """Per-pair TSV with a header row."""
        with open(path, "w", encoding="utf-8") as f:
            f.writelines(row + "\n" for row in self.per_pair_rows(score))
        logger.info(f"Wrote {len(score.pairs)} per-pair scores to {path}")

    def worst_pairs(self, score: CorpusScore, count: int = 5) -> List[int]:
        """Indices of the lowest-F pairs, lowest first."""
        ranked = sorted(range(len(score.pairs)), key=lambda i: (score.pairs[i].f, i))
        return ranked[:count]

    def eval_lines(self, result: EvalResult) -> List[str]:
        """Summary line, then the breakdown table when one was computed."""
        lines = [self.summary_line(result.total)]
        if result.breakdown:
            lines.append("")
            lines.extend(self.breakdown_lines(result.breakdown))
        return lines
