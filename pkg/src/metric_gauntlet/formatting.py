"""Human-readable tables built from the JSON report objects.

Every formatter takes the plain dict that is written as JSON, so a table
re-rendered from a saved JSON file is identical to the original.
BLEU, METEOR and ROUGE-L print with 2 decimals; CIDEr-D and the
embedding F-score with 3.
"""

from __future__ import annotations

from typing import Dict, List, Optional

COLUMNS = [
    ("bleu1", "BLEU1", 2),
    ("bleu2", "BLEU2", 2),
    ("bleu3", "BLEU3", 2),
    ("bleu4", "BLEU4", 2),
    ("meteor", "METEOR", 2),
    ("rouge_l", "ROUGE-L", 2),
    ("cider_d", "CIDEr-D", 3),
    ("bert_f", "EMB-F", 3),
]
DECIMALS = {key: d for key, _, d in COLUMNS}


def fmt(key: str, value: Optional[float]) -> str:
    if value is None:
        return "--"
    return f"{value:.{DECIMALS[key]}f}"


def _columns(rows: List[Dict], keys=None):
    keys = keys or [k for k, _, _ in COLUMNS]
    # drop columns that are absent everywhere (e.g. no embeddings)
    return [c for c in COLUMNS if c[0] in keys and any(r.get(c[0]) is not None for r in rows)]


def _render(header: List[str], body: List[List[str]]) -> str:
    widths = [max(len(row[i]) for row in [header] + body) for i in range(len(header))]
    lines = ["  ".join(cell.rjust(w) if i else cell.ljust(w)
                       for i, (cell, w) in enumerate(zip(row, widths))).rstrip()
             for row in [header] + body]
    return "\n".join(lines) + "\n"


def report_table(report: Dict, label: str = "") -> str:
    cols = _columns([report])
    return _render([""] + [name for _, name, _ in cols],
                   [[label] + [fmt(k, report.get(k)) for k, _, _ in cols]])


def loo_table(result: Dict) -> str:
    """mean ±sd rows, one per evaluation mode present in ``result``."""
    modes = [(name, result[key]) for key, name in (("rvr", "RvR"), ("svr", "SvR"))
             if result.get(key)]
    cols = _columns([m["mean"] for _, m in modes])
    body = []
    for name, res in modes:
        row = [name]
        for key, _, _ in cols:
            mean, sd = res["mean"].get(key), res["sd"].get(key)
            row.append("--" if mean is None else f"{fmt(key, mean)} ±{fmt(key, sd)}")
        body.append(row)
    return _render([""] + [label for _, label, _ in cols], body)


def perturb_table(outcome: Dict) -> str:
    cols = _columns([outcome["before"]])
    before, after, deltas = outcome["before"], outcome["after"], outcome["deltas"]
    body = [
        ["before"] + [fmt(k, before.get(k)) for k, _, _ in cols],
        ["after"] + [fmt(k, after.get(k)) for k, _, _ in cols],
        ["delta"] + [fmt(k, deltas.get(k)) for k, _, _ in cols],
    ]
    table = _render([""] + [name for _, name, _ in cols], body)
    pct = 100.0 * outcome["substitution_fraction"]
    return table + f"substituted {outcome['substituted_tokens']} tokens ({pct:.2f}%)\n"


SEARCH_COLUMNS = ["bleu1", "bleu4", "meteor", "cider_d", "rouge_l", "bert_f"]


def search_row(result: Dict) -> str:
    report = result["full_report"]
    cols = [c for c in COLUMNS if c[0] in SEARCH_COLUMNS]
    cols.sort(key=lambda c: SEARCH_COLUMNS.index(c[0]))
    header = ["sentence"] + [name for _, name, _ in cols]
    row = [f"*{result['sentence']}*"] + [fmt(k, report.get(k)) for k, _, _ in cols]
    text = _render(header, [row])
    return text + (f"objective {result['objective']} = {result['objective_score']:.4f} "
                   f"over {result['candidates_evaluated']} unique candidates\n")
