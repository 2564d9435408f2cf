"""Convergence experiment: analytic formulas against the Nystrom reference.

For every node count the Kerzman-Stein system is solved once; each
(method, truncation) column then evaluates its formula at the same boundary
nodes and records the sup-norm discrepancy.
"""
import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from .errors import InvalidArgument, SzegoError
from .kernel import AnnulusDomain, Method, TruncationSpec, evaluate
from .nystrom import build_boundary_grid, error_norm, solve_ks

FAMILIES = (Method.SERIES, Method.ALTERNATING_SERIES, Method.PRODUCT)
_LABEL = {Method.SERIES: "S_{}", Method.ALTERNATING_SERIES: "S*_{}", Method.PRODUCT: "S**_{}"}


class ExperimentError(SzegoError):
    """A table cell failed; the message names the cell."""


@dataclass
class ExperimentConfig:
    rho: float = 0.5
    a: complex = 0.7j
    series4_widths: List[int] = field(default_factory=lambda: [10, 50, 100])
    series5_widths: List[int] = field(default_factory=lambda: [10, 50])
    product_depths: List[int] = field(default_factory=lambda: [15, 20, 25])
    node_counts: List[int] = field(default_factory=lambda: [16, 32, 64, 128])
    output_format: str = "csv"
    output_path: Optional[str] = None

    def __post_init__(self):
        AnnulusDomain(self.rho, self.a)
        for name in ("series4_widths", "series5_widths", "product_depths", "node_counts"):
            if not getattr(self, name):
                raise InvalidArgument(f"{name} must be nonempty")
        if self.output_format not in ("csv", "json"):
            raise InvalidArgument(f"unknown output format {self.output_format!r}")

    def columns(self):
        cols = [(Method.SERIES, N) for N in self.series4_widths]
        cols += [(Method.ALTERNATING_SERIES, N) for N in self.series5_widths]
        cols += [(Method.PRODUCT, P) for P in self.product_depths]
        return cols


@dataclass
class ErrorTable:
    rho: float
    a: complex
    node_counts: List[int]
    columns: List[Tuple[Method, int]]
    cells: np.ndarray

    def cell(self, n, method, trunc):
        i = self.node_counts.index(n)
        j = self.columns.index((Method(method), trunc))
        return float(self.cells[i, j])

    def column(self, method, trunc):
        j = self.columns.index((Method(method), trunc))
        return self.cells[:, j].copy()

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        first = True
        for family in FAMILIES:
            idx = [j for j, (m, _) in enumerate(self.columns) if m is family]
            if not idx:
                continue
            if not first:
                buf.write("\n")
            first = False
            buf.write(f"# {family.value}\n")
            writer.writerow(["n"] + [_LABEL[family].format(self.columns[j][1]) for j in idx])
            for i, n in enumerate(self.node_counts):
                writer.writerow([n] + [f"{self.cells[i, j]:.5e}" for j in idx])
        return buf.getvalue()

    def to_json(self):
        tables = {}
        for family in FAMILIES:
            idx = [j for j, (m, _) in enumerate(self.columns) if m is family]
            if not idx:
                continue
            tables[family.value] = {
                "truncations": [self.columns[j][1] for j in idx],
                "rows": [
                    {"n": n, "errors": [float(self.cells[i, j]) for j in idx]}
                    for i, n in enumerate(self.node_counts)
                ],
            }
        doc = {"rho": self.rho, "a": [self.a.real, self.a.imag], "tables": tables}
        return json.dumps(doc, indent=2) + "\n"

    def render(self, fmt):
        return self.to_csv() if fmt == "csv" else self.to_json()


def _row(dom, n, columns):
    grid = build_boundary_grid(dom.rho, n)
    try:
        reference = solve_ks(grid, dom.a)
    except SzegoError as exc:
        raise ExperimentError(f"n={n}: Nystrom solve failed: {exc}") from exc
    row = np.empty(len(columns))
    for j, (method, k) in enumerate(columns):
        trunc = (TruncationSpec(product_depth=k) if method is Method.PRODUCT
                 else TruncationSpec(series_half_width=k))
        try:
            values = evaluate(dom, grid.nodes, method, trunc)
        except SzegoError as exc:
            raise ExperimentError(f"n={n}, {method.value}, truncation {k}: {exc}") from exc
        row[j] = error_norm(values, reference)
    return row


def run_experiment(cfg, workers=1):
    """Fill the error table for ``cfg``; rows may run on ``workers`` threads."""
    dom = AnnulusDomain(cfg.rho, cfg.a)
    columns = cfg.columns()
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        rows = list(pool.map(lambda n: _row(dom, n, columns), cfg.node_counts))
    return ErrorTable(rho=dom.rho, a=dom.a, node_counts=list(cfg.node_counts),
                      columns=columns, cells=np.vstack(rows))


def write_table(table, fmt="csv", path=None):
    """Render and write to ``path``; returns the rendered text."""
    text = table.render(fmt)
    if path is not None:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)
    return text
