"""File formats, weighted-network thresholding, synthetic data, and reports.

Formats:

* Graph container — UTF-8 text, transaction style: a ``t # <id> <label>``
  line opens each graph (label is the class, -1 or +1), followed by
  ``v <idx> <label>`` lines (indices must be 0..n-1 in order) and
  ``e <u> <v> <label>`` lines.
* Side view — CSV with a header row and one data row per graph, in dataset
  order; one file per view so per-view weights map 1:1 to files.
* Report — JSON with exactly the top-level keys
  ``{"task", "config", "results", "seed", "version"}``, keys sorted, floats
  rounded to 6 significant digits, NaN/inf rejected.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .graphs import Graph, GraphDataset, GraphError
from .views import SideView, minmax_normalize

__all__ = [
    "DataFormatError",
    "WeightedNetwork",
    "DatasetBundle",
    "SynthConfig",
    "load_graphs",
    "write_graphs",
    "load_side_views",
    "write_side_view",
    "load_bundle",
    "write_bundle",
    "threshold_network",
    "generate_synthetic",
    "write_report",
]


class DataFormatError(ValueError):
    """Malformed or inconsistent input files."""


@dataclass
class WeightedNetwork:
    """A symmetric weight matrix in [0,1] with zero diagonal, plus node labels."""

    weights: np.ndarray
    node_labels: tuple

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=np.float64)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise ValueError("weights must be a square matrix")
        if not np.array_equal(w, w.T):
            raise ValueError("weights must be symmetric")
        if np.any(np.diag(w) != 0):
            raise ValueError("diagonal must be zero")
        if np.any(w < 0) or np.any(w > 1):
            raise ValueError("weights must lie in [0, 1]")
        if len(self.node_labels) != w.shape[0]:
            raise ValueError("one node label per row required")
        self.weights = w
        self.node_labels = tuple(int(l) for l in self.node_labels)

    @property
    def n(self) -> int:
        return self.weights.shape[0]


@dataclass
class DatasetBundle:
    """Graphs, their labels, and any number of side views, consistently sized."""

    dataset: GraphDataset
    views: list
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        for v in self.views:
            if v.n != self.dataset.n:
                raise DataFormatError(
                    f"view '{v.name}' has {v.n} rows for {self.dataset.n} graphs"
                )

    @property
    def n(self) -> int:
        return self.dataset.n

    def subset(self, indices) -> "DatasetBundle":
        idx = [int(i) for i in indices]
        views = [SideView(v.values[idx], name=v.name, weight=v.weight) for v in self.views]
        return DatasetBundle(self.dataset.subset(idx), views, dict(self.provenance))


@dataclass
class SynthConfig:
    """Synthetic bundle layout: planted discriminative pattern over background.

    Node labels are unique region ids 0..n_nodes-1.  Background edges come
    from per-pair U[0,1] weights thresholded at ``threshold`` (default
    ``1 - background_p``, so each background edge appears with probability
    ``background_p``).  The planted pattern is inserted with class-specific
    fidelity and scrubbed from graphs not chosen to carry it, so containment
    equals the planting coin exactly.  ``common_edges``, when set, are present
    in every graph — a frequent-but-useless motif for baseline comparisons.
    Each view draws rows from class-conditional Gaussians with means
    ``+-separation`` and the given sigma, clipped to [0, 1].
    """

    n_per_class: int = 30
    n_nodes: int = 20
    background_p: float = 0.1
    pattern_edges: tuple = ((0, 1), (1, 2))
    fidelity_pos: float = 0.9
    fidelity_neg: float = 0.1
    common_edges: Optional[tuple] = None
    view_dims: tuple = (3,)
    view_separation: tuple = (0.5,)
    view_sigma: tuple = (0.5,)
    threshold: Optional[float] = None
    seed: int = 0

    def __post_init__(self):
        if self.n_per_class < 1:
            raise ValueError("n_per_class must be at least 1")
        if self.n_nodes < 2:
            raise ValueError("graphs need at least 2 nodes")
        if not (0.0 <= self.background_p <= 1.0):
            raise ValueError("background_p must lie in [0, 1]")
        if not (0.0 <= self.fidelity_pos <= 1.0 and 0.0 <= self.fidelity_neg <= 1.0):
            raise ValueError("fidelities must lie in [0, 1]")
        if self.threshold is not None and not (0.0 <= self.threshold <= 1.0):
            raise ValueError("threshold must lie in [0, 1]")
        self.pattern_edges = self._check_edges(self.pattern_edges, "pattern_edges")
        if not self.pattern_edges:
            raise ValueError("pattern_edges must not be empty")
        if not self._pattern_connected():
            raise ValueError("planted pattern must be connected")
        if self.common_edges is not None:
            self.common_edges = self._check_edges(self.common_edges, "common_edges")
            if set(self.common_edges) & set(self.pattern_edges):
                raise ValueError("common_edges may not overlap pattern_edges")
        if not (len(self.view_dims) == len(self.view_separation) == len(self.view_sigma)):
            raise ValueError("view_dims/view_separation/view_sigma lengths must match")
        if any(d < 1 for d in self.view_dims):
            raise ValueError("view dimensionalities must be at least 1")
        if any(s <= 0 for s in self.view_sigma):
            raise ValueError("view sigmas must be positive")

    def _check_edges(self, edges, what) -> tuple:
        out = []
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"{what}: self-loop ({u}, {v})")
            if not (0 <= u < self.n_nodes and 0 <= v < self.n_nodes):
                raise ValueError(f"{what}: edge ({u}, {v}) exceeds n_nodes")
            out.append((min(u, v), max(u, v)))
        if len(set(out)) != len(out):
            raise ValueError(f"{what}: duplicate edges")
        return tuple(out)

    def _pattern_connected(self) -> bool:
        verts = {v for e in self.pattern_edges for v in e}
        seen = {next(iter(verts))}
        grew = True
        while grew:
            grew = False
            for u, v in self.pattern_edges:
                if (u in seen) != (v in seen):
                    seen.update((u, v))
                    grew = True
        return seen == verts


# -- graph container format -----------------------------------------------------


def load_graphs(path) -> GraphDataset:
    """Parse the transaction text format; errors carry line numbers."""
    graphs: list[Graph] = []
    labels: list[int] = []
    cur_nodes: Optional[list[int]] = None
    cur_edges: list[tuple[int, int, int]] = []
    cur_keys: set = set()
    cur_line = 0

    def finalize():
        if cur_nodes is None:
            return
        try:
            graphs.append(Graph(cur_nodes, cur_edges))
        except GraphError as exc:  # backstop; parse checks should catch first
            raise DataFormatError(f"graph at line {cur_line}: {exc}") from exc

    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            parts = raw.split()
            if not parts:
                continue
            kind = parts[0]
            try:
                if kind == "t":
                    if len(parts) != 4 or parts[1] != "#":
                        raise DataFormatError(
                            f"line {lineno}: expected 't # <id> <label>'"
                        )
                    label = int(parts[3])
                    if label not in (-1, 1):
                        raise DataFormatError(
                            f"line {lineno}: graph label must be -1 or +1"
                        )
                    finalize()
                    cur_nodes, cur_edges, cur_keys = [], [], set()
                    cur_line = lineno
                    labels.append(label)
                elif kind == "v":
                    if cur_nodes is None:
                        raise DataFormatError(f"line {lineno}: 'v' before any 't'")
                    if len(parts) != 3:
                        raise DataFormatError(f"line {lineno}: expected 'v <idx> <label>'")
                    idx, vlabel = int(parts[1]), int(parts[2])
                    if idx != len(cur_nodes):
                        raise DataFormatError(
                            f"line {lineno}: vertex indices must run 0..n-1 in order"
                        )
                    if vlabel < 0:
                        raise DataFormatError(f"line {lineno}: negative node label")
                    cur_nodes.append(vlabel)
                elif kind == "e":
                    if cur_nodes is None:
                        raise DataFormatError(f"line {lineno}: 'e' before any 't'")
                    if len(parts) != 4:
                        raise DataFormatError(
                            f"line {lineno}: expected 'e <u> <v> <label>'"
                        )
                    u, v, elabel = int(parts[1]), int(parts[2]), int(parts[3])
                    if not (0 <= u < len(cur_nodes) and 0 <= v < len(cur_nodes)):
                        raise DataFormatError(
                            f"line {lineno}: edge references undeclared vertex"
                        )
                    if u == v:
                        raise DataFormatError(f"line {lineno}: self-loop")
                    key = (min(u, v), max(u, v))
                    if key in cur_keys:
                        raise DataFormatError(f"line {lineno}: duplicate edge {key}")
                    if elabel < 0:
                        raise DataFormatError(f"line {lineno}: negative edge label")
                    cur_keys.add(key)
                    cur_edges.append((u, v, elabel))
                else:
                    raise DataFormatError(f"line {lineno}: unrecognized record '{kind}'")
            except ValueError as exc:
                if isinstance(exc, DataFormatError):
                    raise
                raise DataFormatError(f"line {lineno}: {exc}") from exc
    finalize()
    if not graphs:
        raise DataFormatError("no graphs")
    return GraphDataset(graphs, labels)


def write_graphs(dataset: GraphDataset, path) -> None:
    lines = []
    for i, (g, y) in enumerate(zip(dataset.graphs, dataset.labels)):
        lines.append(f"t # {i} {int(y)}")
        for v, vlabel in enumerate(g.node_labels):
            lines.append(f"v {v} {vlabel}")
        for u, v, elabel in g.edges():
            lines.append(f"e {u} {v} {elabel}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


# -- side-view CSV ----------------------------------------------------------------


def load_side_views(paths: Sequence, expected_rows: Optional[int] = None) -> list:
    """Load and min-max normalize one CSV per view; names from file stems."""
    views = []
    for p in paths:
        with open(p, newline="", encoding="utf-8") as fh:
            rows = [r for r in csv.reader(fh) if r and any(c.strip() for c in r)]
        if not rows:
            raise DataFormatError(f"{p}: empty view file")
        header = rows[0]
        data = []
        for lineno, row in enumerate(rows[1:], start=2):
            if len(row) != len(header):
                raise DataFormatError(
                    f"{p}: line {lineno} has {len(row)} cells, header has {len(header)}"
                )
            try:
                data.append([float(c) for c in row])
            except ValueError as exc:
                raise DataFormatError(f"{p}: non-numeric cell at line {lineno}") from exc
        if not data:
            raise DataFormatError(f"{p}: no data rows")
        try:
            view = SideView(np.array(data, dtype=np.float64), name=Path(p).stem)
        except ValueError as exc:
            raise DataFormatError(f"{p}: {exc}") from exc
        views.append(minmax_normalize(view))
    counts = {v.n for v in views}
    if len(counts) > 1:
        raise DataFormatError(f"views disagree on row count: {sorted(counts)}")
    if expected_rows is not None and views and views[0].n != expected_rows:
        raise DataFormatError(
            f"row-count mismatch with graphs: views have {views[0].n} rows, "
            f"dataset has {expected_rows}"
        )
    return views


def write_side_view(view: SideView, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow([f"c{j}" for j in range(view.dim)])
        for row in view.values:
            writer.writerow([repr(float(x)) for x in row])


def load_bundle(graphs_path, view_paths: Sequence) -> DatasetBundle:
    dataset = load_graphs(graphs_path)
    views = load_side_views(view_paths, expected_rows=dataset.n)
    return DatasetBundle(
        dataset,
        views,
        provenance={"graphs": str(graphs_path), "views": [str(p) for p in view_paths]},
    )


def write_bundle(bundle: DatasetBundle, out_dir) -> dict:
    """Write graphs.txt plus one CSV per view; returns the written paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {"graphs": out / "graphs.txt"}
    write_graphs(bundle.dataset, paths["graphs"])
    paths["views"] = []
    for view in bundle.views:
        vp = out / f"{view.name}.csv"
        write_side_view(view, vp)
        paths["views"].append(vp)
    prov = out / "provenance.json"
    prov.write_text(
        json.dumps(_jsonable(bundle.provenance), sort_keys=True, indent=2) + "\n",
        encoding="utf-8",
    )
    paths["provenance"] = prov
    return paths


# -- thresholding and synthesis ------------------------------------------------------


def threshold_network(network: WeightedNetwork, threshold: float) -> Graph:
    """Binarize: keep edge (u, v) iff weight strictly greater than threshold."""
    if not (0.0 <= threshold <= 1.0):
        raise ValueError("threshold must lie in [0, 1]")
    w = network.weights
    n = network.n
    edges = [
        (u, v, 0) for u in range(n) for v in range(u + 1, n) if w[u, v] > threshold
    ]
    return Graph(network.node_labels, edges)


def generate_synthetic(cfg: SynthConfig) -> DatasetBundle:
    """Deterministic planted-signal bundle; see :class:`SynthConfig`."""
    rng = np.random.default_rng(cfg.seed)
    n = 2 * cfg.n_per_class
    labels = np.array([1] * cfg.n_per_class + [-1] * cfg.n_per_class)
    cutoff = cfg.threshold if cfg.threshold is not None else 1.0 - cfg.background_p
    pattern = set(cfg.pattern_edges)
    common = set(cfg.common_edges or ())
    nn = cfg.n_nodes
    node_labels = tuple(range(nn))
    iu = np.triu_indices(nn, k=1)

    graphs = []
    for i in range(n):
        w = np.zeros((nn, nn))
        w[iu] = rng.random(len(iu[0]))
        network = WeightedNetwork(w + w.T, node_labels)
        base = threshold_network(network, cutoff)
        edge_set = {(u, v) for u, v, _ in base.edges()}
        fidelity = cfg.fidelity_pos if labels[i] == 1 else cfg.fidelity_neg
        if rng.random() < fidelity:
            edge_set |= pattern
        else:
            edge_set -= pattern
        edge_set |= common
        graphs.append(Graph(node_labels, sorted((u, v, 0) for u, v in edge_set)))

    views = []
    for vi, (dim, sep, sigma) in enumerate(
        zip(cfg.view_dims, cfg.view_separation, cfg.view_sigma)
    ):
        loc = (labels * sep)[:, None].astype(float)
        vals = rng.normal(loc=np.broadcast_to(loc, (n, dim)), scale=sigma)
        views.append(SideView(np.clip(vals, 0.0, 1.0), name=f"view{vi}", weight=1.0))

    provenance = {
        "generator": "synthetic",
        "seed": cfg.seed,
        "n_per_class": cfg.n_per_class,
        "n_nodes": cfg.n_nodes,
        "background_p": cfg.background_p,
        "threshold": cutoff,
        "pattern_edges": [list(e) for e in cfg.pattern_edges],
        "common_edges": [list(e) for e in (cfg.common_edges or ())],
        "fidelity_pos": cfg.fidelity_pos,
        "fidelity_neg": cfg.fidelity_neg,
        "view_dims": list(cfg.view_dims),
        "view_separation": list(cfg.view_separation),
        "view_sigma": list(cfg.view_sigma),
    }
    return DatasetBundle(GraphDataset(graphs, labels), views, provenance)


# -- reports --------------------------------------------------------------------------


_REPORT_KEYS = {"task", "config", "results", "seed", "version"}


def _jsonable(obj):
    """Recursively convert to JSON-safe values; floats at 6 significant digits."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            raise ValueError("NaN/inf values are not serializable in reports")
        return float(f"{x:.6g}")
    if isinstance(obj, str) or obj is None:
        return obj
    if isinstance(obj, np.ndarray):
        return [_jsonable(x) for x in obj.tolist()]
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        out = {}
        for k, v in obj.items():
            if not isinstance(k, str):
                raise ValueError("report keys must be strings")
            out[k] = _jsonable(v)
        return out
    raise ValueError(f"unsupported report value of type {type(obj).__name__}")


def write_report(report: dict, path) -> None:
    """Serialize a report dict to canonical JSON (sorted keys, 6-sig-digit floats)."""
    if set(report) != _REPORT_KEYS:
        raise ValueError(
            f"report must have exactly the top-level keys {sorted(_REPORT_KEYS)}"
        )
    text = json.dumps(_jsonable(report), sort_keys=True, indent=2) + "\n"
    Path(path).write_text(text, encoding="utf-8")
