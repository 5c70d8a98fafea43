"""Command-line interface.

Five tasks: ``ttest`` (screen side views for label consistency), ``mine``
(top-k subgraph selection), ``classify`` (stratified cross-validation),
``bench`` (pruned vs. unpruned search comparison), and ``synth`` (write a
synthetic bundle).

Every reporting task writes a canonical JSON report plus a CSV sidecar into
``--out``, and renders a PNG figure next to them unless ``--no-figures`` is
given.  Reports never contain wall-clock timings, so a rerun with the same
inputs and seed reproduces them byte for byte; timings live in the bench CSV
only.

Exit codes: 0 success, 1 usage or configuration error, 2 data error,
3 internal consistency failure (pruned and unpruned search disagree).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .dataio import (
    DataFormatError,
    DatasetBundle,
    SynthConfig,
    generate_synthetic,
    load_bundle,
    load_graphs,
    write_bundle,
    write_report,
)
from .graphs import GraphError
from .mining import MinerConfig, mine, mine_unpruned
from .pipeline import make_miner, stratified_cv
from .views import (
    DegenerateViewError,
    SideView,
    consistency_ttest,
    omega_matrix,
    phi_laplacian,
    rbf_kernel,
    theta_matrix,
)

__all__ = ["main"]


class UsageError(Exception):
    """Bad flag/config combinations; maps to exit code 1."""


class BenchMismatch(Exception):
    """Pruned and unpruned search disagreed; maps to exit code 3."""


# -- option plumbing -------------------------------------------------------------

# config-file key -> argparse dest ("lambda" is a Python keyword, hence "lam")
_CONFIG_KEYS = {
    "graphs": "graphs",
    "views": "views",
    "labels_in_graphs": "labels_in_graphs",
    "min_sup": "min_sup",
    "k": "k",
    "lambda": "lam",
    "threshold": "threshold",
    "folds": "folds",
    "seed": "seed",
    "no_prune": "no_prune",
    "no_figures": "no_figures",
    "out": "out",
    "method": "method",
    "n_per_class": "n_per_class",
    "n_nodes": "n_nodes",
    "background_p": "background_p",
    "fidelity_pos": "fidelity_pos",
    "fidelity_neg": "fidelity_neg",
    "pattern_edges": "pattern_edges",
    "common_edges": "common_edges",
    "view_dims": "view_dims",
    "view_sep": "view_sep",
    "view_sigma": "view_sigma",
}


def _floats(value, what) -> list:
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return [float(value)]
    if isinstance(value, str):
        value = value.split(",")
    try:
        return [float(v) for v in value]
    except (TypeError, ValueError):
        raise UsageError(f"{what}: expected a number or comma-separated numbers")


def _ints(value, what) -> list:
    out = []
    for v in _floats(value, what):
        if v != int(v):
            raise UsageError(f"{what}: expected integers")
        out.append(int(v))
    return out


def _single(values, what):
    if len(values) != 1:
        raise UsageError(f"{what} accepts a single value here, got {len(values)}")
    return values[0]


def _edge_list(value, what):
    if value is None:
        return None
    if isinstance(value, str):
        value = [p for p in value.split(",") if p]
    pairs = []
    for item in value:
        if isinstance(item, str):
            bits = item.split("-")
            if len(bits) != 2:
                raise UsageError(f"{what}: expected 'u-v' pairs such as 0-1,1-2")
            item = bits
        try:
            u, v = (int(x) for x in item)
        except (TypeError, ValueError):
            raise UsageError(f"{what}: expected 'u-v' pairs such as 0-1,1-2")
        pairs.append((u, v))
    return tuple(pairs)


def _load_config(path) -> dict:
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise UsageError(f"config file not found: {path}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"config file {path}: {exc}")
    if not isinstance(raw, dict):
        raise UsageError(f"config file {path}: expected a JSON object")
    out = {}
    for key, value in raw.items():
        if key not in _CONFIG_KEYS:
            raise UsageError(f"config file {path}: unknown key {key!r}")
        out[_CONFIG_KEYS[key]] = value
    return out


def _resolve(args, config: dict, dest: str, default=None):
    """Flag value if given, else config value, else the default."""
    value = getattr(args, dest, None)
    if value is not None:
        return value
    if dest in config and config[dest] is not None:
        return config[dest]
    return default


def _add_common(p: argparse.ArgumentParser, *, views=True):
    p.add_argument("--graphs", help="graph container file")
    if views:
        p.add_argument(
            "--views",
            action="append",
            help="side-view CSV; repeat the flag for more views",
        )
        p.add_argument(
            "--labels-in-graphs",
            action="store_const",
            const=True,
            dest="labels_in_graphs",
            help="affirm that class labels come from the graph file (they always do)",
        )
    p.add_argument("--seed", type=int, help="master seed (default 42)")
    p.add_argument("--out", help="output directory (default .)")
    p.add_argument("--config", help="JSON file with defaults; flags win")
    p.add_argument(
        "--no-figures",
        action="store_const",
        const=True,
        dest="no_figures",
        help="skip PNG rendering",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sidemine",
        description="discriminative subgraph selection guided by side views",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="task", required=True)

    p = sub.add_parser("ttest", help="screen side views for label consistency")
    _add_common(p)
    p.set_defaults(func=cmd_ttest)

    p = sub.add_parser("mine", help="select top-k subgraphs by the side-view objective")
    _add_common(p)
    p.add_argument("--min-sup", dest="min_sup", help="minimum support fraction (default 0.2)")
    p.add_argument("--k", help="result count; comma list sweeps several values")
    p.add_argument(
        "--lambda",
        dest="lam",
        action="append",
        help="view weight; repeat per view (default 1.0 each)",
    )
    p.add_argument("--no-prune", action="store_const", const=True, dest="no_prune")
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("classify", help="stratified cross-validated evaluation")
    _add_common(p)
    p.add_argument("--min-sup", dest="min_sup")
    p.add_argument("--k", help="feature count; comma list sweeps several values")
    p.add_argument("--lambda", dest="lam", action="append")
    p.add_argument("--folds", type=int, help="fold count (default 3)")
    p.add_argument(
        "--method",
        choices=("gmsv", "frequent", "side-only"),
        help="feature selection strategy (default gmsv)",
    )
    p.add_argument("--no-prune", action="store_const", const=True, dest="no_prune")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("bench", help="compare pruned and unpruned mining runs")
    _add_common(p)
    p.add_argument("--min-sup", dest="min_sup", help="comma list sweeps several thresholds")
    p.add_argument("--k", help="result count (single value)")
    p.add_argument("--lambda", dest="lam", action="append")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("synth", help="write a synthetic planted-pattern bundle")
    _add_common(p, views=False)
    p.add_argument("--n-per-class", dest="n_per_class", type=int)
    p.add_argument("--n-nodes", dest="n_nodes", type=int)
    p.add_argument("--background-p", dest="background_p", type=float)
    p.add_argument("--threshold", type=float, help="edge cutoff override (default 1 - background_p)")
    p.add_argument("--fidelity-pos", dest="fidelity_pos", type=float)
    p.add_argument("--fidelity-neg", dest="fidelity_neg", type=float)
    p.add_argument("--pattern-edges", dest="pattern_edges", help="planted edges, e.g. 0-1,1-2")
    p.add_argument("--common-edges", dest="common_edges", help="edges present in every graph")
    p.add_argument("--view-dims", dest="view_dims", help="comma list, one per view")
    p.add_argument("--view-sep", dest="view_sep", help="class mean offsets, one per view")
    p.add_argument("--view-sigma", dest="view_sigma", help="view noise levels, one per view")
    p.set_defaults(func=cmd_synth)

    return parser


# -- shared task helpers ------------------------------------------------------------


def _out_dir(args, config) -> Path:
    out = Path(_resolve(args, config, "out", "."))
    out.mkdir(parents=True, exist_ok=True)
    return out


def _load_inputs(args, config, *, need_views: bool):
    graphs_path = _resolve(args, config, "graphs")
    if graphs_path is None:
        raise UsageError("--graphs is required")
    views = _resolve(args, config, "views", [])
    if isinstance(views, str):
        views = [views]
    if need_views and not views:
        raise UsageError("this task needs at least one --views file")
    bundle = load_bundle(graphs_path, views) if views else None
    if bundle is None:
        dataset = load_graphs(graphs_path)
    else:
        dataset = bundle.dataset
    lams = _resolve(args, config, "lam")
    if lams is not None:
        lams = _floats(lams, "--lambda")
        if len(lams) != len(views):
            raise UsageError(
                f"--lambda given {len(lams)} times for {len(views)} views"
            )
    else:
        lams = [1.0] * len(views)
    side_views = []
    if bundle is not None:
        side_views = [
            SideView(v.values, name=v.name, weight=lam)
            for v, lam in zip(bundle.views, lams)
        ]
    return graphs_path, [str(v) for v in views], dataset, side_views, lams


def _laplacian(dataset, side_views):
    thetas = [(theta_matrix(rbf_kernel(v)), v.weight) for v in side_views]
    return phi_laplacian(omega_matrix(dataset.labels), thetas)


def _write_csv(path, header, rows):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([repr(v) if isinstance(v, float) else v for v in row])


def _figures_enabled(args, config) -> bool:
    return not bool(_resolve(args, config, "no_figures", False))


def _pattern_rows(result):
    rows = []
    for rank, sp in enumerate(result, start=1):
        rows.append(
            {
                "rank": rank,
                "code": str(sp.pattern.code),
                "q": sp.q,
                "q_lower_bound": sp.qhat,
                "support": sp.pattern.support,
            }
        )
    return rows


# -- subcommands ------------------------------------------------------------------


def cmd_ttest(args) -> int:
    config = _load_config(args.config) if args.config else {}
    seed = int(_resolve(args, config, "seed", 42))
    out = _out_dir(args, config)
    _, view_paths, dataset, side_views, _ = _load_inputs(args, config, need_views=True)

    children = np.random.SeedSequence(seed).spawn(len(side_views))
    rows = []
    for view, child in zip(side_views, children):
        kernel = rbf_kernel(view)
        try:
            r = consistency_ttest(kernel, dataset.labels, seed=int(child.generate_state(1)[0]))
            rows.append(
                {
                    "view": view.name,
                    "statistic": r.statistic,
                    "df": r.df,
                    "p_value": r.p_value,
                    "n_per_group": r.n_per_group,
                    "error": None,
                }
            )
        except DegenerateViewError as exc:
            print(f"view {view.name!r}: {exc}", file=sys.stderr)
            rows.append(
                {
                    "view": view.name,
                    "statistic": None,
                    "df": None,
                    "p_value": None,
                    "n_per_group": None,
                    "error": str(exc),
                }
            )

    report = {
        "task": "ttest",
        "seed": seed,
        "version": __version__,
        "config": {"graphs": str(_resolve(args, config, "graphs")), "views": view_paths},
        "results": {"views": rows},
    }
    write_report(report, out / "ttest.json")
    _write_csv(
        out / "ttest.csv",
        ["view", "statistic", "df", "p_value", "n_per_group", "error"],
        [[r["view"], r["statistic"], r["df"], r["p_value"], r["n_per_group"], r["error"]] for r in rows],
    )
    written = [out / "ttest.json", out / "ttest.csv"]
    if _figures_enabled(args, config):
        from .plotting import save_ttest_figure

        written.append(
            save_ttest_figure([(r["view"], r["p_value"]) for r in rows], 0.05, out / "ttest.png")
        )
    for r in rows:
        if r["error"] is None:
            print(f"{r['view']}: t={r['statistic']:.4f} p={r['p_value']:.3e}")
        else:
            print(f"{r['view']}: degenerate ({r['error']})")
    print("wrote " + ", ".join(str(p) for p in written))
    return 0


def cmd_mine(args) -> int:
    config = _load_config(args.config) if args.config else {}
    seed = int(_resolve(args, config, "seed", 42))
    out = _out_dir(args, config)
    graphs_path, view_paths, dataset, side_views, lams = _load_inputs(
        args, config, need_views=False
    )
    min_sup = _single(_floats(_resolve(args, config, "min_sup", 0.2), "--min-sup"), "--min-sup")
    ks = _ints(_resolve(args, config, "k", 10), "--k")
    prune = not bool(_resolve(args, config, "no_prune", False))

    lp = _laplacian(dataset, side_views)
    results = []
    csv_rows = []
    figures = []
    for k in ks:
        cfg = MinerConfig(min_sup=min_sup, k=k, pruning=prune)
        scored, stats = mine(dataset, lp, cfg)
        if stats.warning:
            print(f"k={k}: {stats.warning}", file=sys.stderr)
        rows = _pattern_rows(scored)
        results.append(
            {
                "k": k,
                "patterns": rows,
                "explored": stats.explored,
                "pruned_subtrees": stats.pruned_subtrees,
                "warning": stats.warning,
            }
        )
        for r in rows:
            csv_rows.append([k, r["rank"], r["code"], r["q"], r["q_lower_bound"], r["support"]])
        if _figures_enabled(args, config):
            from .plotting import save_mining_figure

            figures.append(save_mining_figure([r["q"] for r in rows], out / f"mine_k{k}.png"))

    report = {
        "task": "mine",
        "seed": seed,
        "version": __version__,
        "config": {
            "graphs": str(graphs_path),
            "views": view_paths,
            "lambda": lams,
            "min_sup": min_sup,
            "k": ks,
            "pruning": prune,
        },
        "results": {"runs": results},
    }
    write_report(report, out / "mine.json")
    _write_csv(
        out / "mine.csv",
        ["k", "rank", "code", "q", "q_lower_bound", "support"],
        csv_rows,
    )
    for entry in results:
        best = entry["patterns"][0]["q"] if entry["patterns"] else None
        print(f"k={entry['k']}: {len(entry['patterns'])} patterns, best q={best}")
    print("wrote " + ", ".join(str(p) for p in [out / "mine.json", out / "mine.csv"] + figures))
    return 0


def cmd_classify(args) -> int:
    config = _load_config(args.config) if args.config else {}
    seed = int(_resolve(args, config, "seed", 42))
    out = _out_dir(args, config)
    graphs_path, view_paths, dataset, side_views, lams = _load_inputs(
        args, config, need_views=False
    )
    bundle = DatasetBundle(dataset, side_views)
    min_sup = _single(_floats(_resolve(args, config, "min_sup", 0.2), "--min-sup"), "--min-sup")
    ks = _ints(_resolve(args, config, "k", 10), "--k")
    folds = int(_resolve(args, config, "folds", 3))
    method = _resolve(args, config, "method", "gmsv")
    prune = not bool(_resolve(args, config, "no_prune", False))
    miner = make_miner(method)

    results = []
    csv_rows = []
    figures = []
    for k in ks:
        cfg = MinerConfig(min_sup=min_sup, k=k, pruning=prune)
        rep = stratified_cv(bundle, miner, cfg, folds=folds, seed=seed)
        fold_rows = []
        for r in rep.folds:
            fold_rows.append(
                {
                    "fold": r.fold,
                    "n_train": len(r.train_indices),
                    "n_test": len(r.test_indices),
                    "n_features": r.n_features,
                    "accuracy": r.metrics.accuracy,
                    "precision": r.metrics.precision,
                    "recall": r.metrics.recall,
                    "f1": r.metrics.f1,
                    "patterns": list(r.patterns),
                }
            )
            csv_rows.append(
                [k, r.fold, r.metrics.accuracy, r.metrics.precision, r.metrics.recall,
                 r.metrics.f1, r.n_features]
            )
        results.append(
            {
                "k": k,
                "accuracy_mean": rep.accuracy_mean,
                "accuracy_std": rep.accuracy_std,
                "precision_mean": rep.precision_mean,
                "recall_mean": rep.recall_mean,
                "f1_mean": rep.f1_mean,
                "folds": fold_rows,
            }
        )
        if _figures_enabled(args, config):
            from .plotting import save_classify_figure

            figures.append(
                save_classify_figure(
                    [r.metrics.accuracy for r in rep.folds],
                    rep.accuracy_mean,
                    out / f"classify_k{k}.png",
                )
            )

    report = {
        "task": "classify",
        "seed": seed,
        "version": __version__,
        "config": {
            "graphs": str(graphs_path),
            "views": view_paths,
            "lambda": lams,
            "min_sup": min_sup,
            "k": ks,
            "folds": folds,
            "method": method,
            "pruning": prune,
        },
        "results": {"runs": results},
    }
    write_report(report, out / "classify.json")
    _write_csv(
        out / "classify.csv",
        ["k", "fold", "accuracy", "precision", "recall", "f1", "n_features"],
        csv_rows,
    )
    for entry in results:
        print(
            f"k={entry['k']} ({method}): accuracy {entry['accuracy_mean']:.3f}"
            f" +- {entry['accuracy_std']:.3f}"
        )
    print("wrote " + ", ".join(str(p) for p in [out / "classify.json", out / "classify.csv"] + figures))
    return 0


def cmd_bench(args) -> int:
    config = _load_config(args.config) if args.config else {}
    seed = int(_resolve(args, config, "seed", 42))
    out = _out_dir(args, config)
    graphs_path, view_paths, dataset, side_views, lams = _load_inputs(
        args, config, need_views=False
    )
    min_sups = _floats(_resolve(args, config, "min_sup", 0.2), "--min-sup")
    k = _single(_ints(_resolve(args, config, "k", 10), "--k"), "--k")

    lp = _laplacian(dataset, side_views)
    results = []
    csv_rows = []
    for min_sup in min_sups:
        cfg = MinerConfig(min_sup=min_sup, k=k)
        pruned, stats_p = mine(dataset, lp, cfg)
        unpruned, stats_u = mine_unpruned(dataset, lp, cfg)
        qs_p = [sp.q for sp in pruned]
        qs_u = [sp.q for sp in unpruned]
        if len(qs_p) != len(qs_u) or not np.allclose(qs_p, qs_u, rtol=0.0, atol=1e-9):
            raise BenchMismatch(
                f"min_sup={min_sup}: pruned and unpruned runs disagree "
                f"({qs_p} vs {qs_u})"
            )
        results.append(
            {
                "min_sup": min_sup,
                "k": k,
                "patterns": len(pruned),
                "explored_pruned": stats_p.explored,
                "explored_unpruned": stats_u.explored,
                "pruned_subtrees": stats_p.pruned_subtrees,
                "q": qs_p,
            }
        )
        csv_rows.append(
            [min_sup, stats_p.explored, stats_u.explored, stats_p.pruned_subtrees,
             stats_p.seconds, stats_u.seconds]
        )
        print(
            f"min_sup={min_sup}: explored {stats_p.explored} pruned"
            f" vs {stats_u.explored} unpruned, identical top-{k}"
        )

    report = {
        "task": "bench",
        "seed": seed,
        "version": __version__,
        "config": {
            "graphs": str(graphs_path),
            "views": view_paths,
            "lambda": lams,
            "min_sup": min_sups,
            "k": k,
        },
        "results": {"runs": results, "equivalent": True},
    }
    write_report(report, out / "bench.json")
    _write_csv(
        out / "bench.csv",
        ["min_sup", "explored_pruned", "explored_unpruned", "pruned_subtrees",
         "seconds_pruned", "seconds_unpruned"],
        csv_rows,
    )
    written = [out / "bench.json", out / "bench.csv"]
    if _figures_enabled(args, config):
        from .plotting import save_bench_figure

        written.append(
            save_bench_figure(
                [(r[0], r[1], r[2], r[4], r[5]) for r in csv_rows], out / "bench.png"
            )
        )
    print("wrote " + ", ".join(str(p) for p in written))
    return 0


def cmd_synth(args) -> int:
    config = _load_config(args.config) if args.config else {}
    seed = int(_resolve(args, config, "seed", 42))
    out = _out_dir(args, config)

    kwargs = {"seed": seed}
    for dest in ("n_per_class", "n_nodes", "background_p", "threshold",
                 "fidelity_pos", "fidelity_neg"):
        value = _resolve(args, config, dest)
        if value is not None:
            kwargs[dest] = value
    for dest in ("pattern_edges", "common_edges"):
        value = _edge_list(_resolve(args, config, dest), f"--{dest.replace('_', '-')}")
        if value is not None:
            kwargs[dest] = value
    dims = _resolve(args, config, "view_dims")
    seps = _resolve(args, config, "view_sep")
    sigmas = _resolve(args, config, "view_sigma")
    if dims is not None:
        kwargs["view_dims"] = tuple(_ints(dims, "--view-dims"))
    if seps is not None:
        kwargs["view_separation"] = tuple(_floats(seps, "--view-sep"))
    if sigmas is not None:
        kwargs["view_sigma"] = tuple(_floats(sigmas, "--view-sigma"))

    try:
        cfg = SynthConfig(**kwargs)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc))
    bundle = generate_synthetic(cfg)
    paths = write_bundle(bundle, out)

    report = {
        "task": "synth",
        "seed": seed,
        "version": __version__,
        "config": dict(bundle.provenance),
        "results": {
            "n_graphs": bundle.n,
            "n_views": len(bundle.views),
            "files": [paths["graphs"].name]
            + [p.name for p in paths["views"]]
            + [paths["provenance"].name],
        },
    }
    write_report(report, out / "synth.json")
    print(f"wrote {bundle.n} graphs and {len(bundle.views)} views to {out}")
    return 0


# -- entry point ---------------------------------------------------------------------


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage problems; fold that into exit code 1
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BenchMismatch as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3
    except (DataFormatError, GraphError, DegenerateViewError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
