"""Feature vectorization, a small linear SVM, and stratified cross-validation.

Graphs become binary feature vectors (one column per selected subgraph,
1 = contained), optionally concatenated with normalized side-view columns.
The classifier is a primal stochastic subgradient SVM over an augmented
feature vector whose constant last component absorbs the bias, so the bias is
regularized together with the weights and the per-step update stays a single
rank-one operation.

Cross-validation is stratified and leakage-free: fold assignment uses labels
only, and all data-dependent statistics (view normalization, agreement
matrices, the scoring Laplacian, and the mined patterns themselves) are
recomputed per fold from the training split alone.  Test rows are mapped with
the training statistics and clipped to [0, 1].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .graphs import GraphDataset, Pattern, contains
from .mining import MinerConfig, mine, mine_frequent_topk
from .views import (
    LaplacianPair,
    SideView,
    omega_matrix,
    phi_laplacian,
    rbf_kernel,
    theta_matrix,
)

__all__ = [
    "FeatureMatrix",
    "LinearModel",
    "BinaryMetrics",
    "FoldResult",
    "CVReport",
    "indicator_features",
    "match_features",
    "view_features",
    "hstack_features",
    "train_linear_svm",
    "svm_objective",
    "decision_scores",
    "predict",
    "binary_metrics",
    "make_miner",
    "stratified_cv",
]


@dataclass
class FeatureMatrix:
    values: np.ndarray
    names: tuple

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.values.ndim != 2:
            raise ValueError("feature matrix must be 2-d")
        self.names = tuple(self.names)
        if len(self.names) != self.values.shape[1]:
            raise ValueError("one name per column required")

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def dim(self) -> int:
        return self.values.shape[1]


def indicator_features(patterns: Sequence[Pattern], n: int) -> FeatureMatrix:
    """Columns from the indicators the miner already computed.

    Only valid for the dataset the patterns were mined from; ``n`` guards
    against accidental reuse elsewhere.
    """
    cols = []
    for p in patterns:
        if p.n != n:
            raise ValueError("pattern indicator does not match dataset size")
        cols.append(p.indicator)
    values = np.column_stack(cols) if cols else np.zeros((n, 0))
    return FeatureMatrix(values, tuple(str(p.code) for p in patterns))


def match_features(graphs, patterns: Sequence[Pattern]) -> FeatureMatrix:
    """Containment-test columns for graphs the miner never saw."""
    graphs = list(graphs)
    values = np.zeros((len(graphs), len(patterns)))
    for j, p in enumerate(patterns):
        for i, g in enumerate(graphs):
            if contains(g, p.code):
                values[i, j] = 1.0
    return FeatureMatrix(values, tuple(str(p.code) for p in patterns))


def view_features(views: Sequence[SideView]) -> FeatureMatrix:
    if not views:
        return FeatureMatrix(np.zeros((0, 0)), ())
    values = np.hstack([v.values for v in views])
    names = tuple(f"{v.name}[{j}]" for v in views for j in range(v.dim))
    return FeatureMatrix(values, names)


def hstack_features(*parts: FeatureMatrix) -> FeatureMatrix:
    parts = [p for p in parts if p.dim or p.n]
    if not parts:
        return FeatureMatrix(np.zeros((0, 0)), ())
    n = max(p.n for p in parts)
    blocks = [p for p in parts if p.n == n]
    if len(blocks) != len(parts):
        raise ValueError("feature blocks disagree on row count")
    values = np.hstack([p.values for p in blocks])
    names = tuple(name for p in blocks for name in p.names)
    return FeatureMatrix(values, names)


# -- linear SVM -----------------------------------------------------------------


@dataclass
class LinearModel:
    w: np.ndarray
    b: float
    lam: float

    def __post_init__(self):
        self.w = np.asarray(self.w, dtype=np.float64)
        self.b = float(self.b)
        self.lam = float(self.lam)


def _check_xy(X, y):
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    if X.ndim != 2:
        raise ValueError("X must be 2-d")
    if y.shape != (X.shape[0],):
        raise ValueError("y must have one entry per row of X")
    if not np.all(np.isin(y, (-1, 1))):
        raise ValueError("labels must lie in {-1, +1}")
    return X, y


def _aug_objective(waug, aug, y, lam) -> float:
    margins = y * (aug @ waug)
    hinge = np.maximum(0.0, 1.0 - margins).mean()
    return float(0.5 * lam * (waug @ waug) + hinge)


def train_linear_svm(X, y, c: float = 1.0, *, epochs: int = 200, seed: int = 0) -> LinearModel:
    """Stochastic subgradient training with step size 1/(lam*t), lam = 1/(c*n).

    After each epoch the current iterate and the running average are both
    scored on the regularized objective; the best snapshot seen wins.  The
    objective includes the bias in the regularizer (augmented formulation).
    """
    X, y = _check_xy(X, y)
    if X.shape[0] == 0:
        raise ValueError("cannot train on an empty dataset")
    if c <= 0:
        raise ValueError("c must be positive")
    if epochs < 1:
        raise ValueError("epochs must be at least 1")
    n, d = X.shape
    aug = np.hstack([X, np.ones((n, 1))])
    lam = 1.0 / (c * n)
    w = np.zeros(d + 1)
    wsum = np.zeros(d + 1)
    rng = np.random.default_rng(seed)
    t = 0
    best_obj = np.inf
    best_w = w.copy()
    for _ in range(epochs):
        for i in rng.permutation(n):
            t += 1
            row = aug[i]
            violated = y[i] * float(row @ w) < 1.0
            w *= 1.0 - 1.0 / t  # shrink step: eta * lam with eta = 1/(lam*t)
            if violated:
                w += (y[i] / (lam * t)) * row
            wsum += w
        for cand in (w, wsum / t):
            obj = _aug_objective(cand, aug, y, lam)
            if obj < best_obj:
                best_obj = obj
                best_w = cand.copy()
    return LinearModel(w=best_w[:-1].copy(), b=float(best_w[-1]), lam=lam)


def svm_objective(model: LinearModel, X, y) -> float:
    """lam/2 * (||w||^2 + b^2) plus the mean hinge loss on (X, y)."""
    X, y = _check_xy(X, y)
    waug = np.append(model.w, model.b)
    aug = np.hstack([X, np.ones((X.shape[0], 1))])
    return _aug_objective(waug, aug, y, model.lam)


def decision_scores(model: LinearModel, X) -> np.ndarray:
    X = np.asarray(X, dtype=np.float64)
    return X @ model.w + model.b


def predict(model: LinearModel, X) -> np.ndarray:
    """Signed predictions; a score of exactly zero goes to the positive class."""
    return np.where(decision_scores(model, X) >= 0.0, 1, -1)


# -- metrics --------------------------------------------------------------------


@dataclass
class BinaryMetrics:
    tp: int
    fp: int
    tn: int
    fn: int
    accuracy: float
    precision: float
    recall: float
    f1: float


def binary_metrics(y_true, y_pred) -> BinaryMetrics:
    """Counts and rates for the +1 class; undefined ratios fall back to 0."""
    y_true = np.asarray(y_true, dtype=np.int64)
    y_pred = np.asarray(y_pred, dtype=np.int64)
    if y_true.shape != y_pred.shape or y_true.ndim != 1 or y_true.size == 0:
        raise ValueError("label vectors must be equal-length and non-empty")
    for v in (y_true, y_pred):
        if not np.all(np.isin(v, (-1, 1))):
            raise ValueError("labels must lie in {-1, +1}")
    tp = int(np.sum((y_true == 1) & (y_pred == 1)))
    fp = int(np.sum((y_true == -1) & (y_pred == 1)))
    tn = int(np.sum((y_true == -1) & (y_pred == -1)))
    fn = int(np.sum((y_true == 1) & (y_pred == -1)))
    accuracy = (tp + tn) / y_true.size
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return BinaryMetrics(tp, fp, tn, fn, accuracy, precision, recall, f1)


# -- cross-validation -------------------------------------------------------------


MinerHook = Callable[[GraphDataset, Optional[LaplacianPair], MinerConfig], list]

_METHODS = ("gmsv", "frequent", "side-only")


def make_miner(method: str) -> MinerHook:
    """Feature-selection strategies for the CV loop.

    ``gmsv``      -- side-view-aware top-k search;
    ``frequent``  -- most frequent patterns, ignoring views and labels;
    ``side-only`` -- no subgraph features at all.
    """
    if method == "gmsv":
        return lambda ds, lp, cfg: [sp.pattern for sp in mine(ds, lp, cfg)[0]]
    if method == "frequent":
        return lambda ds, lp, cfg: mine_frequent_topk(ds, cfg)
    if method == "side-only":
        return lambda ds, lp, cfg: []
    raise ValueError(f"unknown mining method {method!r}; expected one of {_METHODS}")


@dataclass
class FoldResult:
    fold: int
    train_indices: tuple
    test_indices: tuple
    n_features: int
    patterns: tuple
    predictions: tuple
    metrics: BinaryMetrics


@dataclass
class CVReport:
    folds: list
    accuracy_mean: float
    accuracy_std: float
    precision_mean: float
    recall_mean: float
    f1_mean: float


def _fold_normalize(train_views, test_views):
    """Min-max stats fitted on the training rows, applied to both splits."""
    out_train, out_test = [], []
    for tr, te in zip(train_views, test_views):
        lo = tr.values.min(axis=0)
        span = tr.values.max(axis=0) - lo
        safe = np.where(span > 0, span, 1.0)
        tr_vals = (tr.values - lo) / safe
        te_vals = np.clip((te.values - lo) / safe, 0.0, 1.0)
        tr_vals[:, span == 0] = 0.0
        te_vals[:, span == 0] = 0.0
        out_train.append(SideView(tr_vals, name=tr.name, weight=tr.weight))
        out_test.append(SideView(te_vals, name=te.name, weight=te.weight))
    return out_train, out_test


def _downsample_majority(train_idx, labels, rng) -> np.ndarray:
    pos = train_idx[labels[train_idx] == 1]
    neg = train_idx[labels[train_idx] == -1]
    m = min(len(pos), len(neg))
    if len(pos) > m:
        pos = np.sort(rng.choice(pos, size=m, replace=False))
    if len(neg) > m:
        neg = np.sort(rng.choice(neg, size=m, replace=False))
    return np.sort(np.concatenate([pos, neg]))


def stratified_cv(
    bundle,
    miner: MinerHook,
    miner_cfg: MinerConfig,
    *,
    folds: int = 3,
    svm_c: float = 1.0,
    svm_epochs: int = 200,
    seed: int = 42,
) -> CVReport:
    """Class-stratified k-fold evaluation of a mining strategy.

    Within each fold the training split is class-balanced by downsampling the
    majority class before any statistic is computed.  Assignment, downsampling
    and SVM shuffling draw from independent streams spawned off ``seed``.
    """
    labels = bundle.dataset.labels
    if folds < 2:
        raise ValueError("folds must be at least 2")
    n_pos = int(np.sum(labels == 1))
    n_neg = int(np.sum(labels == -1))
    if min(n_pos, n_neg) < folds:
        raise ValueError(f"each class needs at least {folds} members")

    children = np.random.SeedSequence(seed).spawn(folds + 1)
    assign_rng = np.random.default_rng(children[0])
    fold_of = np.empty(bundle.n, dtype=np.int64)
    for cls in (1, -1):
        perm = assign_rng.permutation(np.flatnonzero(labels == cls))
        for pos, gi in enumerate(perm):
            fold_of[gi] = pos % folds

    results = []
    for f in range(folds):
        state = children[f + 1].generate_state(2)
        down_rng = np.random.default_rng(int(state[0]))
        svm_seed = int(state[1])

        test_idx = np.flatnonzero(fold_of == f)
        train_idx = _downsample_majority(np.flatnonzero(fold_of != f), labels, down_rng)
        train = bundle.subset(train_idx)
        test = bundle.subset(test_idx)

        train_views, test_views = _fold_normalize(train.views, test.views)
        thetas = [(theta_matrix(rbf_kernel(v)), v.weight) for v in train_views]
        lp = phi_laplacian(omega_matrix(train.dataset.labels), thetas)
        patterns = miner(train.dataset, lp, miner_cfg)

        X_train = hstack_features(
            indicator_features(patterns, train.dataset.n), view_features(train_views)
        )
        X_test = hstack_features(
            match_features(test.dataset.graphs, patterns), view_features(test_views)
        )
        if X_train.dim == 0:
            raise ValueError("no features: no patterns selected and no side views")

        model = train_linear_svm(
            X_train.values, train.dataset.labels, c=svm_c, epochs=svm_epochs, seed=svm_seed
        )
        y_pred = predict(model, X_test.values)
        results.append(
            FoldResult(
                fold=f,
                train_indices=tuple(int(i) for i in train_idx),
                test_indices=tuple(int(i) for i in test_idx),
                n_features=X_train.dim,
                patterns=tuple(str(p.code) for p in patterns),
                predictions=tuple(int(v) for v in y_pred),
                metrics=binary_metrics(test.dataset.labels, y_pred),
            )
        )

    acc = np.array([r.metrics.accuracy for r in results])
    return CVReport(
        folds=results,
        accuracy_mean=float(acc.mean()),
        accuracy_std=float(acc.std()),
        precision_mean=float(np.mean([r.metrics.precision for r in results])),
        recall_mean=float(np.mean([r.metrics.recall for r in results])),
        f1_mean=float(np.mean([r.metrics.f1 for r in results])),
    )
