"""Side-view kernels, pairwise agreement matrices, and the scoring Laplacian.

Each side view is a real feature matrix with one row per graph.  A view is
min-max normalized, turned into an RBF similarity kernel, and binarized around
the kernel mean into a signed agreement matrix (positive weight on pairs more
similar than average, negative otherwise, each side normalized to unit total
mass).  Class labels contribute an analogous agreement matrix.  The weighted
sum of all agreement matrices yields Phi, whose Laplacian ``L = D - Phi``
drives pattern scoring: for a pattern with occurrence indicator ``f`` the
score is ``f' L f``, and the entrywise-negative part of L gives a lower bound
valid for every supergraph.

The module also provides Welch's one-tail two-sample t-test over kernel
entries, used to check that a side view is consistent with the labels before
trusting it, plus the Student-t survival function it needs (regularized
incomplete beta, no SciPy dependency).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "DegenerateViewError",
    "SideView",
    "KernelMatrix",
    "LaplacianPair",
    "TTestResult",
    "minmax_normalize",
    "rbf_kernel",
    "theta_matrix",
    "omega_matrix",
    "phi_laplacian",
    "welch_ttest",
    "consistency_ttest",
    "student_t_sf",
]


class DegenerateViewError(ValueError):
    """A view (or a statistic derived from one) carries no usable contrast."""


@dataclass
class SideView:
    """One vector-valued side view: an ``n x d`` feature matrix.

    ``weight`` is the view's contribution when agreement matrices are summed
    (default 1).  Values are stored as float64 and must be finite.
    """

    values: np.ndarray
    name: str = "view"
    weight: float = 1.0

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        if v.ndim != 2:
            raise ValueError("side view values must be a 2-D matrix")
        if not np.all(np.isfinite(v)):
            raise ValueError("side view values must be finite")
        if self.weight < 0:
            raise ValueError("side view weight must be non-negative")
        self.values = v

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def dim(self) -> int:
        return self.values.shape[1]


@dataclass
class KernelMatrix:
    """A symmetric similarity matrix and its mean over all n^2 entries."""

    values: np.ndarray
    mean: float


@dataclass
class LaplacianPair:
    """``lap = D - phi`` with ``D_ii = sum_j phi_ij``, and its negative part.

    ``lap_hat`` is the entrywise ``min(0, lap)``; summing it over any index
    set can only fall when the set grows, which is what makes it a sound
    lower bound under support shrinkage.
    """

    phi: np.ndarray
    lap: np.ndarray
    lap_hat: np.ndarray


@dataclass
class TTestResult:
    statistic: float
    df: float
    p_value: float
    n_per_group: int


def minmax_normalize(view: SideView) -> SideView:
    """Affinely map every column to [0, 1]; constant columns map to 0."""
    v = view.values
    lo = v.min(axis=0)
    span = v.max(axis=0) - lo
    safe = np.where(span > 0, span, 1.0)
    out = (v - lo) / safe
    out[:, span == 0] = 0.0
    return SideView(out, name=view.name, weight=view.weight)


def rbf_kernel(view: SideView) -> KernelMatrix:
    """RBF similarity with bandwidth equal to the view dimensionality.

    ``k_ij = exp(-||z_i - z_j||^2 / d)``; the reported mean is taken over all
    n^2 entries, diagonal included.
    """
    if view.dim == 0:
        raise ValueError("zero-dimensional view")
    z = view.values
    diff = z[:, None, :] - z[None, :, :]
    sq = (diff * diff).sum(axis=2)
    k = np.exp(-sq / view.dim)
    return KernelMatrix(k, float(k.mean()))


def theta_matrix(kernel: KernelMatrix) -> np.ndarray:
    """Signed agreement matrix of a kernel around its mean.

    Pairs at or above the mean share ``+1/|H|``, pairs below share
    ``-1/|L|``, over all ordered pairs including the diagonal, so each side
    carries unit total mass.
    """
    k = kernel.values
    high = k >= kernel.mean
    n_high = int(high.sum())
    n_low = k.size - n_high
    if n_high == 0 or n_low == 0:
        raise DegenerateViewError(
            "degenerate view: kernel has no contrast around its mean"
        )
    return np.where(high, 1.0 / n_high, -1.0 / n_low)


def omega_matrix(labels) -> np.ndarray:
    """Signed agreement matrix of the class labels.

    Same-label ordered pairs (diagonal included) share ``+1/|M|``,
    different-label pairs share ``-1/|C|``.
    """
    y = np.asarray(labels, dtype=np.int64)
    if y.ndim != 1 or not np.all(np.isin(y, (-1, 1))):
        raise ValueError("labels must be a vector over {-1, +1}")
    same = np.equal.outer(y, y)
    n_same = int(same.sum())
    n_diff = y.size * y.size - n_same
    if n_diff == 0:
        raise ValueError("single-class labels")
    return np.where(same, 1.0 / n_same, -1.0 / n_diff)


def phi_laplacian(omega: np.ndarray, thetas=()) -> LaplacianPair:
    """Combine label and view agreement matrices into the scoring Laplacian.

    ``thetas`` is a sequence of ``(theta, weight)`` pairs; weights must be
    non-negative.  With an empty sequence the Laplacian is built from the
    label agreement alone.
    """
    phi = np.array(omega, dtype=np.float64)
    if phi.ndim != 2 or phi.shape[0] != phi.shape[1]:
        raise ValueError("omega must be a square matrix")
    n = phi.shape[0]
    for theta, weight in thetas:
        theta = np.asarray(theta, dtype=np.float64)
        if theta.shape != (n, n):
            raise ValueError("theta dimension mismatch")
        if weight < 0:
            raise ValueError("view weights must be non-negative")
        phi = phi + weight * theta
    deg = phi.sum(axis=1)
    lap = np.diag(deg) - phi
    return LaplacianPair(phi=phi, lap=lap, lap_hat=np.minimum(lap, 0.0))


def welch_ttest(a, b) -> tuple[float, float]:
    """Welch's unequal-variance t statistic and Welch-Satterthwaite df.

    Both-samples-constant input with equal means has no defined statistic and
    raises; with different means the statistic is ``+-inf`` with pooled df.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    na, nb = len(a), len(b)
    if na < 2 or nb < 2:
        raise ValueError("need at least 2 observations per sample")
    ma, mb = float(a.mean()), float(b.mean())
    va, vb = float(a.var(ddof=1)), float(b.var(ddof=1))
    sa, sb = va / na, vb / nb
    se2 = sa + sb
    if se2 == 0.0:
        if ma == mb:
            raise DegenerateViewError(
                "degenerate t-test: zero variance in both samples with equal means"
            )
        return (math.inf if ma > mb else -math.inf), float(na + nb - 2)
    t = (ma - mb) / math.sqrt(se2)
    df = se2 * se2 / (sa * sa / (na - 1) + sb * sb / (nb - 1))
    return t, df


def consistency_ttest(kernel: KernelMatrix, labels, seed: int) -> TTestResult:
    """One-tail test that same-class pairs are more similar than cross-class.

    Pools the kernel's off-diagonal unordered pairs into a same-class and a
    different-class group, draws equal-size samples (the smaller group's
    size) without replacement using the seeded generator — same-class first —
    and tests ``H1: mean(same) - mean(different) > 0`` with Welch's t.
    """
    y = np.asarray(labels, dtype=np.int64)
    k = kernel.values
    n = y.size
    if k.shape != (n, n):
        raise ValueError("kernel/label size mismatch")
    if not np.all(np.isin(y, (-1, 1))) or not (np.any(y == 1) and np.any(y == -1)):
        raise ValueError("labels must contain both classes")
    iu, ju = np.triu_indices(n, k=1)
    same_mask = y[iu] == y[ju]
    pool_same = k[iu, ju][same_mask]
    pool_diff = k[iu, ju][~same_mask]
    m = min(len(pool_same), len(pool_diff))
    if m < 2:
        raise ValueError("need at least 2 off-diagonal pairs per group")
    rng = np.random.default_rng(seed)
    a_s = rng.choice(pool_same, size=m, replace=False)
    a_d = rng.choice(pool_diff, size=m, replace=False)
    t, df = welch_ttest(a_s, a_d)
    return TTestResult(statistic=t, df=df, p_value=student_t_sf(t, df), n_per_group=m)


# -- Student-t survival function ----------------------------------------------


def _betacf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta (modified Lentz)."""
    max_iter, eps, tiny = 2000, 1e-15, 1e-300
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, max_iter + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < eps:
            return h
    raise RuntimeError("incomplete beta continued fraction did not converge")


def _reg_inc_beta(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta I_x(a, b)."""
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    ln_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def student_t_sf(t: float, df: float) -> float:
    """P(T > t) for Student's t with ``df`` degrees of freedom.

    Uses ``P(T > t) = I_x(df/2, 1/2) / 2`` with ``x = df / (df + t^2)`` for
    t >= 0 and symmetry otherwise; absolute error well under 1e-9.
    """
    if not df > 0:
        raise ValueError("df must be positive")
    if math.isnan(t) or math.isnan(df):
        raise ValueError("t and df must not be NaN")
    if math.isinf(t):
        return 0.0 if t > 0 else 1.0
    x = df / (df + t * t)
    p = 0.5 * _reg_inc_beta(0.5 * df, 0.5, x)
    return p if t >= 0 else 1.0 - p
