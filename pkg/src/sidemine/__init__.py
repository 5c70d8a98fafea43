"""sidemine: discriminative subgraph selection guided by side views.

Labeled graphs often arrive with extra per-graph measurements ("side views").
This package scores candidate subgraphs by how well their containment
indicator separates graphs that the views and labels say should differ,
searches the subgraph lattice exactly with a bound-based pruning rule, and
evaluates the selected features with a small linear classifier under
stratified cross-validation.
"""

__version__ = "0.1.0"

from .dataio import (
    DataFormatError,
    DatasetBundle,
    SynthConfig,
    WeightedNetwork,
    generate_synthetic,
    load_bundle,
    load_graphs,
    load_side_views,
    threshold_network,
    write_bundle,
    write_graphs,
    write_report,
    write_side_view,
)
from .graphs import (
    DFSCode,
    DFSEdge,
    Graph,
    GraphDataset,
    GraphError,
    Pattern,
    contains,
    is_min,
    min_dfs_code,
    rightmost_extensions,
    single_edge_patterns,
    support,
)
from .mining import (
    MinerConfig,
    MiningStats,
    ScoredPattern,
    TopKBuffer,
    brute_force_topk,
    gside_lower_bound,
    gside_score,
    mine,
    mine_frequent_topk,
    mine_unpruned,
)
from .pipeline import (
    BinaryMetrics,
    CVReport,
    FeatureMatrix,
    FoldResult,
    LinearModel,
    binary_metrics,
    decision_scores,
    hstack_features,
    indicator_features,
    make_miner,
    match_features,
    predict,
    stratified_cv,
    svm_objective,
    train_linear_svm,
    view_features,
)
from .views import (
    DegenerateViewError,
    KernelMatrix,
    LaplacianPair,
    SideView,
    TTestResult,
    consistency_ttest,
    minmax_normalize,
    omega_matrix,
    phi_laplacian,
    rbf_kernel,
    student_t_sf,
    theta_matrix,
    welch_ttest,
)

__all__ = [
    "__version__",
    # graphs
    "Graph",
    "GraphDataset",
    "GraphError",
    "DFSEdge",
    "DFSCode",
    "Pattern",
    "min_dfs_code",
    "is_min",
    "contains",
    "support",
    "single_edge_patterns",
    "rightmost_extensions",
    # views
    "SideView",
    "KernelMatrix",
    "LaplacianPair",
    "TTestResult",
    "DegenerateViewError",
    "minmax_normalize",
    "rbf_kernel",
    "theta_matrix",
    "omega_matrix",
    "phi_laplacian",
    "welch_ttest",
    "consistency_ttest",
    "student_t_sf",
    # mining
    "MinerConfig",
    "MiningStats",
    "ScoredPattern",
    "TopKBuffer",
    "gside_score",
    "gside_lower_bound",
    "mine",
    "mine_unpruned",
    "mine_frequent_topk",
    "brute_force_topk",
    # pipeline
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
    # dataio
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
