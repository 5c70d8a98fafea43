"""Independent reference implementations used to cross-check the library.

Everything in here is deliberately naive and written from first principles:
exhaustive DFS-traversal enumeration for canonical codes, permutation search
for containment, breadth-first edge-set expansion for subgraph enumeration,
Gauss-Legendre quadrature for the Student-t tail.  None of it shares code
paths with the package beyond the Graph container.
"""

from __future__ import annotations

import itertools
import math
from functools import cmp_to_key

import numpy as np

from sidemine.graphs import Graph


def edge_cmp(e1, e2):
    """gSpan order on 5-tuple DFS edges, written out independently."""
    i1, j1 = e1[0], e1[1]
    i2, j2 = e2[0], e2[1]
    if (i1, j1) == (i2, j2):
        a, b = e1[2:], e2[2:]
        return -1 if a < b else (1 if a > b else 0)
    f1, f2 = i1 < j1, i2 < j2
    if f1 and f2:
        less = j1 < j2 or (j1 == j2 and i1 > i2)
    elif not f1 and not f2:
        less = i1 < i2 or (i1 == i2 and j1 < j2)
    elif f1:
        less = j1 <= i2
    else:
        less = i1 < j2
    return -1 if less else 1


def code_cmp(c1, c2):
    """Lexicographic comparison of two complete codes of the same graph."""
    for a, b in zip(c1, c2):
        r = edge_cmp(a, b)
        if r != 0:
            return r
    return (len(c1) > len(c2)) - (len(c1) < len(c2))


def all_traversal_codes(g: Graph) -> set[tuple]:
    """Every DFS code of ``g``: one per discovery-ordered DFS tree.

    Enumerates all DFS traversals (every start vertex, every edge-choice
    order; backtracking only once the current vertex has no unexplored
    incident edge) and sorts each traversal's edges into code order.
    """
    codes: set[tuple] = set()

    def build(disc: dict[int, int], events) -> tuple:
        tuples = []
        for u, w, elabel in events:
            i, j = disc[u], disc[w]
            tuples.append((i, j, g.label(u), elabel, g.label(w)))
        tuples.sort(key=cmp_to_key(edge_cmp))
        return tuple(tuples)

    def walk(disc, stack, explored, events):
        if len(explored) == g.n_edges:
            codes.add(build(disc, events))
            return
        if not stack:
            return
        v = stack[-1]
        moves = [e for e in g.neighbors(v) if e.eid not in explored]
        if not moves:
            walk(disc, stack[:-1], explored, events)
            return
        for e in moves:
            if e.to in disc:
                walk(disc, stack, explored | {e.eid}, events + [(v, e.to, e.elabel)])
            else:
                disc2 = dict(disc)
                disc2[e.to] = len(disc)
                walk(disc2, stack + [e.to], explored | {e.eid}, events + [(v, e.to, e.elabel)])

    for start in range(g.n_nodes):
        walk({start: 0}, [start], frozenset(), [])
    return codes


def min_code_by_enumeration(g: Graph) -> tuple:
    """Canonical code as the minimum over all DFS traversals."""
    codes = all_traversal_codes(g)
    best = None
    for c in codes:
        if best is None or code_cmp(c, best) < 0:
            best = c
    return best


def brute_contains(host: Graph, pattern: Graph) -> bool:
    """Containment by exhaustive injective node-map search."""
    pn = pattern.n_nodes
    if pn > host.n_nodes:
        return False
    pedges = pattern.edges()
    for combo in itertools.permutations(range(host.n_nodes), pn):
        if any(host.label(combo[v]) != pattern.label(v) for v in range(pn)):
            continue
        if all(host.edge_label(combo[u], combo[v]) == el for u, v, el in pedges):
            return True
    return False


def connected_edge_subsets(g: Graph, max_edges: int):
    """All connected edge subsets of ``g`` up to ``max_edges``, as eid frozensets."""
    all_dirs = [e for v in range(g.n_nodes) for e in g.neighbors(v)]
    by_vertex: dict[int, list] = {}
    eid_ends: dict[int, tuple[int, int]] = {}
    for e in all_dirs:
        by_vertex.setdefault(e.frm, []).append(e)
        eid_ends[e.eid] = (min(e.frm, e.to), max(e.frm, e.to))

    seen: set[frozenset] = set()
    frontier = []
    for eid in eid_ends:
        s = frozenset([eid])
        seen.add(s)
        frontier.append(s)

    while frontier:
        nxt = []
        for s in frontier:
            if len(s) >= max_edges:
                continue
            verts = set()
            for eid in s:
                verts.update(eid_ends[eid])
            for v in verts:
                for e in by_vertex.get(v, ()):
                    if e.eid in s:
                        continue
                    ns = s | {e.eid}
                    if ns not in seen:
                        seen.add(ns)
                        nxt.append(ns)
        frontier = nxt
    return seen


def subgraph_from_eids(g: Graph, eids) -> Graph:
    """Node-relabelled subgraph of ``g`` induced by an edge subset."""
    pairs = []
    for e in sorted(eids):
        found = None
        for v in range(g.n_nodes):
            for a in g.neighbors(v):
                if a.eid == e and a.frm < a.to:
                    found = a
        pairs.append(found)
    verts = sorted({v for a in pairs for v in (a.frm, a.to)})
    remap = {v: i for i, v in enumerate(verts)}
    return Graph(
        [g.label(v) for v in verts],
        [(remap[a.frm], remap[a.to], a.elabel) for a in pairs],
    )


def random_connected_graph(rng, n_nodes, n_edges, n_vlabels=2, n_elabels=1) -> Graph:
    """Random connected graph: spanning tree plus extra edges."""
    labels = [int(x) for x in rng.integers(0, n_vlabels, size=n_nodes)]
    edges = {}
    for v in range(1, n_nodes):
        u = int(rng.integers(0, v))
        edges[(u, v)] = int(rng.integers(0, n_elabels))
    pool = [
        (u, v)
        for u in range(n_nodes)
        for v in range(u + 1, n_nodes)
        if (u, v) not in edges
    ]
    extra = max(0, min(n_edges - len(edges), len(pool)))
    if extra:
        for i in rng.choice(len(pool), size=extra, replace=False):
            edges[pool[int(i)]] = int(rng.integers(0, n_elabels))
    return Graph(labels, [(u, v, el) for (u, v), el in edges.items()])


def t_sf_by_quadrature(t: float, df: float, nodes: int = 400) -> float:
    """Student-t tail P(T > t) by Gauss-Legendre quadrature.

    Substituting x = sqrt(df) * tan(theta) turns the infinite tail integral
    into c(df) * sqrt(df) * integral of cos(theta)^(df-1) over the finite
    interval [arctan(t / sqrt(df)), pi/2], which Gauss-Legendre nails for a
    smooth integrand.
    """
    if t < 0:
        return 1.0 - t_sf_by_quadrature(-t, df, nodes)
    c = math.exp(math.lgamma((df + 1.0) / 2.0) - math.lgamma(df / 2.0))
    c /= math.sqrt(df * math.pi)
    lo = math.atan(t / math.sqrt(df))
    hi = math.pi / 2.0
    x, w = np.polynomial.legendre.leggauss(nodes)
    half = (hi - lo) / 2.0
    thetas = (hi + lo) / 2.0 + half * x
    vals = np.cos(thetas) ** (df - 1.0)
    return float(c * math.sqrt(df) * half * (w * vals).sum())


def random_dataset(rng, n_graphs, n_nodes, n_edges, n_vlabels=3, n_elabels=1):
    """Random dataset with both classes guaranteed present."""
    from sidemine.graphs import GraphDataset

    graphs = [
        random_connected_graph(rng, n_nodes, n_edges, n_vlabels, n_elabels)
        for _ in range(n_graphs)
    ]
    labels = rng.choice([-1, 1], size=n_graphs)
    if np.all(labels == labels[0]):
        labels[0] = -labels[0]
    return GraphDataset(graphs, labels)


def laplacian_for(dataset, rng, weight=1.0):
    """Label + one-random-view scoring Laplacian for a dataset."""
    from sidemine.views import (
        SideView,
        minmax_normalize,
        omega_matrix,
        phi_laplacian,
        rbf_kernel,
        theta_matrix,
    )

    view = minmax_normalize(SideView(rng.random((dataset.n, 3))))
    theta = theta_matrix(rbf_kernel(view))
    return phi_laplacian(omega_matrix(dataset.labels), [(theta, weight)])


def svm_grid_min(x, y, c, span=6.0, num=601, zooms=3):
    """Exhaustive (w, b) grid minimum of the regularized hinge objective, 1-D x.

    Convexity keeps the optimum near each stage's grid argmin, so each zoom
    shrinks the window to a few cells around it; the final resolution puts the
    grid value within ~1e-5 of the true minimum.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    lam = 1.0 / (c * len(x))
    w_lo, w_hi = -span, span
    b_lo, b_hi = -span, span
    best = None
    for _ in range(zooms):
        ws = np.linspace(w_lo, w_hi, num)
        bs = np.linspace(b_lo, b_hi, num)
        W, B = np.meshgrid(ws, bs, indexing="ij")
        margins = y[None, None, :] * (W[..., None] * x[None, None, :] + B[..., None])
        hinge = np.maximum(0.0, 1.0 - margins).mean(axis=2)
        obj = 0.5 * lam * (W * W + B * B) + hinge
        i, j = np.unravel_index(np.argmin(obj), obj.shape)
        best = (float(obj[i, j]), float(ws[i]), float(bs[j]))
        dw = 3.0 * (ws[1] - ws[0])
        db = 3.0 * (bs[1] - bs[0])
        w_lo, w_hi = best[1] - dw, best[1] + dw
        b_lo, b_hi = best[2] - db, best[2] + db
    return best
