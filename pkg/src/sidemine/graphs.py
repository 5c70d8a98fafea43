"""Labeled undirected graphs and gSpan-style canonical DFS codes.

A connected subgraph pattern is represented by a DFS code: the sequence of
edges in the order a depth-first traversal discovers them, each written as a
5-tuple ``(frm, to, frm_label, edge_label, to_label)`` over discovery indices.
Among all DFS traversals of a graph the lexicographically smallest code (under
the standard gSpan edge order) is unique and serves as the canonical form.

Pattern growth follows the gSpan discipline: a code is only ever extended by a
backward edge from the rightmost vertex to a vertex on the rightmost path, or
by a forward edge from a vertex on the rightmost path introducing the next
discovery index.  Extensions that do not keep the code minimal are dropped,
which makes the search tree enumerate every connected pattern exactly once.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

import numpy as np

__all__ = [
    "GraphError",
    "Graph",
    "GraphDataset",
    "DFSEdge",
    "DFSCode",
    "Pattern",
    "min_dfs_code",
    "is_min",
    "rightmost_extensions",
    "single_edge_patterns",
    "support",
    "contains",
]


class GraphError(ValueError):
    """Malformed graph, DFS code, or pattern."""


class _Adj(NamedTuple):
    """One direction of a stored edge: ``frm -> to`` with its edge id."""

    eid: int
    frm: int
    to: int
    elabel: int


class Graph:
    """Undirected graph with non-negative integer node and edge labels.

    Nodes are indexed ``0..n_nodes-1``.  Self-loops and parallel edges are
    rejected.  Instances are immutable once constructed.
    """

    __slots__ = ("node_labels", "_adj", "_edge_labels")

    def __init__(self, node_labels: Sequence[int], edges: Iterable[tuple[int, int, int]]):
        self.node_labels = tuple(int(l) for l in node_labels)
        n = len(self.node_labels)
        if any(l < 0 for l in self.node_labels):
            raise GraphError("node labels must be non-negative")
        adj: list[list[_Adj]] = [[] for _ in range(n)]
        edge_labels: dict[tuple[int, int], int] = {}
        for u, v, el in edges:
            u, v, el = int(u), int(v), int(el)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) references an undeclared node")
            if u == v:
                raise GraphError(f"self-loop at node {u}")
            if el < 0:
                raise GraphError("edge labels must be non-negative")
            key = (u, v) if u < v else (v, u)
            if key in edge_labels:
                raise GraphError(f"duplicate edge ({u}, {v})")
            eid = len(edge_labels)
            edge_labels[key] = el
            adj[u].append(_Adj(eid, u, v, el))
            adj[v].append(_Adj(eid, v, u, el))
        self._adj = tuple(tuple(a) for a in adj)
        self._edge_labels = edge_labels

    @property
    def n_nodes(self) -> int:
        return len(self.node_labels)

    @property
    def n_edges(self) -> int:
        return len(self._edge_labels)

    def label(self, v: int) -> int:
        return self.node_labels[v]

    def neighbors(self, v: int) -> tuple[_Adj, ...]:
        """All stored edge directions leaving ``v``."""
        return self._adj[v]

    def edge_label(self, u: int, v: int) -> Optional[int]:
        """Label of edge ``{u, v}``, or None if absent."""
        key = (u, v) if u < v else (v, u)
        return self._edge_labels.get(key)

    def edges(self) -> list[tuple[int, int, int]]:
        """Sorted ``(u, v, label)`` triples with ``u < v``."""
        return sorted((u, v, el) for (u, v), el in self._edge_labels.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.node_labels == other.node_labels
            and self._edge_labels == other._edge_labels
        )

    def __hash__(self):
        return hash((self.node_labels, tuple(sorted(self._edge_labels.items()))))

    def __repr__(self) -> str:
        return f"Graph(nodes={self.n_nodes}, edges={self.n_edges})"


def _is_connected(g: Graph) -> bool:
    if g.n_nodes == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for e in g.neighbors(v):
            if e.to not in seen:
                seen.add(e.to)
                stack.append(e.to)
    return len(seen) == g.n_nodes


class GraphDataset:
    """A list of graphs with per-graph class labels in {-1, +1}."""

    __slots__ = ("graphs", "labels")

    def __init__(self, graphs: Sequence[Graph], labels):
        self.graphs = list(graphs)
        y = np.asarray(labels, dtype=np.int64)
        if y.ndim != 1 or len(y) != len(self.graphs):
            raise GraphError("labels must be a vector with one entry per graph")
        if not np.all(np.isin(y, (-1, 1))):
            raise GraphError("labels must take values in {-1, +1}")
        self.labels = y

    @property
    def n(self) -> int:
        return len(self.graphs)

    @property
    def has_both_classes(self) -> bool:
        return bool(np.any(self.labels == 1) and np.any(self.labels == -1))

    def subset(self, indices) -> "GraphDataset":
        idx = [int(i) for i in indices]
        return GraphDataset([self.graphs[i] for i in idx], self.labels[idx])

    def __eq__(self, other) -> bool:
        if not isinstance(other, GraphDataset):
            return NotImplemented
        return self.graphs == other.graphs and np.array_equal(self.labels, other.labels)

    def __repr__(self) -> str:
        return f"GraphDataset(n={self.n})"


class DFSEdge:
    """One DFS-code edge ``(frm, to, frm_label, edge_label, to_label)``.

    ``frm`` and ``to`` are discovery indices; the edge is *forward* when
    ``frm < to`` (it introduces vertex ``to``) and *backward* otherwise.
    ``<`` implements the gSpan edge order, which is total for edges that can
    appear at the same position of codes sharing a prefix.
    """

    __slots__ = ("frm", "to", "frm_label", "edge_label", "to_label")

    def __init__(self, frm: int, to: int, frm_label: int, edge_label: int, to_label: int):
        self.frm = frm
        self.to = to
        self.frm_label = frm_label
        self.edge_label = edge_label
        self.to_label = to_label

    @property
    def is_forward(self) -> bool:
        return self.frm < self.to

    @property
    def astuple(self) -> tuple[int, int, int, int, int]:
        return (self.frm, self.to, self.frm_label, self.edge_label, self.to_label)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DFSEdge):
            return NotImplemented
        return self.astuple == other.astuple

    def __hash__(self):
        return hash(self.astuple)

    def __lt__(self, other: "DFSEdge") -> bool:
        if (self.frm, self.to) == (other.frm, other.to):
            return (self.frm_label, self.edge_label, self.to_label) < (
                other.frm_label,
                other.edge_label,
                other.to_label,
            )
        if self.is_forward and other.is_forward:
            # Earlier discovery wins; at the same target the deeper source wins.
            return self.to < other.to or (self.to == other.to and self.frm > other.frm)
        if not self.is_forward and not other.is_forward:
            return self.frm < other.frm or (self.frm == other.frm and self.to < other.to)
        if self.is_forward:
            return self.to <= other.frm
        return self.frm < other.to

    def __repr__(self) -> str:
        return f"DFSEdge{self.astuple}"


class DFSCode:
    """An immutable, validated DFS code (sequence of :class:`DFSEdge`).

    Construction checks well-formedness: the first edge is ``(0, 1)``, every
    forward edge grows from the current rightmost path and introduces the next
    discovery index, every backward edge leaves the rightmost vertex and lands
    on the rightmost path, vertex labels are consistent, and no edge repeats.
    """

    __slots__ = ("edges", "_vlabels")

    def __init__(self, edges: Iterable[DFSEdge]):
        edges = tuple(edges)
        if not edges:
            raise GraphError("empty DFS code")
        first = edges[0]
        if (first.frm, first.to) != (0, 1):
            raise GraphError("DFS code must start with edge (0, 1)")
        vlabels = {0: first.frm_label, 1: first.to_label}
        seen = {(0, 1)}
        rmpath = [0, 1]
        for e in edges[1:]:
            if e.frm == e.to:
                raise GraphError("self-loop in DFS code")
            if e.is_forward:
                if e.to != len(vlabels):
                    raise GraphError("forward edge must introduce the next vertex index")
                if e.frm not in rmpath:
                    raise GraphError("forward edge must grow from the rightmost path")
                if vlabels[e.frm] != e.frm_label:
                    raise GraphError(f"label mismatch at vertex {e.frm}")
                vlabels[e.to] = e.to_label
                rmpath = rmpath[: rmpath.index(e.frm) + 1] + [e.to]
                seen.add((e.frm, e.to))
            else:
                if e.frm != rmpath[-1]:
                    raise GraphError("backward edge must leave the rightmost vertex")
                if e.to not in rmpath:
                    raise GraphError("backward edge must land on the rightmost path")
                key = (e.to, e.frm)
                if key in seen:
                    raise GraphError(f"duplicate edge {key}")
                if vlabels[e.frm] != e.frm_label or vlabels[e.to] != e.to_label:
                    raise GraphError("label mismatch on backward edge")
                seen.add(key)
        self.edges = edges
        self._vlabels = tuple(vlabels[i] for i in range(len(vlabels)))

    # -- container protocol -------------------------------------------------

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[DFSEdge]:
        return iter(self.edges)

    def __getitem__(self, i) -> DFSEdge:
        return self.edges[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, DFSCode):
            return NotImplemented
        return self.edges == other.edges

    def __hash__(self):
        return hash(tuple(e.astuple for e in self.edges))

    def __lt__(self, other: "DFSCode") -> bool:
        """Lexicographic order, comparing positions under the gSpan edge order.

        For the rare edge pairs the growth order leaves incomparable (they can
        never compete at the same position of sibling codes), plain tuple
        order decides, so ``<`` is a deterministic total order.
        """
        for a, b in zip(self.edges, other.edges):
            if a == b:
                continue
            if a < b:
                return True
            if b < a:
                return False
            return a.astuple < b.astuple
        return len(self) < len(other)

    # -- derived views -------------------------------------------------------

    @property
    def key(self) -> tuple:
        """Plain tuple form, handy as a deterministic dict/sort key."""
        return tuple(e.astuple for e in self.edges)

    @property
    def n_vertices(self) -> int:
        return len(self._vlabels)

    def vertex_labels(self) -> tuple[int, ...]:
        """Node labels indexed by discovery index."""
        return self._vlabels

    def extended(self, edge: DFSEdge) -> "DFSCode":
        return DFSCode(self.edges + (edge,))

    def to_graph(self) -> Graph:
        """The pattern graph this code denotes (nodes = discovery indices)."""
        return Graph(self._vlabels, [(e.frm, e.to, e.edge_label) for e in self.edges])

    def __str__(self) -> str:
        return "".join(
            "(%d,%d,%d,%d,%d)" % e.astuple for e in self.edges
        )

    def __repr__(self) -> str:
        return f"DFSCode{str(self)}"


def _rmpath_positions(edges: Sequence[DFSEdge]) -> list[int]:
    """Code positions of the rightmost-path forward edges, deepest first."""
    rmpath = []
    old_frm = None
    for idx in range(len(edges) - 1, -1, -1):
        e = edges[idx]
        if e.is_forward and (old_frm is None or e.to == old_frm):
            rmpath.append(idx)
            old_frm = e.frm
    return rmpath


class _PDFS(NamedTuple):
    """A pattern occurrence: one host edge per code position, chained."""

    gid: int
    edge: _Adj
    prev: Optional["_PDFS"]


class _History:
    """Host edges of one occurrence in code order, with membership sets."""

    __slots__ = ("edges", "_vertices", "_edge_ids")

    def __init__(self, chain: _PDFS):
        edges = []
        node: Optional[_PDFS] = chain
        while node is not None:
            edges.append(node.edge)
            node = node.prev
        edges.reverse()
        self.edges = edges
        self._vertices = set()
        self._edge_ids = set()
        for e in edges:
            self._vertices.add(e.frm)
            self._vertices.add(e.to)
            self._edge_ids.add(e.eid)

    def has_vertex(self, v: int) -> bool:
        return v in self._vertices

    def has_edge(self, eid: int) -> bool:
        return eid in self._edge_ids


# -- growth-rule primitives (shared by mining and canonical construction) ----


def _forward_root_edges(g: Graph, v: int) -> list[_Adj]:
    vlb = g.label(v)
    return [e for e in g.neighbors(v) if vlb <= g.label(e.to)]


def _backward_candidate(g: Graph, e1: _Adj, e2: _Adj, hist: _History) -> Optional[_Adj]:
    """Backward growth from ``e2.to`` (rightmost vertex) closing onto ``e1.frm``.

    ``e1`` is the rightmost-path edge whose source is the landing vertex.  The
    label condition keeps codes canonical-orderable: the closing edge must not
    compare below the path edge it shadows.
    """
    for e in g.neighbors(e2.to):
        if hist.has_edge(e.eid) or e.to != e1.frm:
            continue
        if e1.elabel < e.elabel or (
            e1.elabel == e.elabel and g.label(e1.to) <= g.label(e2.to)
        ):
            return e
    return None


def _forward_pure_edges(g: Graph, rm_edge: _Adj, min_vlb: int, hist: _History) -> list[_Adj]:
    """Forward growth from the rightmost vertex itself."""
    return [
        e
        for e in g.neighbors(rm_edge.to)
        if min_vlb <= g.label(e.to) and not hist.has_vertex(e.to)
    ]


def _forward_rmpath_edges(g: Graph, rm_edge: _Adj, min_vlb: int, hist: _History) -> list[_Adj]:
    """Forward growth from the source of a rightmost-path edge."""
    result = []
    to_vlb = g.label(rm_edge.to)
    for e in g.neighbors(rm_edge.frm):
        new_vlb = g.label(e.to)
        if rm_edge.to == e.to or new_vlb < min_vlb or hist.has_vertex(e.to):
            continue
        if rm_edge.elabel < e.elabel or (rm_edge.elabel == e.elabel and to_vlb <= new_vlb):
            result.append(e)
    return result


# -- canonical form -----------------------------------------------------------


def _min_step(g, code, projections):
    """One step of minimal-code construction: the smallest legal extension.

    Returns ``(edge, projections)`` for the extension, or None when the code
    is complete.  Backward extensions are tried first (root-most landing
    vertex wins), then forward extensions (deepest source wins).
    """
    rmpath = _rmpath_positions(code)
    maxtoc = code[rmpath[0]].to
    min_vlb = code[0].frm_label
    vlabels: dict[int, int] = {code[0].frm: code[0].frm_label, code[0].to: code[0].to_label}
    for e in code[1:]:
        if e.is_forward:
            vlabels[e.to] = e.to_label
    hists = [(p, _History(p)) for p in projections]

    for pos in rmpath[:0:-1]:
        found = []
        for p, hist in hists:
            e = _backward_candidate(g, hist.edges[pos], hist.edges[rmpath[0]], hist)
            if e is not None:
                found.append((e.elabel, _PDFS(p.gid, e, p)))
        if found:
            elb = min(lbl for lbl, _ in found)
            target = code[pos].frm
            edge = DFSEdge(maxtoc, target, vlabels[maxtoc], elb, vlabels[target])
            return edge, [c for lbl, c in found if lbl == elb]

    found_fwd: dict[tuple[int, int], list[_PDFS]] = {}
    for p, hist in hists:
        for e in _forward_pure_edges(g, hist.edges[rmpath[0]], min_vlb, hist):
            found_fwd.setdefault((e.elabel, g.label(e.to)), []).append(_PDFS(p.gid, e, p))
    if found_fwd:
        elb, tolb = min(found_fwd)
        edge = DFSEdge(maxtoc, maxtoc + 1, vlabels[maxtoc], elb, tolb)
        return edge, found_fwd[(elb, tolb)]

    for pos in rmpath:
        found_fwd = {}
        for p, hist in hists:
            for e in _forward_rmpath_edges(g, hist.edges[pos], min_vlb, hist):
                found_fwd.setdefault((e.elabel, g.label(e.to)), []).append(_PDFS(p.gid, e, p))
        if found_fwd:
            elb, tolb = min(found_fwd)
            src = code[pos].frm
            edge = DFSEdge(src, maxtoc + 1, vlabels[src], elb, tolb)
            return edge, found_fwd[(elb, tolb)]
    return None


def _min_code_steps(g: Graph) -> Iterator[DFSEdge]:
    """Yield the edges of the minimal DFS code of ``g``, one at a time."""
    root: dict[tuple[int, int, int], list[_PDFS]] = {}
    for v in range(g.n_nodes):
        for e in _forward_root_edges(g, v):
            key = (g.label(v), e.elabel, g.label(e.to))
            root.setdefault(key, []).append(_PDFS(0, e, None))
    if not root:
        return
    key = min(root)
    code = [DFSEdge(0, 1, *key)]
    yield code[0]
    projections = root[key]
    while True:
        step = _min_step(g, code, projections)
        if step is None:
            return
        edge, projections = step
        code.append(edge)
        yield edge


def min_dfs_code(g: Graph) -> DFSCode:
    """Canonical (lexicographically minimal) DFS code of a connected graph."""
    if g.n_edges == 0:
        raise GraphError("graph has no edges")
    if not _is_connected(g):
        raise GraphError("graph is not connected")
    return DFSCode(_min_code_steps(g))


def is_min(code: DFSCode) -> bool:
    """Whether ``code`` equals the minimal DFS code of its own graph.

    Rebuilds the minimal code incrementally and bails out at the first
    mismatching position, so rejecting a non-canonical extension is cheap.
    """
    g = code.to_graph()
    for idx, edge in enumerate(_min_code_steps(g)):
        if edge != code.edges[idx]:
            return False
    return True


# -- patterns midway through mining -------------------------------------------


class Pattern:
    """A canonical subgraph pattern with its occurrences in a dataset.

    ``indicator`` is the {0,1} vector over graphs (1 where the pattern occurs)
    and ``support_ids`` the sorted graph indices it marks.  Patterns built by
    the miner carry occurrence chains and can materialize ``embeddings``;
    patterns built from an explicit indicator (e.g. by the brute-force oracle)
    cannot.
    """

    __slots__ = ("code", "n", "_chains", "support_ids", "indicator", "_embeddings")

    def __init__(self, code: DFSCode, n: int, chains=None, indicator=None):
        self.code = code
        self.n = int(n)
        self._chains = tuple(chains) if chains is not None else None
        if indicator is None:
            if self._chains is None:
                raise GraphError("a pattern needs occurrence chains or an indicator")
            ids = sorted({c.gid for c in self._chains})
            vec = np.zeros(self.n, dtype=np.uint8)
            vec[ids] = 1
        else:
            vec = np.asarray(indicator)
            if vec.shape != (self.n,) or not np.all(np.isin(vec, (0, 1))):
                raise GraphError("indicator must be a {0,1} vector of length n")
            vec = vec.astype(np.uint8)
            ids = [int(i) for i in np.flatnonzero(vec)]
        self.indicator = vec
        self.support_ids = tuple(ids)
        self._embeddings = None

    @property
    def support(self) -> int:
        return len(self.support_ids)

    @property
    def embeddings(self) -> dict[int, list[tuple[int, ...]]]:
        """Injective node maps per graph id: pattern vertex -> host node."""
        if self._chains is None:
            raise GraphError("pattern has no recorded embeddings")
        if self._embeddings is None:
            out: dict[int, list[tuple[int, ...]]] = {}
            for chain in self._chains:
                host_edges = _History(chain).edges
                hosts: list[Optional[int]] = [None] * self.code.n_vertices
                for ce, he in zip(self.code.edges, host_edges):
                    if hosts[ce.frm] is None:
                        hosts[ce.frm] = he.frm
                    if hosts[ce.to] is None:
                        hosts[ce.to] = he.to
                out.setdefault(chain.gid, []).append(tuple(hosts))
            self._embeddings = out
        return self._embeddings

    def __repr__(self) -> str:
        return f"Pattern({self.code}, support={self.support})"


def support(p: Pattern) -> tuple[int, np.ndarray]:
    """Support count and a copy of the {0,1} occurrence vector."""
    return p.support, p.indicator.copy()


def single_edge_patterns(dataset: GraphDataset) -> list[Pattern]:
    """All distinct single-edge patterns in the dataset, in canonical order."""
    groups: dict[tuple[int, int, int], list[_PDFS]] = {}
    for gid, g in enumerate(dataset.graphs):
        for v in range(g.n_nodes):
            for e in _forward_root_edges(g, v):
                key = (g.label(v), e.elabel, g.label(e.to))
                groups.setdefault(key, []).append(_PDFS(gid, e, None))
    return [
        Pattern(DFSCode([DFSEdge(0, 1, *key)]), dataset.n, tuple(groups[key]))
        for key in sorted(groups)
    ]


def rightmost_extensions(pattern: Pattern, dataset: GraphDataset) -> list[tuple[DFSEdge, Pattern]]:
    """All one-edge canonical children of ``pattern``, in gSpan order.

    Grows occurrences along the rightmost path in every host graph, groups
    them by the DFS edge they induce, and keeps only extensions whose code
    stays minimal.  Children come out backward-first, then forward with the
    deepest source first — the order a canonical enumeration must follow.
    """
    if pattern._chains is None:
        raise GraphError("pattern has no recorded embeddings")
    code = pattern.code
    edges_seq = code.edges
    rmpath = _rmpath_positions(edges_seq)
    maxtoc = edges_seq[rmpath[0]].to
    min_vlb = edges_seq[0].frm_label
    vlabels = code.vertex_labels()

    backward: dict[tuple[int, int], list[_PDFS]] = {}
    forward: dict[tuple[int, int, int], list[_PDFS]] = {}
    for chain in pattern._chains:
        g = dataset.graphs[chain.gid]
        hist = _History(chain)
        rm_host = hist.edges[rmpath[0]]
        for pos in rmpath[::-1]:
            e = _backward_candidate(g, hist.edges[pos], rm_host, hist)
            if e is not None:
                backward.setdefault((edges_seq[pos].frm, e.elabel), []).append(
                    _PDFS(chain.gid, e, chain)
                )
        for e in _forward_pure_edges(g, rm_host, min_vlb, hist):
            forward.setdefault((maxtoc, e.elabel, g.label(e.to)), []).append(
                _PDFS(chain.gid, e, chain)
            )
        for pos in rmpath:
            for e in _forward_rmpath_edges(g, hist.edges[pos], min_vlb, hist):
                forward.setdefault((edges_seq[pos].frm, e.elabel, g.label(e.to)), []).append(
                    _PDFS(chain.gid, e, chain)
                )

    out: list[tuple[DFSEdge, Pattern]] = []
    for target, elb in sorted(backward):
        edge = DFSEdge(maxtoc, target, vlabels[maxtoc], elb, vlabels[target])
        child = code.extended(edge)
        if is_min(child):
            out.append((edge, Pattern(child, pattern.n, tuple(backward[(target, elb)]))))
    for src, elb, tolb in sorted(forward, key=lambda k: (-k[0], k[1], k[2])):
        edge = DFSEdge(src, maxtoc + 1, vlabels[src], elb, tolb)
        child = code.extended(edge)
        if is_min(child):
            out.append((edge, Pattern(child, pattern.n, tuple(forward[(src, elb, tolb)]))))
    return out


def contains(g: Graph, code: DFSCode) -> bool:
    """Whether the pattern occurs in ``g`` as a (not necessarily induced) subgraph.

    Independent of any recorded embeddings: plain backtracking over injective
    node maps, matching node labels and required edge labels.  Extra host
    edges between matched nodes are allowed.
    """
    pg = code.to_graph()
    pn = pg.n_nodes
    if pn > g.n_nodes or pg.n_edges > g.n_edges:
        return False
    # Edges each pattern vertex must realize toward already-placed vertices.
    # Discovery order guarantees every vertex > 0 has at least one such edge.
    earlier: list[list[tuple[int, int]]] = [[] for _ in range(pn)]
    for u, v, el in pg.edges():
        a, b = (u, v) if u > v else (v, u)
        earlier[a].append((b, el))

    assign: list[int] = []
    used = [False] * g.n_nodes

    def place(v: int) -> bool:
        if v == pn:
            return True
        if v == 0:
            cands: Iterable[int] = range(g.n_nodes)
        else:
            anchor, ael = earlier[v][0]
            cands = [e.to for e in g.neighbors(assign[anchor]) if e.elabel == ael]
        for h in cands:
            if used[h] or g.label(h) != pg.label(v):
                continue
            if any(g.edge_label(h, assign[w]) != el for w, el in earlier[v]):
                continue
            used[h] = True
            assign.append(h)
            if place(v + 1):
                return True
            assign.pop()
            used[h] = False
        return False

    return place(0)
