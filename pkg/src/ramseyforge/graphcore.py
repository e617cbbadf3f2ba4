"""Graph and linear-hypergraph core: exact forbidden-subgraph checkers, an
exact independence-number solver, independent-set enumeration, shadow graphs,
and the strong freeness test for hypergraphs.

Graphs are immutable bitset adjacency rows (Python ints), so all set algebra
in the solvers is word-parallel.  Every solver is deterministic: vertex
orders, tie-breaks and witnesses depend only on the input, and exhausting a
node budget raises UndecidedError rather than ever returning a wrong answer.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


class UndecidedError(RuntimeError):
    """A solver ran out of budget before reaching a definite answer."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph on vertices 0..n-1 with bitset adjacency rows."""

    __slots__ = ("n", "rows", "degrees", "_edge_count")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0:
            raise ValueError("negative vertex count")
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError("row count does not match n")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in _iter_bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.rows = rows
        self.degrees = tuple(row.bit_count() for row in rows)
        self._edge_count = sum(self.degrees) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def row(self, v: int) -> int:
        return self.rows[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_iter_bits(self.rows[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in _iter_bits(self.rows[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def is_regular(self) -> bool:
        return self.n == 0 or min(self.degrees) == max(self.degrees)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; vertices must be strictly increasing (vertex i of
        the result is vertices[i])."""
        vs = list(vertices)
        if any(b <= a for a, b in zip(vs, vs[1:])):
            raise ValueError("vertices must be strictly increasing")
        pos = {v: i for i, v in enumerate(vs)}
        rows = [0] * len(vs)
        for i, v in enumerate(vs):
            row = self.rows[v]
            for u in vs:
                if row >> u & 1:
                    rows[i] |= 1 << pos[u]
        return Graph(len(vs), rows)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(
            self.n, tuple(~row & full & ~(1 << v) for v, row in enumerate(self.rows))
        )

    def subgraph_edge_count(self, mask: int) -> int:
        """Number of edges inside the vertex subset given as a bitmask."""
        return sum((self.rows[v] & mask).bit_count() for v in _iter_bits(mask)) // 2

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


class LinearHypergraph:
    """Uniform hypergraph in which any two hyperedges share at most one vertex."""

    __slots__ = ("n", "edges", "r", "degrees")

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        edge_list = []
        for e in edges:
            e = tuple(sorted(e))
            if len(set(e)) != len(e):
                raise ValueError(f"repeated vertex in hyperedge {e}")
            if e and not (0 <= e[0] and e[-1] < n):
                raise ValueError(f"hyperedge {e} out of range")
            edge_list.append(e)
        if not edge_list:
            raise ValueError("hypergraph needs at least one hyperedge")
        sizes = {len(e) for e in edge_list}
        if len(sizes) != 1:
            raise ValueError(f"non-uniform hyperedge sizes {sorted(sizes)}")
        (self.r,) = sizes
        if self.r < 1:
            raise ValueError("hyperedges must be nonempty")
        seen_pairs: dict[tuple[int, int], int] = {}
        for idx, e in enumerate(edge_list):
            for i in range(len(e)):
                for j in range(i + 1, len(e)):
                    pair = (e[i], e[j])
                    if pair in seen_pairs:
                        raise ValueError(
                            f"hyperedges {seen_pairs[pair]} and {idx} share two vertices {pair}"
                        )
                    seen_pairs[pair] = idx
        self.n = n
        self.edges = tuple(edge_list)
        degrees = [0] * n
        for e in edge_list:
            for v in e:
                degrees[v] += 1
        self.degrees = tuple(degrees)

    def is_regular(self) -> bool:
        return self.n == 0 or min(self.degrees) == max(self.degrees)

    def regular_degree(self) -> int:
        if not self.is_regular():
            raise ValueError("hypergraph is not regular")
        return self.degrees[0]

    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the indices of the hyperedges containing it."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for idx, e in enumerate(self.edges):
            for v in e:
                inc[v].append(idx)
        return tuple(tuple(x) for x in inc)

    def __repr__(self) -> str:
        return f"LinearHypergraph(n={self.n}, edges={len(self.edges)}, r={self.r})"


@dataclass(frozen=True)
class ForbiddenPattern:
    """A forbidden subgraph: clique(s), odd_cycle(k), or the 4-cycle."""

    kind: str
    size: int

    @classmethod
    def clique(cls, s: int) -> "ForbiddenPattern":
        if s < 3:
            raise ValueError("clique patterns need s >= 3")
        return cls("clique", s)

    @classmethod
    def odd_cycle(cls, k: int) -> "ForbiddenPattern":
        if k < 3 or k % 2 == 0:
            raise ValueError("odd cycle patterns need odd k >= 3")
        return cls("odd_cycle", k)

    @classmethod
    def c4(cls) -> "ForbiddenPattern":
        return cls("c4", 4)

    @classmethod
    def parse(cls, name: str) -> "ForbiddenPattern":
        name = name.strip().lower()
        if name == "triangle":
            return cls.clique(3)
        if name == "c4":
            return cls.c4()
        if name.startswith("k") and name[1:].isdigit():
            return cls.clique(int(name[1:]))
        if name.startswith("c") and name[1:].isdigit():
            k = int(name[1:])
            if k % 2 == 0:
                raise ValueError(f"unsupported even cycle pattern {name}")
            return cls.odd_cycle(k)
        raise ValueError(f"unknown pattern {name!r}")

    @property
    def name(self) -> str:
        if self.kind == "clique":
            return f"k{self.size}"
        return f"c{self.size}" if self.kind == "odd_cycle" else "c4"

    def is_bipartite_pattern(self) -> bool:
        return self.kind == "c4"


# --- clique / independence engine ------------------------------------------


def _color_order(P: int, adj: Sequence[int]) -> tuple[list[int], list[int]]:
    """Greedy coloring of the subgraph induced by P; returns vertices grouped
    by color class with their (1-based) color numbers, colors ascending."""
    order: list[int] = []
    colors: list[int] = []
    un = P
    c = 0
    while un:
        c += 1
        avail = un
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~(adj[v] | (1 << v))
            un &= ~(1 << v)
            order.append(v)
            colors.append(c)
    return order, colors


class _SearchState:
    __slots__ = ("best", "best_set", "nodes", "budget", "target")

    def __init__(self, budget, target):
        self.best = 0
        self.best_set: tuple[int, ...] = ()
        self.nodes = 0
        self.budget = budget
        self.target = target


class _Exhausted(Exception):
    pass


class _TargetReached(Exception):
    pass


def _expand(R: list[int], P: int, adj: Sequence[int], st: _SearchState) -> None:
    st.nodes += 1
    if st.budget is not None and st.nodes > st.budget:
        raise _Exhausted
    order, colors = _color_order(P, adj)
    for i in range(len(order) - 1, -1, -1):
        if len(R) + colors[i] <= st.best:
            return
        v = order[i]
        R.append(v)
        new_p = P & adj[v]
        if new_p:
            _expand(R, new_p, adj, st)
        elif len(R) > st.best:
            st.best = len(R)
            st.best_set = tuple(R)
            if st.target is not None and st.best >= st.target:
                raise _TargetReached
        R.pop()
        P &= ~(1 << v)


def _max_clique_search(G: Graph, budget: int | None, target: int | None):
    """Branch-and-bound maximum clique with greedy-coloring bounds.

    Returns (best, best_set_in_input_labels, status) where status is
    'complete', 'target' (early stop at target size) or 'budget'.
    Vertices are relabeled by descending degree (ties by index), which fixes
    the search tree and therefore the witness deterministically.
    """
    n = G.n
    if n == 0:
        return 0, (), "complete"
    perm = sorted(range(n), key=lambda v: (-G.degrees[v], v))
    inv = [0] * n
    for new, old in enumerate(perm):
        inv[old] = new
    adj = [0] * n
    for old in range(n):
        row = 0
        for u in _iter_bits(G.rows[old]):
            row |= 1 << inv[u]
        adj[inv[old]] = row
    st = _SearchState(budget, target)
    status = "complete"
    try:
        _expand([], (1 << n) - 1, adj, st)
    except _TargetReached:
        status = "target"
    except _Exhausted:
        status = "budget"
    witness = tuple(sorted(perm[v] for v in st.best_set))
    return st.best, witness, status


def _root_color_bound(G: Graph) -> int:
    if G.n == 0:
        return 0
    _, colors = _color_order((1 << G.n) - 1, G.rows)
    return colors[-1] if colors else 0


@dataclass(frozen=True)
class AlphaResult:
    """Independence-number result: exact when lower == upper."""

    lower: int
    upper: int
    witness: tuple[int, ...]
    exact: bool

    @property
    def value(self) -> int:
        if not self.exact:
            raise UndecidedError(
                f"independence number only bracketed in [{self.lower}, {self.upper}]",
                partial=self,
            )
        return self.lower


def max_clique(G: Graph, budget: int | None = None) -> AlphaResult:
    best, witness, status = _max_clique_search(G, budget, None)
    if status == "complete":
        return AlphaResult(best, best, witness, True)
    return AlphaResult(best, _root_color_bound(G.complement()), witness, False)


def independence_number(G: Graph, budget: int | None = None) -> AlphaResult:
    """Exact independence number with witness; on budget exhaustion returns a
    certified interval flagged inexact.  Always >= the greedy Turan floor."""
    comp = G.complement()
    best, witness, status = _max_clique_search(comp, budget, None)
    if status == "complete":
        result = AlphaResult(best, best, witness, True)
    else:
        result = AlphaResult(best, _root_color_bound(G), witness, False)
    floor = -(-G.n // ((max(G.degrees) if G.n else 0) + 1))
    if result.upper < floor:  # pragma: no cover - would be a solver bug
        raise AssertionError("independence bound fell below the Turan floor")
    return result


def find_clique(G: Graph, s: int, budget: int | None = None) -> tuple[int, ...] | None:
    """A clique of size s (canonically ordered) or None; raises UndecidedError
    if the budget ran out before the search was decided."""
    if s <= 0:
        return ()
    if s == 1:
        return (0,) if G.n else None
    if s == 2:
        return next(G.edges(), None)
    best, witness, status = _max_clique_search(G, budget, s)
    if status == "target" or best >= s:
        return tuple(sorted(witness[:s])) if len(witness) > s else witness
    if status == "budget":
        raise UndecidedError(f"clique({s}) search exhausted budget {budget}")
    return None


def find_independent_set(G: Graph, t: int, budget: int | None = None):
    return find_clique(G.complement(), t, budget)


# --- forbidden patterns ------------------------------------------------------


def _find_c4(G: Graph) -> list[int] | None:
    seen: dict[tuple[int, int], int] = {}
    for w in range(G.n):
        nbrs = list(_iter_bits(G.rows[w]))
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                pair = (nbrs[i], nbrs[j])
                if pair in seen:
                    return [pair[0], seen[pair], pair[1], w]
                seen[pair] = w
    return None


def _odd_girth(G: Graph) -> tuple[int, list[int]] | None:
    """(odd girth, witness cycle) or None if bipartite."""
    best_len = None
    best_at = None
    for r in range(G.n):
        level = {r: 0}
        parent = {r: -1}
        frontier = [r]
        depth = 0
        while frontier:
            if best_len is not None and 2 * depth + 1 >= best_len:
                break
            nxt = []
            for u in frontier:
                for v in _iter_bits(G.rows[u]):
                    if v not in level:
                        level[v] = depth + 1
                        parent[v] = u
                        nxt.append(v)
                    elif level[v] == level[u] and (best_len is None or 2 * depth + 1 < best_len):
                        best_len = level[u] + level[v] + 1
                        best_at = (r, u, v, dict(parent))
            frontier = nxt
            depth += 1
    if best_len is None:
        return None
    _, u, v, parent = best_at
    path_u, path_v = [u], [v]
    while parent[path_u[-1]] != -1:
        path_u.append(parent[path_u[-1]])
    while parent[path_v[-1]] != -1:
        path_v.append(parent[path_v[-1]])
    # strip the common tail above the lowest common ancestor
    while len(path_u) > 1 and len(path_v) > 1 and path_u[-2] == path_v[-2]:
        path_u.pop()
        path_v.pop()
    cycle = path_u + path_v[-2::-1]
    return len(cycle), cycle


def _bfs_dist(adj: Sequence[int], n: int, src: int, allowed: int) -> list[int]:
    INF = n + 1
    dist = [INF] * n
    dist[src] = 0
    frontier = [src]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for v in _iter_bits(adj[u] & allowed):
                if dist[v] > d:
                    dist[v] = d
                    nxt.append(v)
        frontier = nxt
    return dist


def _iter_cycles_exact(G: Graph, k: int, budget: int | None) -> Iterator[list[int]]:
    """All simple cycles of length exactly k, canonically: smallest vertex
    first, second vertex smaller than the last (one orientation per cycle)."""
    nodes = [0]
    full = (1 << G.n) - 1
    for s in range(G.n):
        allowed = full >> (s + 1) << (s + 1)
        dist = _bfs_dist(G.rows, G.n, s, allowed)
        path = [s]

        def walk(u: int, remaining: int, used: int) -> Iterator[list[int]]:
            nodes[0] += 1
            if budget is not None and nodes[0] > budget:
                raise UndecidedError(f"cycle({k}) enumeration exhausted budget {budget}")
            if remaining == 0:
                if G.rows[u] >> s & 1 and path[1] < path[-1]:
                    yield list(path)
                return
            for v in _iter_bits(G.rows[u] & allowed & ~used):
                if dist[v] <= remaining:
                    path.append(v)
                    yield from walk(v, remaining - 1, used | (1 << v))
                    path.pop()

        yield from walk(s, k - 1, 1 << s)


def is_pattern_free(
    G: Graph, F: ForbiddenPattern, budget: int | None = None
) -> tuple[bool, list[int] | None]:
    """True iff no copy of F occurs in G; on False the witness is a concrete
    vertex list (clique members, or cycle in traversal order) that
    re-validates against the adjacency."""
    if F.kind == "clique":
        w = find_clique(G, F.size, budget)
        return (True, None) if w is None else (False, list(w))
    if F.kind == "c4":
        w = _find_c4(G)
        return (True, None) if w is None else (False, w)
    if F.kind == "odd_cycle":
        og = _odd_girth(G)
        if og is None or og[0] > F.size:
            return True, None
        if og[0] == F.size:
            return False, og[1]
        for cycle in _iter_cycles_exact(G, F.size, budget):
            return False, cycle
        return True, None
    raise ValueError(f"unknown pattern kind {F.kind}")


def validate_witness(G: Graph, F: ForbiddenPattern, witness: Sequence[int]) -> bool:
    """Independently re-check a witness returned by is_pattern_free."""
    w = list(witness)
    if len(set(w)) != len(w):
        return False
    if F.kind == "clique":
        return len(w) == F.size and all(
            G.has_edge(a, b) for i, a in enumerate(w) for b in w[i + 1 :]
        )
    k = F.size
    if len(w) != k:
        return False
    return all(G.has_edge(w[i], w[(i + 1) % k]) for i in range(k))


def triangle_count(G: Graph) -> int:
    """Exact number of triangles (each counted once, by sorted vertex order)."""
    total = 0
    for u in range(G.n):
        for v in _iter_bits(G.rows[u] >> (u + 1) << (u + 1)):
            common = G.rows[u] & G.rows[v]
            total += (common >> (v + 1)).bit_count()
    return total


# --- independent set enumeration ---------------------------------------------

ENUMERATION_LIMIT = 10**8


def iter_independent_sets(G: Graph, t: int) -> Iterator[tuple[int, ...]]:
    """All independent sets of size exactly t, in lexicographic order."""
    if t < 0:
        return
    if t == 0:
        yield ()
        return
    chosen: list[int] = []

    def rec(cand: int, need: int) -> Iterator[tuple[int, ...]]:
        if need == 0:
            yield tuple(chosen)
            return
        while cand:
            if cand.bit_count() < need:
                return
            v = (cand & -cand).bit_length() - 1
            cand ^= 1 << v
            chosen.append(v)
            yield from rec(cand & ~G.rows[v], need - 1)
            chosen.pop()

    yield from rec((1 << G.n) - 1, t)


def enumerate_independent_sets(G: Graph, t: int, limit: int = ENUMERATION_LIMIT) -> int:
    """Exact count of independent sets of size exactly t, guarded against
    blow-up: raises UndecidedError with the partial count at the limit."""
    if t < 0:
        return 0
    if t == 0:
        return 1
    count = 0

    def rec(cand: int, need: int) -> None:
        nonlocal count
        if need == 1:
            count += cand.bit_count()
            if count > limit:
                raise UndecidedError(
                    f"independent-set count exceeds limit {limit}", partial=count
                )
            return
        while cand:
            if cand.bit_count() < need:
                return
            v = (cand & -cand).bit_length() - 1
            cand ^= 1 << v
            sub = cand & ~G.rows[v]
            if sub.bit_count() >= need - 1:
                rec(sub, need - 1)

    rec((1 << G.n) - 1, t)
    return count


# --- hypergraphs ---------------------------------------------------------------


def shadow_graph(H: LinearHypergraph) -> Graph:
    """Graph joining every pair of vertices that share a hyperedge."""
    rows = [0] * H.n
    for e in H.edges:
        for i, u in enumerate(e):
            for v in e[i + 1 :]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    G = Graph(H.n, rows)
    expected = len(H.edges) * (H.r * (H.r - 1) // 2)
    if G.edge_count != expected:  # pragma: no cover - linearity guarantees this
        raise AssertionError("shadow edge count violates linearity")
    return G


def _induced_piece_bipartite(copy_vertices: Sequence[int], copy_edges: set, inside) -> bool:
    """2-color the subgraph of the copy induced by the vertices in `inside`."""
    verts = [v for v in copy_vertices if v in inside]
    adj = {v: [] for v in verts}
    vset = set(verts)
    for a, b in copy_edges:
        if a in vset and b in vset:
            adj[a].append(b)
            adj[b].append(a)
    color: dict[int, int] = {}
    for start in verts:
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in color:
                    color[v] = color[u] ^ 1
                    stack.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def _iter_cliques(G: Graph, s: int, budget: int | None) -> Iterator[tuple[int, ...]]:
    """All cliques of size exactly s, in lexicographic order."""
    nodes = [0]
    chosen: list[int] = []

    def rec(cand: int, need: int) -> Iterator[tuple[int, ...]]:
        nodes[0] += 1
        if budget is not None and nodes[0] > budget:
            raise UndecidedError(f"clique enumeration exhausted budget {budget}")
        if need == 0:
            yield tuple(chosen)
            return
        while cand:
            if cand.bit_count() < need:
                return
            v = (cand & -cand).bit_length() - 1
            cand ^= 1 << v
            chosen.append(v)
            yield from rec(cand & G.rows[v], need - 1)
            chosen.pop()

    yield from rec((1 << G.n) - 1, s)


def is_strongly_pattern_free(
    H: LinearHypergraph, F: ForbiddenPattern, budget: int | None = None
) -> tuple[bool, list[int] | None]:
    """True iff every copy of F in the shadow graph has a hyperedge whose
    intersection with the copy induces (within the copy) a non-bipartite
    subgraph.  On False, returns the violating copy's vertices."""
    if F.is_bipartite_pattern():
        raise ValueError("strong freeness is defined for non-bipartite patterns only")
    shadow = shadow_graph(H)
    incidence = H.incidence()
    edge_sets = [set(e) for e in H.edges]

    def copy_is_covered(vertices: Sequence[int], copy_edges: set) -> bool:
        candidate_edges: set[int] = set()
        for v in vertices:
            candidate_edges.update(incidence[v])
        for idx in sorted(candidate_edges):
            if not _induced_piece_bipartite(vertices, copy_edges, edge_sets[idx]):
                return True
        return False

    if F.kind == "clique":
        s = F.size
        for copy in _iter_cliques(shadow, s, budget):
            copy_edges = {(a, b) for i, a in enumerate(copy) for b in copy[i + 1 :]}
            if not copy_is_covered(copy, copy_edges):
                return False, list(copy)
        return True, None

    k = F.size
    for cycle in _iter_cycles_exact(shadow, k, budget):
        copy_edges = {
            tuple(sorted((cycle[i], cycle[(i + 1) % k]))) for i in range(k)
        }
        if not copy_is_covered(cycle, copy_edges):
            return False, cycle
    return True, None


# --- text interchange ---------------------------------------------------------


def write_graph(G: Graph, fh, header: dict | None = None) -> None:
    """Edge-list text: a '# {json}' header line, then one 'u v' line per edge
    in sorted order (0-based)."""
    head = dict(header or {})
    head["n"] = G.n
    fh.write("# " + json.dumps(head, sort_keys=True) + "\n")
    for u, v in G.edges():
        fh.write(f"{u} {v}\n")


def read_graph(fh) -> tuple[Graph, dict]:
    first = fh.readline()
    if not first.startswith("#"):
        raise ValueError("missing graph header line")
    header = json.loads(first[1:].strip())
    edges = []
    for line in fh:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        u, v = line.split()
        edges.append((int(u), int(v)))
    return Graph.from_edges(int(header["n"]), edges), header


def write_hypergraph(H: LinearHypergraph, fh, header: dict | None = None) -> None:
    """Hyperedge-list text: a '# {json}' header line, then one line per
    hyperedge listing its vertices."""
    head = dict(header or {})
    head["n"] = H.n
    head["r"] = H.r
    fh.write("# " + json.dumps(head, sort_keys=True) + "\n")
    for e in H.edges:
        fh.write(" ".join(str(v) for v in e) + "\n")


def read_hypergraph(fh) -> tuple[LinearHypergraph, dict]:
    first = fh.readline()
    if not first.startswith("#"):
        raise ValueError("missing hypergraph header line")
    header = json.loads(first[1:].strip())
    edges = []
    for line in fh:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        edges.append(tuple(int(x) for x in line.split()))
    return LinearHypergraph(int(header["n"]), edges), header
