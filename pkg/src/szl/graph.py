"""Loopless multigraphs on vertices 0..n-1.

A graph is stored as its upper-triangle multiplicity sequence, in pair order
(0,1), (0,2), ..., (0,n-1), (1,2), ..., (n-2,n-1). Every operation returns a
fresh value.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator, Optional, Sequence

from szl import kernels

N_MAX = 10
CANON_N_MAX = 8

Partition = tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def pair_list(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((u, v) for u in range(n) for v in range(u + 1, n))


@lru_cache(maxsize=None)
def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: k for k, p in enumerate(pair_list(n))}


@dataclass(frozen=True)
class Multigraph:
    n: int
    upper: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= N_MAX:
            raise ValueError(f"vertex count must be in [1, {N_MAX}], got {self.n}")
        object.__setattr__(self, "upper", tuple(int(m) for m in self.upper))
        if len(self.upper) != self.n * (self.n - 1) // 2:
            raise ValueError(f"expected {self.n * (self.n - 1) // 2} pair multiplicities, got {len(self.upper)}")
        if any(m < 0 for m in self.upper):
            raise ValueError("multiplicities must be nonnegative")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, int]]) -> "Multigraph":
        """Build from ``(u, v, mult)`` triples; repeated pairs accumulate."""
        upper = [0] * (n * (n - 1) // 2)
        index = _pair_index(n)
        for u, v, m in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex out of range in pair ({u}, {v})")
            if m < 0:
                raise ValueError(f"negative multiplicity on pair ({u}, {v})")
            upper[index[(min(u, v), max(u, v))]] += m
        return cls(n, tuple(upper))

    def mult(self, u: int, v: int) -> int:
        if u == v:
            return 0
        return self.upper[_pair_index(self.n)[(min(u, v), max(u, v))]]

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return pair_list(self.n)

    def edges(self) -> list[tuple[int, int, int]]:
        """``(u, v, mult)`` for every pair with positive multiplicity."""
        return [(u, v, m) for (u, v), m in zip(self.pairs(), self.upper) if m]

    @property
    def num_edges(self) -> int:
        return sum(self.upper)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return sum(self.mult(v, u) for u in range(self.n) if u != v)

    @property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for (u, v), m in zip(self.pairs(), self.upper):
            deg[u] += m
            deg[v] += m
        return tuple(deg)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def subset_cuts(self) -> list[int]:
        """Cut degree of every vertex subset, indexed by bitmask."""
        cuts = [0] * (1 << self.n)
        for mask in range(1 << self.n):
            cuts[mask] = sum(
                m for (u, v), m in zip(self.pairs(), self.upper) if ((mask >> u) & 1) != ((mask >> v) & 1)
            )
        return cuts

    def relabel(self, perm: Sequence[int]) -> "Multigraph":
        """Graph with old vertex ``u`` renamed ``perm[u]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex set")
        return Multigraph.from_edges(self.n, ((perm[u], perm[v], m) for u, v, m in self.edges()))

    def with_edge(self, u: int, v: int, count: int = 1) -> "Multigraph":
        return Multigraph.from_edges(self.n, self.edges() + [(u, v, count)])

    def induced(self, vertices: Sequence[int]) -> "Multigraph":
        """Induced subgraph, relabelled by position in ``vertices``."""
        for v in vertices:
            self._check_vertex(v)
        k = len(vertices)
        return Multigraph.from_edges(
            k, ((i, j, self.mult(vertices[i], vertices[j])) for i in range(k) for j in range(i + 1, k))
        )


def _as_subset(G: Multigraph, S: Iterable[int]) -> frozenset[int]:
    members = frozenset(S)
    for v in members:
        if not isinstance(v, int) or not 0 <= v < G.n:
            raise ValueError(f"vertex {v!r} out of range for n={G.n}")
    return members


def cut_degree(G: Multigraph, S: Iterable[int]) -> int:
    """Number of edges with exactly one end in ``S``."""
    members = _as_subset(G, S)
    return sum(m for (u, v), m in zip(G.pairs(), G.upper) if (u in members) != (v in members))


def max_multiplicity(G: Multigraph) -> int:
    return max(G.upper, default=0)


def check_partition(G: Multigraph, P: Sequence[Iterable[int]]) -> Partition:
    blocks = tuple(tuple(sorted(_as_subset(G, block))) for block in P)
    if any(not b for b in blocks):
        raise ValueError("partition blocks must be nonempty")
    seen = [v for b in blocks for v in b]
    if len(seen) != len(set(seen)) or len(seen) != G.n:
        raise ValueError("blocks must be disjoint and cover every vertex")
    return blocks


def contract(G: Multigraph, P: Sequence[Iterable[int]]) -> Multigraph:
    """Identify each block to one vertex (block order gives the new labels), dropping loops."""
    blocks = check_partition(G, P)
    where = {v: i for i, b in enumerate(blocks) for v in b}
    return Multigraph.from_edges(
        len(blocks), ((where[u], where[v], m) for u, v, m in G.edges() if where[u] != where[v])
    )


def contract_pair(G: Multigraph, x: int, y: int) -> Multigraph:
    """Contract every edge between ``x`` and ``y``; the merged vertex takes the smaller label slot."""
    if x == y:
        raise ValueError("need two distinct vertices")
    x, y = min(x, y), max(x, y)
    blocks = [(v,) if v != x else (x, y) for v in range(G.n) if v != y]
    return contract(G, blocks)


def lift_path(G: Multigraph, path: Sequence[int]) -> Multigraph:
    """Delete the edges of ``path`` and add one edge joining its ends."""
    if len(path) < 2:
        raise ValueError("a path needs at least two vertices")
    if path[0] == path[-1]:
        raise ValueError("lifting a closed walk would create a loop")
    upper = list(G.upper)
    index = _pair_index(G.n)
    for a, b in zip(path, path[1:]):
        G._check_vertex(a)
        G._check_vertex(b)
        if a == b:
            raise ValueError(f"repeated vertex {a} on path")
        k = index[(min(a, b), max(a, b))]
        if upper[k] < 1:
            raise ValueError(f"no edge left between {a} and {b}")
        upper[k] -= 1
    upper[index[(min(path[0], path[-1]), max(path[0], path[-1]))]] += 1
    return Multigraph(G.n, tuple(upper))


# --- tree packing -----------------------------------------------------------

def set_partitions(n: int) -> Iterator[Partition]:
    """All partitions of range(n), in lexicographic order of restricted growth strings."""
    if n == 0:
        yield ()
        return
    rgs = [0] * n

    def rec(i: int, top: int) -> Iterator[Partition]:
        if i == n:
            blocks: list[list[int]] = [[] for _ in range(top + 1)]
            for v, b in enumerate(rgs):
                blocks[b].append(v)
            yield tuple(tuple(b) for b in blocks)
            return
        for b in range(top + 2):
            rgs[i] = b
            yield from rec(i + 1, max(top, b))

    rgs[0] = 0
    yield from rec(1, 0)


@dataclass(frozen=True)
class TreePacking:
    """Maximum number of edge-disjoint spanning trees, with a tight partition.

    ``count`` is None for the one-vertex graph, which packs arbitrarily many (empty) trees.
    """

    count: Optional[int]
    witness: Optional[Partition]

    @property
    def unbounded(self) -> bool:
        return self.count is None

    def at_least(self, m: int) -> bool:
        return self.count is None or self.count >= m


def tree_packing_number(G: Multigraph) -> TreePacking:
    """Min over partitions P with |P| >= 2 of floor(e(G/P) / (|P| - 1))."""
    if G.n > N_MAX:
        raise ValueError(f"partition enumeration limited to n <= {N_MAX}")
    if G.n == 1:
        return TreePacking(None, None)
    best: Optional[tuple[int, Partition]] = None
    e = G.num_edges
    for P in set_partitions(G.n):
        if len(P) < 2:
            continue
        block = [0] * G.n
        for i, b in enumerate(P):
            for v in b:
                block[v] = i
        crossing = e - sum(m for (u, v), m in zip(G.pairs(), G.upper) if block[u] == block[v])
        value = crossing // (len(P) - 1)
        if best is None or value < best[0]:
            best = (value, P)
    assert best is not None
    return TreePacking(best[0], best[1])


def spanning_trees(G: Multigraph) -> list[tuple[tuple[int, int], ...]]:
    """Spanning trees of the underlying simple graph, as sorted pair tuples."""
    support = [p for p, m in zip(G.pairs(), G.upper) if m]
    trees = []
    for chosen in combinations(support, G.n - 1):
        parent = list(range(G.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for u, v in chosen:
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            trees.append(chosen)
    return trees


def pack_spanning_trees(G: Multigraph, m: int) -> Optional[list[tuple[tuple[int, int], ...]]]:
    """Explicit list of ``m`` edge-disjoint spanning trees, or None if there is none."""
    if m <= 0:
        return []
    trees = spanning_trees(G)
    cap = dict(zip(G.pairs(), G.upper))
    chosen: list[tuple[tuple[int, int], ...]] = []

    def rec(start: int) -> bool:
        if len(chosen) == m:
            return True
        if sum(cap.values()) < (m - len(chosen)) * (G.n - 1):
            return False
        for i in range(start, len(trees)):
            t = trees[i]
            if all(cap[p] for p in t):
                for p in t:
                    cap[p] -= 1
                chosen.append(t)
                if rec(i):
                    return True
                chosen.pop()
                for p in t:
                    cap[p] += 1
        return False

    return list(chosen) if rec(0) else None


def max_tree_packing_explicit(G: Multigraph) -> Optional[int]:
    """Largest m for which ``pack_spanning_trees`` succeeds; None for n = 1."""
    if G.n == 1:
        return None
    m = 0
    while pack_spanning_trees(G, m + 1) is not None:
        m += 1
    return m


@dataclass(frozen=True)
class LiftResult:
    pairs: tuple[tuple[int, int], ...]
    lifted: Multigraph
    remainder: Multigraph


def find_tree_preserving_lifts(G: Multigraph, z: int, m: int) -> LiftResult:
    """Search for at most d(z) - m lifts u-z-w (u != w) keeping m spanning trees on V - z.

    Candidates are tried by increasing number of lifts, then lexicographically.
    ``remainder`` is the lifted graph induced on the other vertices, relabelled in order.
    """
    G._check_vertex(z)
    if G.n < 2:
        raise ValueError("need at least two vertices")
    d = G.degree(z)
    if d > 2 * m:
        raise ValueError(f"d(z) = {d} exceeds 2m = {2 * m}")
    if not tree_packing_number(G).at_least(m):
        raise ValueError(f"graph does not contain {m} edge-disjoint spanning trees")
    others = [v for v in range(G.n) if v != z]
    options = [(u, w) for u, w in combinations(others, 2) if G.mult(z, u) and G.mult(z, w)]

    def lifted_with(chosen: Sequence[tuple[int, int]]) -> Optional[Multigraph]:
        H = G
        for u, w in chosen:
            try:
                H = lift_path(H, (u, z, w))
            except ValueError:
                return None
        return H

    for k in range(0, min(d - m, d // 2) + 1):
        for chosen in _multisets(options, k):
            H = lifted_with(chosen)
            if H is None:
                continue
            rest = H.induced(others)
            if tree_packing_number(rest).at_least(m):
                return LiftResult(tuple(chosen), H, rest)
    raise AssertionError("no tree-preserving lift found although the preconditions hold")


def _multisets(options: Sequence[tuple[int, int]], k: int) -> Iterator[tuple[tuple[int, int], ...]]:
    def rec(start: int, left: int, acc: list) -> Iterator[tuple[tuple[int, int], ...]]:
        if left == 0:
            yield tuple(acc)
            return
        for i in range(start, len(options)):
            acc.append(options[i])
            yield from rec(i, left - 1, acc)
            acc.pop()

    yield from rec(0, k, [])


# --- isomorphism ------------------------------------------------------------

@lru_cache(maxsize=None)
def _perms(n: int) -> list[tuple[int, ...]]:
    return list(permutations(range(n)))


def canonical_form(G: Multigraph) -> Multigraph:
    """The relabelling of G whose upper-triangle sequence is lexicographically least."""
    if G.n > CANON_N_MAX:
        raise ValueError(f"canonical forms limited to n <= {CANON_N_MAX}")
    return Multigraph(G.n, kernels.canonical_upper(G.n, list(G.upper), _perms(G.n)))


def canonical_code(G: Multigraph) -> bytes:
    """``bytes([n, *upper])`` of the canonical form; multiplicities above 255 are rejected."""
    H = canonical_form(G)
    if any(m > 255 for m in H.upper):
        raise ValueError("canonical codes support multiplicities up to 255")
    return bytes([H.n, *H.upper])


def graph_from_code(code: bytes) -> Multigraph:
    return Multigraph(code[0], tuple(code[1:]))


def is_isomorphic(G: Multigraph, H: Multigraph) -> bool:
    return G.n == H.n and canonical_code(G) == canonical_code(H)


# --- named families -----------------------------------------------------------

def aK2(a: int) -> Multigraph:
    return Multigraph(2, (a,))


def triangle(a: int, b: int, c: int) -> Multigraph:
    """T_{a,b,c}: multiplicities a on {0,1}, b on {1,2}, c on {0,2}."""
    return Multigraph.from_edges(3, [(0, 1, a), (1, 2, b), (0, 2, c)])


def W1() -> Multigraph:
    return Multigraph.from_edges(4, [(0, 1, 3), (0, 2, 3), (0, 3, 3), (1, 2, 1), (1, 3, 1), (2, 3, 1)])


def W2() -> Multigraph:
    return Multigraph.from_edges(4, [(0, 1, 3), (0, 2, 2), (0, 3, 2), (1, 2, 2), (1, 3, 2), (2, 3, 1)])


def build_family(kind: str, *args) -> Multigraph:
    """``build_family("aK2", 4)``, ``("T", a, b, c)``, ``("W1")``, ``("W2")``, ``("edges", n, triples)``."""
    if kind == "aK2":
        return aK2(*args)
    if kind == "T":
        return triangle(*args)
    if kind == "W1":
        return W1()
    if kind == "W2":
        return W2()
    if kind == "edges":
        return Multigraph.from_edges(*args)
    raise ValueError(f"unknown family {kind!r}")
