"""Orientations with prescribed out-minus-in degrees.

An orientation stores, for each pair u < v, how many of its parallel edges
point from u to v. Parallel edges are interchangeable, so this is a complete
description for everything computed here.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import prod
from typing import Iterator, Optional, Sequence

from szl import kernels
from szl.boundary import (
    BoundarySpec,
    gamma_candidates,
    intersect,
    residue_interval,
    shift,
)
from szl.graph import Multigraph

BRUTE_SPACE_MAX = 10**7


@dataclass(frozen=True)
class Orientation:
    n: int
    forward: tuple[int, ...]

    @classmethod
    def all_forward(cls, G: Multigraph) -> "Orientation":
        return cls(G.n, G.upper)

    def check(self, G: Multigraph) -> None:
        if self.n != G.n or len(self.forward) != len(G.upper):
            raise ValueError("orientation does not match the graph shape")
        for (u, v), f, m in zip(G.pairs(), self.forward, G.upper):
            if not 0 <= f <= m:
                raise ValueError(f"forward count {f} on ({u}, {v}) outside [0, {m}]")


def imbalances(G: Multigraph, D: Orientation) -> tuple[int, ...]:
    """d+(v) - d-(v) for every vertex."""
    D.check(G)
    out = [0] * G.n
    for (u, v), f, m in zip(G.pairs(), D.forward, G.upper):
        net = 2 * f - m
        out[u] += net
        out[v] -= net
    return tuple(out)


def imbalance(G: Multigraph, D: Orientation, v: int) -> int:
    return imbalances(G, D)[v]


def verify_beta_orientation(G: Multigraph, beta: BoundarySpec, D: Orientation) -> bool:
    if len(beta) != G.n:
        raise ValueError("boundary size does not match the graph")
    M = beta.modulus
    return all((x - b) % M == 0 for x, b in zip(imbalances(G, D), beta.values))


# --- Hakimi's condition --------------------------------------------------------

@dataclass(frozen=True)
class BadSetWitness:
    """A set S with |sum of gamma over S| > d(S)."""

    subset: tuple[int, ...]
    gamma_sum: int
    cut: int
    gamma: tuple[int, ...] = ()


@lru_cache(maxsize=None)
def lex_subsets(n: int) -> tuple[tuple[int, ...], ...]:
    """Subsets of range(n) as sorted tuples in lexicographic order, empty set first."""
    out: list[tuple[int, ...]] = []

    def rec(start: int, acc: list[int]) -> None:
        out.append(tuple(acc))
        for v in range(start, n):
            acc.append(v)
            rec(v + 1, acc)
            acc.pop()

    rec(0, [])
    return tuple(out)


def hakimi_check(G: Multigraph, gamma: Sequence[int]) -> Optional[BadSetWitness]:
    """First bad set in lexicographic order, or None when every subset satisfies the cut bound."""
    gamma = tuple(gamma)
    if len(gamma) != G.n:
        raise ValueError("gamma size does not match the graph")
    if sum(gamma) != 0:
        raise ValueError(f"gamma must sum to 0, got {sum(gamma)}")
    for v, (g, d) in enumerate(zip(gamma, G.degrees)):
        if (g - d) % 2:
            raise ValueError(f"gamma({v}) = {g} has the wrong parity for d({v}) = {d}")
    cuts = G.subset_cuts()
    for S in lex_subsets(G.n):
        s = sum(gamma[v] for v in S)
        mask = sum(1 << v for v in S)
        if abs(s) > cuts[mask]:
            return BadSetWitness(S, s, cuts[mask], gamma)
    return None


def _arc_exists(G: Multigraph, fwd: list[int], k: int, tail_is_low: bool) -> bool:
    return fwd[k] > 0 if tail_is_low else fwd[k] < G.upper[k]


def construct_orientation(G: Multigraph, gamma: Sequence[int]) -> Orientation:
    """An orientation whose out-minus-in degree is exactly ``gamma``.

    Starts from every edge pointing low to high and reverses directed paths from
    surplus to deficit vertices, found by BFS in vertex order.
    """
    gamma = tuple(gamma)
    bad = hakimi_check(G, gamma)
    if bad is not None:
        raise ValueError(f"gamma violates the cut bound on {bad.subset}")
    n = G.n
    pairs = G.pairs()
    index = {p: k for k, p in enumerate(pairs)}
    fwd = list(G.upper)
    cur = list(imbalances(G, Orientation(n, tuple(fwd))))
    surplus = [(c - g) // 2 for c, g in zip(cur, gamma)]
    while any(surplus):
        src = next(v for v in range(n) if surplus[v] > 0)
        prev: dict[int, int] = {src: -1}
        queue = deque([src])
        dst = -1
        while queue:
            u = queue.popleft()
            if surplus[u] < 0:
                dst = u
                break
            for w in range(n):
                if w == u or w in prev:
                    continue
                k = index[(min(u, w), max(u, w))]
                if _arc_exists(G, fwd, k, u < w):
                    prev[w] = u
                    queue.append(w)
        assert dst >= 0, "no reversal path although Hakimi's condition holds"
        w = dst
        while prev[w] != -1:
            u = prev[w]
            k = index[(min(u, w), max(u, w))]
            fwd[k] += -1 if u < w else 1
            w = u
        surplus[src] -= 1
        surplus[dst] += 1
    D = Orientation(n, tuple(fwd))
    assert imbalances(G, D) == gamma
    return D


# --- beta-orientations --------------------------------------------------------

@dataclass(frozen=True)
class SolveOutcome:
    """Either an orientation (with the exact imbalance vector used) or the infeasibility record.

    ``witnesses`` holds one bad set per gamma candidate tried; it is empty when no
    candidate exists at all or when the solver does not produce bad sets.
    """

    orientation: Optional[Orientation]
    gamma: Optional[tuple[int, ...]] = None
    witnesses: tuple[BadSetWitness, ...] = field(default=())
    method: str = "hakimi"

    @property
    def feasible(self) -> bool:
        return self.orientation is not None


def find_beta_orientation(G: Multigraph, beta: BoundarySpec) -> SolveOutcome:
    witnesses = []
    for gamma in gamma_candidates(G, beta):
        bad = hakimi_check(G, gamma)
        if bad is None:
            return SolveOutcome(construct_orientation(G, gamma), gamma)
        witnesses.append(bad)
    return SolveOutcome(None, None, tuple(witnesses))


def _forward_tables(G: Multigraph) -> Iterator[tuple[int, ...]]:
    return product(*(range(m + 1) for m in G.upper))


def brute_force_beta_orientation(G: Multigraph, beta: BoundarySpec) -> SolveOutcome:
    """First forward-count table (lexicographic) that is a beta-orientation."""
    if len(beta) != G.n:
        raise ValueError("boundary size does not match the graph")
    if prod(m + 1 for m in G.upper) > BRUTE_SPACE_MAX:
        raise ValueError(f"search space exceeds {BRUTE_SPACE_MAX} orientations")
    for fwd in _forward_tables(G):
        D = Orientation(G.n, fwd)
        if verify_beta_orientation(G, beta, D):
            return SolveOutcome(D, imbalances(G, D), method="brute")
    return SolveOutcome(None, method="brute")


def achievable_imbalances(G: Multigraph) -> set[tuple[int, ...]]:
    """Exact imbalance vectors over all orientations, by exhaustive enumeration."""
    if prod(m + 1 for m in G.upper) > BRUTE_SPACE_MAX:
        raise ValueError(f"search space exceeds {BRUTE_SPACE_MAX} orientations")
    return kernels.achievable_imbalances(G.n, list(G.upper))


def solve_three_vertex(G: Multigraph, beta: BoundarySpec) -> SolveOutcome:
    """Residue-interval solver for three vertices.

    With mu_i the multiplicity of {v_i, v_i+1} and x_i the net flow from v_i to
    v_i+1 mod 2l, a beta-orientation is a choice x_i in I_i with
    x_i - x_(i-1) = beta_i. That reduces to picking x_0 from
    I_0, I_1 - beta_1 and I_2 + beta_0 simultaneously.
    """
    if G.n != 3:
        raise ValueError(f"three-vertex solver called with n = {G.n}")
    if len(beta) != 3:
        raise ValueError("boundary size does not match the graph")
    ell, M = beta.ell, beta.modulus
    b = beta.values
    mu = (G.mult(0, 1), G.mult(1, 2), G.mult(2, 0))
    I = [residue_interval(m, ell) for m in mu]
    common = intersect([I[0], shift(I[1], -b[1]), shift(I[2], b[0])])
    if not common.members:
        return SolveOutcome(None, method="three-vertex")
    x0 = min(common.members)
    xs = (x0, (x0 + b[1]) % M, (x0 - b[0]) % M)
    nets = []
    for m, x in zip(mu, xs):
        reps = [t for t in range(-m, m + 1, 2) if (t - x) % M == 0]
        nets.append(min(reps, key=lambda t: (abs(t), t)))
    y = [(m + t) // 2 for m, t in zip(mu, nets)]  # edges oriented v_i -> v_(i+1)
    fwd = {(0, 1): y[0], (1, 2): y[1], (0, 2): mu[2] - y[2]}
    D = Orientation(3, tuple(fwd[p] for p in G.pairs()))
    if not verify_beta_orientation(G, beta, D):
        # only reachable for inputs that are not parity-compliant boundaries
        return SolveOutcome(None, method="three-vertex")
    return SolveOutcome(D, imbalances(G, D), method="three-vertex")
