"""Z_2l boundaries, their integer lifts (gamma functions), and residue intervals."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Optional, Sequence

from szl.graph import Multigraph
from szl.kernels import residue_lifts

ELL_MAX = 64


def _check_ell(ell: int) -> None:
    if not 2 <= ell <= ELL_MAX:
        raise ValueError(f"ell must be in [2, {ELL_MAX}], got {ell}")


@dataclass(frozen=True)
class BoundarySpec:
    """Residues in {0, ..., 2l-1}, one per vertex."""

    ell: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_ell(self.ell)
        object.__setattr__(self, "values", tuple(int(b) for b in self.values))
        for b in self.values:
            if not 0 <= b < 2 * self.ell:
                raise ValueError(f"boundary value {b} outside [0, {2 * self.ell})")

    @property
    def modulus(self) -> int:
        return 2 * self.ell

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class BoundaryViolation:
    kind: str  # "parity" or "sum"
    vertex: Optional[int]
    detail: str


def validate_boundary(G: Multigraph, beta: BoundarySpec) -> list[BoundaryViolation]:
    """Every way ``beta`` fails to be a parity-compliant boundary of G; empty when valid."""
    if len(beta) != G.n:
        raise ValueError(f"boundary has {len(beta)} values for {G.n} vertices")
    out = []
    for v, (b, d) in enumerate(zip(beta.values, G.degrees)):
        if (b - d) % 2:
            out.append(BoundaryViolation("parity", v, f"beta({v}) = {b} but d({v}) = {d}"))
    total = sum(beta.values)
    if total % beta.modulus:
        out.append(BoundaryViolation("sum", None, f"sum {total} is not 0 mod {beta.modulus}"))
    return out


def is_boundary(G: Multigraph, beta: BoundarySpec) -> bool:
    return not validate_boundary(G, beta)


def enumerate_boundaries(G: Multigraph, ell: int) -> Iterator[BoundarySpec]:
    """Every boundary of G, lexicographically; there are l^(n-1) of them."""
    _check_ell(ell)
    M = 2 * ell
    degrees = G.degrees
    heads = product(*([r for r in range(M) if r % 2 == d % 2] for d in degrees[:-1]))
    for head in heads:
        yield BoundarySpec(ell, head + ((-sum(head)) % M,))


@dataclass(frozen=True)
class GammaFunction:
    values: tuple[int, ...]

    def satisfies_lemma(self, G: Multigraph, beta: BoundarySpec) -> bool:
        M = beta.modulus
        g = self.values
        return (
            len(g) == G.n
            and all((x - b) % M == 0 and (x - d) % 2 == 0 for x, b, d in zip(g, beta.values, G.degrees))
            and sum(g) == 0
            and max(g) - min(g) <= M
            and all(abs(x) < M for x in g)
        )


def corresponding_gamma(G: Multigraph, beta: BoundarySpec) -> GammaFunction:
    """Integer lift of ``beta`` with zero sum and spread at most 2l.

    Subtracts 2l from the t largest residues (t = sum / 2l, ties to the lower
    vertex). Falls back to trying every t-subset should that spread exceed 2l.
    """
    if validate_boundary(G, beta):
        raise ValueError("not a valid boundary of G")
    M = beta.modulus
    vals = beta.values
    t = sum(vals) // M
    order = sorted(range(G.n), key=lambda v: (-vals[v], v))

    def lift(chosen: Iterable[int]) -> GammaFunction:
        down = set(chosen)
        return GammaFunction(tuple(b - M if v in down else b for v, b in enumerate(vals)))

    gamma = lift(order[:t])
    if gamma.satisfies_lemma(G, beta):
        return gamma
    for chosen in combinations(range(G.n), t):
        gamma = lift(chosen)
        if gamma.satisfies_lemma(G, beta):
            return gamma
    raise AssertionError(f"no corresponding gamma-function for {beta}")


def gamma_candidates(G: Multigraph, beta: BoundarySpec) -> Iterator[tuple[int, ...]]:
    """Integer vectors g with g = beta (mod 2l), g = d (mod 2), |g(v)| <= d(v) and sum 0, lexicographically.

    Any orientation's imbalance vector is one of these, so trying each against
    Hakimi's condition decides whether a beta-orientation exists.
    """
    if len(beta) != G.n:
        raise ValueError(f"boundary has {len(beta)} values for {G.n} vertices")
    lifts = [residue_lifts(b, d, beta.modulus) for b, d in zip(beta.values, G.degrees)]
    if any(not opts for opts in lifts):
        return
    n = G.n
    lo = [0] * (n + 1)
    hi = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        lo[v] = lo[v + 1] + lifts[v][0]
        hi[v] = hi[v + 1] + lifts[v][-1]
    acc: list[int] = []

    def rec(v: int, total: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            if total == 0:
                yield tuple(acc)
            return
        for t in lifts[v]:
            rest = total + t
            if rest + lo[v + 1] > 0 or rest + hi[v + 1] < 0:
                continue
            acc.append(t)
            yield from rec(v + 1, rest)
            acc.pop()

    yield from rec(0, 0)


# --- residue sets -------------------------------------------------------------

@dataclass(frozen=True)
class ResidueSet:
    modulus: int
    members: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", frozenset(self.members))
        if any(not 0 <= x < self.modulus for x in self.members):
            raise ValueError(f"residues must lie in [0, {self.modulus})")

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: object) -> bool:
        return x in self.members

    def sorted(self) -> list[int]:
        return sorted(self.members)


def residue_interval(mu: int, ell: int) -> ResidueSet:
    """{t mod 2l : -mu <= t <= mu, t = mu (mod 2)}: the net flows a mu-fold edge can carry, mod 2l."""
    if mu < 0:
        raise ValueError("multiplicity must be nonnegative")
    _check_ell(ell)
    M = 2 * ell
    return ResidueSet(M, frozenset(t % M for t in range(-mu, mu + 1, 2)))


def shift(A: ResidueSet, c: int) -> ResidueSet:
    return ResidueSet(A.modulus, frozenset((a + c) % A.modulus for a in A.members))


def intersect(sets: Sequence[ResidueSet]) -> ResidueSet:
    if not sets:
        raise ValueError("need at least one set")
    moduli = {s.modulus for s in sets}
    if len(moduli) != 1:
        raise ValueError(f"modulus mismatch: {sorted(moduli)}")
    common = frozenset.intersection(*(s.members for s in sets))
    return ResidueSet(sets[0].modulus, common)
