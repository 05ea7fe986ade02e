"""Pure-Python hot loops.

This module is the fallback for ``szl._ckernels`` and the reference for its
behavior: both must return identical values for identical inputs.
"""
from __future__ import annotations

from itertools import product

BACKEND = "python"


def residue_lifts(residue: int, degree: int, modulus: int) -> list[int]:
    """Integers t with t = residue (mod modulus), |t| <= degree and t = degree (mod 2), ascending."""
    if (residue - degree) % 2:
        return []
    t = -degree + (residue + degree) % modulus
    out = []
    while t <= degree:
        out.append(t)
        t += modulus
    return out


def _lowbits(n: int) -> list[int]:
    return [0] + [(m & -m).bit_length() - 1 for m in range(1, 1 << n)]


def _has_feasible_gamma(n, degrees, cuts, modulus, beta, lowbit) -> bool:
    lifts = [residue_lifts(beta[v], degrees[v], modulus) for v in range(n)]
    if any(not opts for opts in lifts):
        return False
    # reachable sum range of the suffix starting at vertex v
    lo = [0] * (n + 1)
    hi = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        lo[v] = lo[v + 1] + lifts[v][0]
        hi[v] = hi[v + 1] + lifts[v][-1]
    gamma = [0] * n
    full = 1 << n
    sums = [0] * full

    def leaf() -> bool:
        for m in range(1, full):
            s = sums[m & (m - 1)] + gamma[lowbit[m]]
            sums[m] = s
            if s > cuts[m] or -s > cuts[m]:
                return False
        return True

    def walk(v: int, acc: int) -> bool:
        if v == n:
            return acc == 0 and leaf()
        for t in lifts[v]:
            rest = acc + t
            if rest + lo[v + 1] > 0 or rest + hi[v + 1] < 0:
                continue
            gamma[v] = t
            if walk(v + 1, rest):
                return True
        return False

    return walk(0, 0)


def failing_boundaries(n: int, degrees: list[int], cuts: list[int], ell: int) -> list[tuple[int, ...]]:
    """All parity-compliant Z_2l boundaries (lexicographic) for which no gamma lift passes Hakimi.

    ``cuts[mask]`` is the cut degree of the vertex set encoded by ``mask``.
    """
    modulus = 2 * ell
    lowbit = _lowbits(n)
    choices = [[r for r in range(modulus) if r % 2 == d % 2] for d in degrees[:-1]]
    out = []
    for head in product(*choices):
        beta = head + ((-sum(head)) % modulus,)
        if not _has_feasible_gamma(n, degrees, cuts, modulus, beta, lowbit):
            out.append(beta)
    return out


def achievable_imbalances(n: int, upper: list[int]) -> set[tuple[int, ...]]:
    """Out-minus-in vectors of every orientation, by enumerating all forward-count tables."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    out = set()
    for forward in product(*(range(m + 1) for m in upper)):
        imb = [0] * n
        for (u, v), m, f in zip(pairs, upper, forward):
            net = 2 * f - m
            imb[u] += net
            imb[v] -= net
        out.add(tuple(imb))
    return out


def canonical_upper(n: int, upper: list[int], perms: list[tuple[int, ...]]) -> tuple[int, ...]:
    """Lexicographically least upper-triangle sequence over the given vertex permutations."""
    table = [[0] * n for _ in range(n)]
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            table[u][v] = table[v][u] = upper[k]
            k += 1
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    best = None
    for s in perms:
        cand = tuple(table[s[i]][s[j]] for i, j in pairs)
        if best is None or cand < best:
            best = cand
    return best if best is not None else ()
