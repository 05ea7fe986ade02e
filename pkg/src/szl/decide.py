"""Strong Z_l-connectivity: exhaustive decisions and the closed-form tests for up to four vertices."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from szl import kernels
from szl.boundary import BoundarySpec, _check_ell, enumerate_boundaries
from szl.graph import Multigraph, cut_degree, max_multiplicity
from szl.orient import SolveOutcome, find_beta_orientation

BOUNDARY_BUDGET = 10**6

# Verdict.trace vocabulary
TRACE_BRUTE_MEMBER = "brute-all-boundaries-oriented"
TRACE_BRUTE_FAILING = "brute-failing-boundaries"
TRACE_1V = "1v-trivial"
TRACE_2V_MEMBER = "2v-multiplicity-at-least-l-1"
TRACE_2V_SHORT = "2v-multiplicity-below-l-1"
TRACE_3V_MEMBER = "3v-edges-and-min-degree-ok"
TRACE_3V_EDGES = "3v-edges-below-2l-2"
TRACE_3V_DEGREE = "3v-min-degree-below-l-1"
TRACE_4V_DEGREE = "4v-min-degree-below-l-1"
TRACE_4V_EDGES = "4v-edges-below-3l-3"
TRACE_4V_COND1 = "4v-thm-condition(1)"
TRACE_4V_COND2 = "4v-thm-condition(2)"
TRACE_4V_COND3 = "4v-thm-condition(3)"
TRACE_4V_EXCEPTION = "4v-thm-conditions-violated"

TRACES = (
    TRACE_BRUTE_MEMBER,
    TRACE_BRUTE_FAILING,
    TRACE_1V,
    TRACE_2V_MEMBER,
    TRACE_2V_SHORT,
    TRACE_3V_MEMBER,
    TRACE_3V_EDGES,
    TRACE_3V_DEGREE,
    TRACE_4V_DEGREE,
    TRACE_4V_EDGES,
    TRACE_4V_COND1,
    TRACE_4V_COND2,
    TRACE_4V_COND3,
    TRACE_4V_EXCEPTION,
)


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Verdict:
    member: bool
    method: str  # "brute" or "fast"
    trace: str
    failing: tuple[tuple[BoundarySpec, SolveOutcome], ...] = ()
    # boundary -> orientation outcome; filled by decide_brute(..., certify=True)
    certificates: tuple[tuple[BoundarySpec, SolveOutcome], ...] = field(default=(), compare=False)
    # l = 2 lies outside the range the closed forms are proved for
    characterized: bool = True


def szl_simplify(G0: Multigraph, ell: int) -> Multigraph:
    """Cap every multiplicity at l - 1."""
    if ell < 3:
        raise ValueError("simplification is defined for l >= 3")
    return Multigraph(G0.n, tuple(min(m, ell - 1) for m in G0.upper))


def failing_boundaries(G: Multigraph, ell: int) -> list[BoundarySpec]:
    """Boundaries of G without a beta-orientation, lexicographically sorted."""
    _check_ell(ell)
    if ell ** (G.n - 1) > BOUNDARY_BUDGET:
        raise BudgetExceeded(f"{ell}^{G.n - 1} boundaries exceed the budget of {BOUNDARY_BUDGET}")
    raw = kernels.failing_boundaries(G.n, list(G.degrees), G.subset_cuts(), ell)
    return [BoundarySpec(ell, b) for b in raw]


def is_member_brute(G: Multigraph, ell: int) -> bool:
    return not failing_boundaries(G, ell)


def decide_brute(G: Multigraph, ell: int, certify: bool = False) -> Verdict:
    """Membership by checking every boundary.

    Failing boundaries always carry their per-gamma bad-set witnesses. With
    ``certify`` an orientation is also constructed for every other boundary.
    """
    failing = failing_boundaries(G, ell)
    records = tuple((beta, find_beta_orientation(G, beta)) for beta in failing)
    assert not any(out.feasible for _, out in records)
    certs: tuple[tuple[BoundarySpec, SolveOutcome], ...] = ()
    if certify:
        certs = tuple((beta, find_beta_orientation(G, beta)) for beta in enumerate_boundaries(G, ell))
        assert [b for b, out in certs if not out.feasible] == failing
    return Verdict(
        member=not failing,
        method="brute",
        trace=TRACE_BRUTE_FAILING if failing else TRACE_BRUTE_MEMBER,
        failing=records,
        certificates=certs,
        characterized=ell >= 3,
    )


def exception_conditions_4v(G: Multigraph, ell: int) -> tuple[bool, bool]:
    """(every 2-set has cut 2l - 2, every degree has the parity of l)."""
    if G.n != 4:
        raise ValueError(f"needs four vertices, got {G.n}")
    cond_cuts = all(cut_degree(G, (0, v)) == 2 * ell - 2 for v in (1, 2, 3))
    cond_parity = all((d - ell) % 2 == 0 for d in G.degrees)
    return cond_cuts, cond_parity


def decide_fast(G0: Multigraph, ell: int) -> Verdict:
    """Closed-form membership for at most four vertices and l >= 3."""
    if ell < 3:
        raise ValueError("the closed forms need l >= 3")
    _check_ell(ell)
    n = G0.n
    if n > 4:
        raise ValueError(f"no closed form for {n} vertices; use decide_brute")

    def verdict(member: bool, trace: str) -> Verdict:
        return Verdict(member, "fast", trace)

    if n == 1:
        return verdict(True, TRACE_1V)
    if n == 2:
        ok = G0.upper[0] >= ell - 1
        return verdict(ok, TRACE_2V_MEMBER if ok else TRACE_2V_SHORT)
    if n == 3:
        if G0.num_edges < 2 * ell - 2:
            return verdict(False, TRACE_3V_EDGES)
        if G0.min_degree < ell - 1:
            return verdict(False, TRACE_3V_DEGREE)
        return verdict(True, TRACE_3V_MEMBER)
    G = szl_simplify(G0, ell)
    if G.min_degree < ell - 1:
        return verdict(False, TRACE_4V_DEGREE)
    if G.num_edges < 3 * ell - 3:
        return verdict(False, TRACE_4V_EDGES)
    if max_multiplicity(G) == ell - 1 or G.num_edges >= 3 * ell - 2:
        return verdict(True, TRACE_4V_COND1)
    cond_cuts, cond_parity = exception_conditions_4v(G, ell)
    if not cond_cuts:
        return verdict(True, TRACE_4V_COND2)
    if not cond_parity:
        return verdict(True, TRACE_4V_COND3)
    return verdict(False, TRACE_4V_EXCEPTION)


def decide(G: Multigraph, ell: int, method: Optional[str] = None) -> Verdict:
    """``method`` is "fast", "brute", or None for fast where it applies and brute otherwise."""
    if method == "fast":
        return decide_fast(G, ell)
    if method == "brute" or ell < 3 or G.n > 4:
        return decide_brute(G, ell)
    return decide_fast(G, ell)
