"""Exhaustive small-graph families and the closed-form vs brute-force comparison harness."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from szl.decide import decide_brute, decide_fast
from szl.graph import CANON_N_MAX, Multigraph, canonical_code, canonical_form, pair_list

CACHE_HEADER = "szlcache 1"
REPORT_HEADER = "szlreport 1"
FAMILY_N_MAX = 6


@dataclass(frozen=True)
class FamilySpec:
    n: int
    e_min: int
    e_max: int
    mu_max: int
    delta_min: int = 0
    up_to_iso: bool = True

    def __post_init__(self) -> None:
        if not 1 <= self.n <= FAMILY_N_MAX:
            raise ValueError(f"families are limited to 1 <= n <= {FAMILY_N_MAX}")
        if self.up_to_iso and self.n > CANON_N_MAX:
            raise ValueError(f"isomorphism reduction needs n <= {CANON_N_MAX}")
        if self.e_min > self.e_max or self.e_min < 0 or self.mu_max < 0:
            raise ValueError("empty or negative ranges")

    def describe(self) -> str:
        e = f"{self.e_min}" if self.e_min == self.e_max else f"{self.e_min}..{self.e_max}"
        iso = ",up-to-iso" if self.up_to_iso else ""
        return f"n={self.n},e={e},mu<={self.mu_max},delta>={self.delta_min}{iso}"

    def admits(self, G: Multigraph) -> bool:
        return (
            G.n == self.n
            and self.e_min <= G.num_edges <= self.e_max
            and max(G.upper, default=0) <= self.mu_max
            and (G.n == 1 and self.delta_min <= 0 or G.n > 1 and G.min_degree >= self.delta_min)
        )


_FAMILY_TERM = re.compile(r"^(n|e|mu|delta)(=|<=|>=)(\d+)(?:\.\.(\d+))?$")


def parse_family(text: str, up_to_iso: bool = True) -> FamilySpec:
    """Parse ``"n=4,e=12,mu<=3,delta>=4"``; ``e`` also takes ``a..b``, ``<=b`` or ``>=a``."""
    fields: dict = {"delta_min": 0}
    e_min, e_max = 0, None
    for raw in text.split(","):
        term = raw.strip()
        if term in ("up-to-iso", "iso"):
            up_to_iso = True
            continue
        m = _FAMILY_TERM.match(term)
        if not m:
            raise ValueError(f"bad family term {term!r}")
        key, op, a, b = m.group(1), m.group(2), int(m.group(3)), m.group(4)
        if b is not None and (key != "e" or op != "="):
            raise ValueError(f"range only allowed as e=a..b, got {term!r}")
        if key == "n" and op == "=":
            fields["n"] = a
        elif key == "e" and op == "=":
            e_min, e_max = a, int(b) if b is not None else a
        elif key == "e" and op == "<=":
            e_max = a
        elif key == "e" and op == ">=":
            e_min = a
        elif key == "mu" and op == "<=":
            fields["mu_max"] = a
        elif key == "delta" and op == ">=":
            fields["delta_min"] = a
        else:
            raise ValueError(f"unsupported constraint {term!r}")
    if "n" not in fields:
        raise ValueError("family needs n=")
    if e_max is None:
        raise ValueError("family needs an upper bound on e")
    fields.setdefault("mu_max", e_max)
    return FamilySpec(e_min=e_min, e_max=e_max, up_to_iso=up_to_iso, **fields)


def _tables(spec: FamilySpec) -> Iterator[tuple[int, ...]]:
    pairs = pair_list(spec.n)
    p = len(pairs)
    # index of the last pair touching each vertex; its degree is final afterwards
    closes: list[list[int]] = [[] for _ in range(p)]
    last = {}
    for k, (u, v) in enumerate(pairs):
        last[u] = k
        last[v] = k
    for v, k in last.items():
        closes[k].append(v)
    deg = [0] * spec.n
    acc = [0] * p
    cap = min(spec.mu_max, spec.e_max)

    def rec(k: int, total: int) -> Iterator[tuple[int, ...]]:
        if k == p:
            if total >= spec.e_min:
                yield tuple(acc)
            return
        # remaining pairs can add at most this many edges
        room = (p - k - 1) * cap
        u, v = pairs[k]
        for m in range(0, min(cap, spec.e_max - total) + 1):
            if total + m + room < spec.e_min:
                continue
            acc[k] = m
            deg[u] += m
            deg[v] += m
            if all(deg[w] >= spec.delta_min for w in closes[k]):
                yield from rec(k + 1, total + m)
            deg[u] -= m
            deg[v] -= m
        acc[k] = 0

    if p == 0:
        if spec.e_min == 0 and spec.delta_min <= 0:
            yield ()
        return
    yield from rec(0, 0)


def enumerate_graphs(spec: FamilySpec) -> Iterator[Multigraph]:
    """Every graph in the family; with ``up_to_iso`` one canonical representative per class, ordered by code."""
    if not spec.up_to_iso:
        for upper in _tables(spec):
            yield Multigraph(spec.n, upper)
        return
    seen: dict[bytes, Multigraph] = {}
    for upper in _tables(spec):
        G = Multigraph(spec.n, upper)
        H = canonical_form(G)
        code = bytes([H.n, *H.upper])
        seen.setdefault(code, H)
    for code in sorted(seen):
        yield seen[code]


# --- reports and cache --------------------------------------------------------

@dataclass(frozen=True)
class CacheEntry:
    code: bytes
    ell: int
    member: bool
    trace: str


@dataclass
class VerificationReport:
    ell: int
    family: FamilySpec
    graphs_checked: int = 0
    mismatches: list[tuple[bytes, bool, bool]] = field(default_factory=list)
    non_members: list[bytes] = field(default_factory=list)
    entries: list[CacheEntry] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_characterization(ell: int, spec: FamilySpec) -> VerificationReport:
    """Run the closed form and the exhaustive decision on every graph of the family."""
    report = VerificationReport(ell, spec)
    for G in enumerate_graphs(spec):
        code = canonical_code(G)
        fast = decide_fast(G, ell)
        brute = decide_brute(G, ell)
        report.graphs_checked += 1
        if fast.member != brute.member:
            report.mismatches.append((code, fast.member, brute.member))
        if not brute.member:
            report.non_members.append(code)
        report.entries.append(CacheEntry(code, ell, brute.member, fast.trace))
    report.mismatches.sort()
    report.non_members.sort()
    report.entries.sort(key=lambda c: (c.code, c.ell))
    return report


def _word(member: bool) -> str:
    return "member" if member else "nonmember"


def format_report(report: VerificationReport) -> str:
    lines = [
        REPORT_HEADER,
        f"ell {report.ell}",
        f"family {report.family.describe()}",
        f"graphs-checked {report.graphs_checked}",
        f"mismatches {len(report.mismatches)}",
    ]
    for code, fast, brute in report.mismatches:
        lines.append(f"mismatch {code.hex()} fast={_word(fast)} brute={_word(brute)}")
    lines.append(f"non-members {len(report.non_members)}")
    for code in report.non_members:
        lines.append(f"non-member {code.hex()}")
    return "\n".join(lines) + "\n"


class CacheFormatError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def format_cache(entries: Iterable[CacheEntry]) -> str:
    lines = [CACHE_HEADER]
    for c in entries:
        lines.append(f"{c.code.hex()}\t{c.ell}\t{_word(c.member)}\t{c.trace}")
    return "\n".join(lines) + "\n"


def parse_cache(text: str) -> list[CacheEntry]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != CACHE_HEADER:
        raise CacheFormatError(1, f"expected header {CACHE_HEADER!r}")
    out = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split("\t")
        if len(parts) != 4:
            raise CacheFormatError(lineno, f"expected 4 tab-separated fields, got {len(parts)}")
        hexcode, ell, word, trace = parts
        if not re.fullmatch(r"(?:[0-9a-f]{2})+", hexcode):
            raise CacheFormatError(lineno, f"bad code {hexcode!r}")
        if not re.fullmatch(r"\d+", ell):
            raise CacheFormatError(lineno, f"bad ell {ell!r}")
        if word not in ("member", "nonmember"):
            raise CacheFormatError(lineno, f"bad verdict {word!r}")
        if not trace or any(ch.isspace() for ch in trace):
            raise CacheFormatError(lineno, f"bad trace {trace!r}")
        out.append(CacheEntry(bytes.fromhex(hexcode), int(ell), word == "member", trace))
    return out


def cache_store(path: str | Path, entries: Iterable[CacheEntry]) -> None:
    Path(path).write_bytes(format_cache(entries).encode("utf-8"))


def cache_load(path: str | Path) -> list[CacheEntry]:
    return parse_cache(Path(path).read_bytes().decode("utf-8"))

