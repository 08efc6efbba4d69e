"""Cospectrality profiles and pairwise comparison of walk-support invariants.

A profile holds the exact characteristic polynomials of A, S+(U), S+(U^2)
and S+(U^3).  Cospectrality is decided by exact integer coefficient
equality, never by comparing floating-point root multisets: the entire value
of the invariant is exactness.

A cospectral verdict on all four invariants proves nothing about
isomorphism; reports say "cospectral", not "isomorphic".
"""

from __future__ import annotations

import csv
import io
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .arcspace import build_arc_space
from .errors import HypothesisError, ValencyError
from .graphs import Graph, is_connected, is_regular
from .intmat import char_poly
from .polynomials import CharPoly
from .supports import adjacency_charpoly, build_support_set

log = logging.getLogger(__name__)

INVARIANT_ORDER = ("a", "s1", "s2", "s3")


@dataclass(frozen=True)
class InvariantProfile:
    graph_id: str
    n: int
    k: int
    charpoly_a: CharPoly
    charpoly_s1: CharPoly
    charpoly_s2: CharPoly
    charpoly_s3: CharPoly

    def charpoly(self, which: str) -> CharPoly:
        return getattr(self, f"charpoly_{which}" if which != "a" else "charpoly_a")

    def to_json(self) -> dict:
        return {
            "id": self.graph_id,
            "n": self.n,
            "k": self.k,
            "charpoly_a": self.charpoly_a.to_json_list(),
            "charpoly_s1": self.charpoly_s1.to_json_list(),
            "charpoly_s2": self.charpoly_s2.to_json_list(),
            "charpoly_s3": self.charpoly_s3.to_json_list(),
        }


@dataclass(frozen=True)
class CompareReport:
    pair: Tuple[str, str]
    verdicts: dict  # invariant -> "cospectral" | "distinguished"
    distinguishing_invariant: Optional[str]

    def to_json(self) -> dict:
        return {
            "ids": list(self.pair),
            "verdicts": dict(self.verdicts),
            "distinguishing_invariant": self.distinguishing_invariant,
        }


@dataclass(frozen=True)
class BatchResult:
    pairs: List[CompareReport]
    skipped: List[Tuple[str, str]]  # (graph id, reason)

    def to_json(self) -> dict:
        return {
            "pairs": [r.to_json() for r in self.pairs],
            "skipped": [{"id": i, "reason": r} for (i, r) in self.skipped],
        }


def profile(g: Graph, graph_id: str) -> InvariantProfile:
    """All four exact char polys of a connected regular graph with k >= 2."""
    k = is_regular(g)
    if k is None:
        raise HypothesisError(f"{graph_id}: graph is not regular")
    if k < 2:
        raise HypothesisError(f"{graph_id}: valency k >= 2 required, got k={k}")
    if not is_connected(g):
        raise HypothesisError(f"{graph_id}: graph is not connected")
    supports = build_support_set(build_arc_space(g))
    log.debug("profiling %s (n=%d, k=%d)", graph_id, g.n, k)
    return InvariantProfile(
        graph_id=graph_id,
        n=g.n,
        k=k,
        charpoly_a=adjacency_charpoly(g),
        charpoly_s1=char_poly(supports.s1),
        charpoly_s2=char_poly(supports.s2),
        charpoly_s3=char_poly(supports.s3),
    )


def compare(p: InvariantProfile, q: InvariantProfile) -> CompareReport:
    """Per-invariant exact cospectrality verdicts, in the order A, S1, S2, S3."""
    verdicts = {}
    distinguishing = None
    for which in INVARIANT_ORDER:
        same = p.charpoly(which).coeffs == q.charpoly(which).coeffs
        verdicts[which] = "cospectral" if same else "distinguished"
        if not same and distinguishing is None:
            distinguishing = which
    return CompareReport((p.graph_id, q.graph_id), verdicts, distinguishing)


def batch_compare(
    corpus: Sequence[Tuple[str, Graph]],
    include_cross_class: bool = False,
    threads: Optional[int] = None,
) -> BatchResult:
    """Compare all corpus pairs sharing (n, k).

    Graphs violating the profile hypotheses are skipped with a diagnostic.
    Pairs with different (n, k) are trivially distinguished and omitted
    unless include_cross_class is set.  Output order is deterministic:
    lexicographic by id pair.
    """
    profiles: List[InvariantProfile] = []
    skipped: List[Tuple[str, str]] = []

    def build(item):
        gid, g = item
        try:
            return profile(g, gid)
        except (HypothesisError, ValencyError) as e:
            return (gid, str(e))

    if threads is not None and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(build, corpus))
    else:
        results = [build(item) for item in corpus]
    for r in results:
        if isinstance(r, InvariantProfile):
            profiles.append(r)
        else:
            skipped.append(r)

    reports = []
    for i in range(len(profiles)):
        for j in range(i + 1, len(profiles)):
            p, q = profiles[i], profiles[j]
            if not include_cross_class and (p.n, p.k) != (q.n, q.k):
                continue
            if p.graph_id > q.graph_id:
                p, q = q, p
            reports.append(compare(p, q))
    reports.sort(key=lambda r: r.pair)
    return BatchResult(reports, skipped)


def batch_to_json(result: BatchResult) -> str:
    return json.dumps(result.to_json(), indent=2)


def batch_to_csv(result: BatchResult) -> str:
    """One row per compared pair."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["id1", "id2", "a", "s1", "s2", "s3", "distinguishing_invariant"]
    )
    for r in result.pairs:
        writer.writerow(
            [r.pair[0], r.pair[1]]
            + [r.verdicts[w] for w in INVARIANT_ORDER]
            + [r.distinguishing_invariant or ""]
        )
    return buf.getvalue()
