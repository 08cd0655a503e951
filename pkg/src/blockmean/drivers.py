"""High-level verification drivers shared by the CLI, demos, and tests.

These wire the generators to the lemma verifiers: sweep every statement
over all generated block graphs up to a cap, sample seeded instances of
the three attachment families, and compare the sub-k-tree formula with its
brute-force oracle on trees and random k-trees.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .blocks import block_cut_tree
from .certs import canonical_cert
from .cis import mean
from .graphs import Graph
from .ktree import KTree, mean_sub_k_tree, random_k_tree, sub_k_tree_mean_brute
from .lemmas import FamilyChain, Verdict, sweep_graph, \
    clique_stretching_family, edge_gluing_family, vertex_gluing_family
from .search import block_graph_classes, random_connected_block_graph


def sweep_block_graphs(max_n: int, statements=None, cache_dir: Optional[str] = None,
                       workers: int = 1) -> list[tuple[str, Verdict]]:
    """All requested verdicts over every connected block graph of order
    1..max_n, tagged with the graph's certificate hex."""
    out: list[tuple[str, Verdict]] = []
    for n in range(1, max_n + 1):
        for g in block_graph_classes(n, cache_dir, workers):
            cert = canonical_cert(g).hex()
            for verdict in sweep_graph(g, statements):
                out.append((cert, verdict))
    return out


def summarize_verdicts(rows: list[tuple[str, Verdict]]) -> dict[str, dict[str, int]]:
    """Per-statement counts of total/applicable/failed/equality verdicts."""
    summary: dict[str, dict[str, int]] = {}
    for _, v in rows:
        s = summary.setdefault(v.statement,
                               {"total": 0, "applicable": 0, "failed": 0, "equality": 0})
        s["total"] += 1
        if v.applicable:
            s["applicable"] += 1
            if not v.holds:
                s["failed"] += 1
            if v.equality:
                s["equality"] += 1
    return summary


FAMILY_KINDS = ("vertex", "edge", "stretch")


def _eligible_noncut_pairs(h: Graph) -> list[tuple[int, int]]:
    cut = block_cut_tree(h).cut_vertices
    return [(u, v) for u, v in h.edges() if u not in cut and v not in cut]


def sample_family_chain(kind: str, rng: random.Random, max_h: int = 8,
                        max_n: int = 12) -> FamilyChain:
    """One seeded random instance of an attachment family check."""
    if kind == "vertex":
        h = random_connected_block_graph(rng.randint(2, max_h), rng)
        return vertex_gluing_family(h, rng.randrange(h.n), rng.randint(3, max_n))
    if kind == "stretch":
        h = random_connected_block_graph(rng.randint(2, max_h), rng)
        return clique_stretching_family(h, rng.randrange(h.n), rng.randint(3, max_n))
    if kind == "edge":
        while True:
            h = random_connected_block_graph(rng.randint(3, max_h), rng)
            pairs = _eligible_noncut_pairs(h)
            if pairs:
                u, v = pairs[rng.randrange(len(pairs))]
                return edge_gluing_family(h, u, v, rng.randint(4, max_n))
    raise ValueError("unknown family kind %r" % kind)


def run_family_checks(kind: str, count: int, max_h: int = 8, max_n: int = 12,
                      seed: int = 0) -> list[FamilyChain]:
    """``count`` seeded instances of one family kind."""
    rng = random.Random(seed)
    return [sample_family_chain(kind, rng, max_h, max_n) for _ in range(count)]


# -- k-tree bridge ------------------------------------------------------------


@dataclass(frozen=True)
class KTreeCheck:
    """Formula-versus-oracle comparison for one k-tree."""

    kind: str
    k: int
    n: int
    formula: Fraction
    oracle: Fraction

    @property
    def agree(self) -> bool:
        return self.formula == self.oracle

    def to_json(self) -> dict:
        return {
            "kind": self.kind, "k": self.k, "n": self.n,
            "formula": {"num": str(self.formula.numerator),
                        "den": str(self.formula.denominator)},
            "oracle": {"num": str(self.oracle.numerator),
                       "den": str(self.oracle.denominator)},
            "agree": self.agree,
        }


def tree_bridge_checks(max_n: int, cache_dir: Optional[str] = None,
                       workers: int = 1) -> list[KTreeCheck]:
    """For every tree of order 2..max_n: the sub-1-tree mean from the dual
    formula must equal both the direct subtree enumeration and the tree's
    mean CIS order."""
    out = []
    for n in range(2, max_n + 1):
        for g in block_graph_classes(n, cache_dir, workers):
            bct = block_cut_tree(g)
            if any(len(b) != 2 for b in bct.blocks):
                continue
            t = KTree(g, 1)
            formula = mean_sub_k_tree(t)
            oracle = sub_k_tree_mean_brute(t)
            if oracle != mean(g).M:
                # Subtrees of a tree are exactly its connected induced
                # subgraphs; a mismatch here is an oracle bug.
                oracle = Fraction(-1)
            out.append(KTreeCheck("tree", 1, n, formula, oracle))
    return out


def sampled_ktree_checks(count: int, ks=(2, 3), max_n: int = 10,
                         seed: int = 0) -> list[KTreeCheck]:
    """Seeded random k-trees compared formula-versus-oracle."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        k = ks[rng.randrange(len(ks))]
        n = rng.randint(k + 1, max_n)
        t = random_k_tree(k, n, rng)
        out.append(KTreeCheck("random", k, n, mean_sub_k_tree(t),
                              sub_k_tree_mean_brute(t)))
    return out
