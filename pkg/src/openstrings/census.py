"""Exhaustive census of small Gauss diagrams.

Every diagram with at most ``max_arrows`` arrows is a node; every deletion or
slide joins two nodes (insertions inside the bound are the reverse edges).
Classes come from ``depth`` rounds of min-label propagation along those
edges, so two diagrams share a class only if a chain of moves joins them;
the classes are an upper bound on the number of homotopy classes among the
enumerated diagrams. ``converged`` says whether another round would merge
anything.
"""
from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field

from .gauss import GaussDiagram, all_diagrams, apply_move, enumerate_moves, format_diagram
from .invariant import (
    StringInvariant,
    compose,
    phi,
    ribbon_obstruction_abelian,
    ribbon_obstruction_full,
)


@dataclass(frozen=True)
class CensusConfig:
    max_arrows: int = 3
    depth: int = 8
    commute: bool = True


@dataclass
class CensusReport:
    config: CensusConfig
    diagrams_by_arrows: dict[int, int] = field(default_factory=dict)
    move_classes: int = 0
    converged: bool = False
    phi_classes: int = 0
    # move classes that hold two different words; must stay empty
    split_classes: list[str] = field(default_factory=list)
    commuting_pairs: int = 0
    pairs_tested: int = 0
    abelian_fail: int = 0
    full_fail: int = 0
    full_only: int = 0
    abelian_only: int = 0

    @property
    def ok(self) -> bool:
        # abelian failure forces full failure, so abelian_only must be zero
        return not self.split_classes and self.abelian_only == 0

    def to_json(self) -> dict:
        return {
            "max_arrows": self.config.max_arrows,
            "depth": self.config.depth,
            "diagrams_by_arrows": {str(k): v for k, v in sorted(self.diagrams_by_arrows.items())},
            "diagrams": sum(self.diagrams_by_arrows.values()),
            "move_classes": self.move_classes,
            "converged": self.converged,
            "phi_classes": self.phi_classes,
            "split_classes": list(self.split_classes),
            "commuting_pairs": self.commuting_pairs,
            "pairs_tested": self.pairs_tested,
            "obstructions": {
                "abelian_fail": self.abelian_fail,
                "full_fail": self.full_fail,
                "full_fail_abelian_pass": self.full_only,
                "abelian_fail_full_pass": self.abelian_only,
            },
            "ok": self.ok,
        }

    def lines(self) -> list[str]:
        j = self.to_json()
        out = [
            f"diagrams: {j['diagrams']} " + " ".join(f"m={k}:{v}" for k, v in j["diagrams_by_arrows"].items()),
            f"move classes (depth {self.config.depth}, {'converged' if self.converged else 'not converged'}): {self.move_classes}",
            f"phi classes: {self.phi_classes}",
        ]
        if self.config.commute:
            out.append(f"commuting pairs: {self.commuting_pairs} of {self.pairs_tested} non-trivial pairs")
        ob = j["obstructions"]
        out.append(
            "obstructions: abelian fails {abelian_fail}, full fails {full_fail}, "
            "full fails but abelian passes {full_fail_abelian_pass}".format(**ob)
        )
        for s in self.split_classes:
            out.append(f"FALSIFIED: move class with two words: {s}")
        if self.abelian_only:
            out.append(f"FALSIFIED: {self.abelian_only} diagrams fail abelian but pass full")
        return out


def _classes(nodes: list[GaussDiagram], depth: int) -> tuple[list[int], bool]:
    index = {d: i for i, d in enumerate(nodes)}
    nbrs: list[set[int]] = [set() for _ in nodes]
    for i, d in enumerate(nodes):
        for mv in enumerate_moves(d, include_insertions=False):
            j = index[apply_move(d, mv)]
            if j != i:
                nbrs[i].add(j)
                nbrs[j].add(i)
    label = list(range(len(nodes)))
    for _ in range(depth):
        new = [min([label[i]] + [label[j] for j in nbrs[i]]) for i in range(len(nodes))]
        if new == label:
            return label, True
        label = new
    converged = all(label[j] == label[i] for i in range(len(nodes)) for j in nbrs[i])
    return label, converged


def census(cfg: CensusConfig) -> CensusReport:
    report = CensusReport(cfg)
    nodes = []
    for m in range(cfg.max_arrows + 1):
        batch = list(all_diagrams(m))
        report.diagrams_by_arrows[m] = len(batch)
        nodes.extend(batch)
    label, report.converged = _classes(nodes, cfg.depth)
    report.move_classes = len(set(label))

    words: dict[int, set[StringInvariant]] = defaultdict(set)
    for i, d in enumerate(nodes):
        words[label[i]].add(phi(d))
    for lab, ws in sorted(words.items()):
        if len(ws) > 1:
            report.split_classes.append(format_diagram(nodes[lab]))
    distinct = sorted({w for ws in words.values() for w in ws}, key=lambda w: (len(w.word), str(w)))
    report.phi_classes = len(distinct)

    if cfg.commute:
        nontrivial = [w for w in distinct if not w.is_identity()]
        for x, y in itertools.combinations(nontrivial, 2):
            report.pairs_tested += 1
            report.commuting_pairs += compose(x, y) == compose(y, x)

    tally: Counter[tuple[bool, bool]] = Counter()
    for d in nodes:
        tally[ribbon_obstruction_abelian(d).passed, ribbon_obstruction_full(d).passed] += 1
    report.abelian_fail = tally[False, False] + tally[False, True]
    report.full_fail = tally[False, False] + tally[True, False]
    report.full_only = tally[True, False]
    report.abelian_only = tally[False, True]
    return report
