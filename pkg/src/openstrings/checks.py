"""Randomized property suite behind ``openstrings verify``.

Each diagram gets the checks below; a failure records enough to replay it
(the run seed, the index of the diagram and its Gauss code).

    a  every deletion and slide, plus a sample of insertions, keeps Phi
    b  Phi of a concatenation is the composite of the factors
    c  abelianized word equals the path-sum polynomial
    d  hat swaps u and v in the polynomial
    e  the word has the normal form W a[-w,-w] shift(W^-1, (1,1))
    f  unit evaluations phi(1,1) = phi(u,1/u) = 1
    g  ribbon presentations pass both obstructions

The normal-form exponent ``w`` is also compared with the writhe, but only
counted: ``w`` is a homotopy invariant and the writhe is not (the kink
``1>2`` has writhe 1 and trivial invariant), so they differ in general.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .gauss import (
    GaussDiagram,
    apply_move,
    concat,
    enumerate_moves,
    format_diagram,
    hat,
    insertion_moves,
    is_ribbon_presentation,
    random_diagram,
    writhe,
)
from .invariant import (
    NormalFormError,
    compose,
    normal_form,
    phi,
    phi_poly,
    ribbon_obstruction_abelian,
    ribbon_obstruction_full,
)
from .laurent import LaurentPolynomial, eval_monomial_map, swap_uv
from .words import abelianize

CHECKS = "abcdefg"

_V_IS_U_INV = (LaurentPolynomial.var(0, 1), LaurentPolynomial.var(0, 1, power=-1))


@dataclass(frozen=True)
class VerifyConfig:
    count: int = 1000
    max_arrows: int = 6
    seed: int = 0
    insertions_per_diagram: int = 6
    checks: str = CHECKS


@dataclass(frozen=True)
class Failure:
    check: str
    index: int
    diagram: str
    detail: str

    def to_json(self) -> dict:
        return {"check": self.check, "index": self.index, "diagram": self.diagram, "detail": self.detail}


@dataclass
class VerifyReport:
    config: VerifyConfig
    diagrams: int = 0
    checked: dict[str, int] = field(default_factory=lambda: {c: 0 for c in CHECKS})
    failures: list[Failure] = field(default_factory=list)
    omega_differs_from_writhe: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "seed": self.config.seed,
            "count": self.config.count,
            "max_arrows": self.config.max_arrows,
            "diagrams": self.diagrams,
            "checked": dict(self.checked),
            "failures": [f.to_json() for f in self.failures],
            "omega_differs_from_writhe": self.omega_differs_from_writhe,
            "ok": self.ok,
        }


def unit_values(p: LaurentPolynomial) -> tuple[int, LaurentPolynomial]:
    """``(p(1,1), p(u, u^-1))``."""
    return p.constant(), eval_monomial_map(p, _V_IS_U_INV)


def check_diagram(d: GaussDiagram, rng: random.Random, cfg: VerifyConfig, other: GaussDiagram):
    """Yield ``(check, detail)`` for every violated property."""
    w = phi(d)
    p = phi_poly(d)
    todo = cfg.checks
    if "a" in todo:
        moves = enumerate_moves(d, include_insertions=False)
        ins = list(insertion_moves(d))
        moves += rng.sample(ins, min(cfg.insertions_per_diagram, len(ins)))
        for mv in moves:
            e = apply_move(d, mv)
            if phi(e) != w:
                yield "a", f"{mv} gives {format_diagram(e)} with a different word"
    if "b" in todo:
        if phi(concat(d, other)) != compose(w, phi(other)):
            yield "b", f"concatenated with {format_diagram(other)}"
    if "c" in todo and abelianize(w.word) != p:
        yield "c", f"abelianized {abelianize(w.word)} != path sum {p}"
    if "d" in todo and phi_poly(hat(d)) != swap_uv(p):
        yield "d", f"hat gives {phi_poly(hat(d))}, expected {swap_uv(p)}"
    if "e" in todo:
        try:
            _, omega = normal_form(w)
        except NormalFormError as exc:
            yield "e", str(exc)
        else:
            if omega != writhe(d):
                yield "omega", f"{omega} != writhe {writhe(d)}"
    if "f" in todo:
        at_one, at_inv = unit_values(p)
        if at_one != 1 or at_inv != LaurentPolynomial.one(1):
            yield "f", f"phi(1,1) = {at_one}, phi(u,1/u) = {at_inv}"
    if "g" in todo:
        # d . hat(d) is always a ribbon presentation
        for r in [d] * is_ribbon_presentation(d) + [concat(d, hat(d))]:
            if not (ribbon_obstruction_abelian(r).passed and ribbon_obstruction_full(r).passed):
                yield "g", f"ribbon presentation {format_diagram(r)} fails an obstruction"


def verify(cfg: VerifyConfig) -> VerifyReport:
    rng = random.Random(cfg.seed)
    report = VerifyReport(cfg)
    for i in range(cfg.count):
        d = random_diagram(rng.randint(0, cfg.max_arrows), rng)
        other = random_diagram(rng.randint(0, max(cfg.max_arrows // 2, 1)), rng)
        for c in cfg.checks:
            report.checked[c] += 1
        for check, detail in check_diagram(d, rng, cfg, other):
            if check == "omega":
                report.omega_differs_from_writhe += 1
                continue
            report.failures.append(Failure(check, i, format_diagram(d), detail))
        report.diagrams += 1
    return report
