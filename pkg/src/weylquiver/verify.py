"""Executable consistency checks for one highest weight.

Each check returns a :class:`CheckResult`; ``failures`` lists the offending
(alpha or mu, detail) pairs so a red line points at a concrete instance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .cartan import CartanDatum, Weight, is_dominant
from .chars import dominant_weights_below, weight_multiplicity
from .exactpoly import eval_at_one
from .fermionic import fermionic_M
from .quiver import betti, is_nonempty, nonempty_alphas, poincare_polynomial, weight_at
from .typea import chari_loktev_polynomial, count_row_increasing_tableaux
from .weylmod import graded_character, lambda_min, loewy_length, top_degree


@dataclass
class CheckResult:
    name: str
    lam: Weight
    skipped: bool = False
    failures: list[tuple[tuple, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def status(self) -> str:
        if self.skipped:
            return "SKIP"
        return "PASS" if self.passed else "FAIL"


def check_cross_formula(d: CartanDatum, lam: Weight) -> CheckResult:
    res = CheckResult("chari-loktev = poincare", lam, skipped=d.series != "A")
    if res.skipped:
        return res
    for alpha in nonempty_alphas(d, lam):
        p = poincare_polynomial(d, alpha, lam)
        q = chari_loktev_polynomial(d, alpha, lam)
        if p != q:
            res.failures.append((alpha, f"poincare {p} != chari-loktev {q}"))
    return res


def check_tableaux(d: CartanDatum, lam: Weight) -> CheckResult:
    res = CheckResult("tableaux count = poincare(1)", lam, skipped=d.series != "A")
    if res.skipped:
        return res
    for alpha in nonempty_alphas(d, lam):
        n = count_row_increasing_tableaux(d, alpha, lam)
        p = eval_at_one(poincare_polynomial(d, alpha, lam))
        if n != p:
            res.failures.append((alpha, f"{n} tableaux, poincare(1) = {p}"))
    return res


def check_layers(d: CartanDatum, lam: Weight) -> CheckResult:
    res = CheckResult("layer laws", lam)
    gch = graded_character(d, lam)
    lo = lambda_min(d, lam)
    top = top_degree(d, lam)
    if gch.layer(0) != {lam: 1}:
        res.failures.append((lam, f"layer 0 is {gch.layer(0)}"))
    if max(gch.degrees) != top:
        res.failures.append((lam, f"top degree {max(gch.degrees)} != {top}"))
    if gch.layer(top) != {lo: 1}:
        res.failures.append((lo, f"top layer is {gch.layer(top)}"))
    if gch.degrees != list(range(loewy_length(d, lam))):
        res.failures.append((lam, f"nonempty degrees {gch.degrees}"))
    for mu in dominant_weights_below(d, lam):
        m = fermionic_M(d, lam, mu)
        if any(e > 0 or c < 0 for e, c in m.items()):
            res.failures.append((mu, f"fermionic form {m} not in N[t^-1]"))
    return res


def check_betti(d: CartanDatum, lam: Weight) -> CheckResult:
    res = CheckResult("parity, b_0 = 1, top betti", lam)
    alphas = nonempty_alphas(d, lam)
    for alpha in alphas:
        bv = betti(d, alpha, lam)
        if any(b for j, b in enumerate(bv.betti) if (bv.d - j) % 2):
            res.failures.append((alpha, f"odd-offset homology {bv.betti}"))
        if bv.betti[0] != 1:
            res.failures.append((alpha, f"b_0 = {bv.betti[0]}"))
        top = weight_multiplicity(d, lam, weight_at(d, alpha, lam))
        if bv.betti[bv.d] != top:
            res.failures.append((alpha, f"b_d = {bv.betti[bv.d]}, weight multiplicity {top}"))
    # one step outside the weight support must give the zero vector
    for alpha in alphas:
        for i in range(d.rank):
            beyond = tuple(a + int(j == i) for j, a in enumerate(alpha))
            if not is_nonempty(d, beyond, lam) and betti(d, beyond, lam).nonzero:
                res.failures.append((beyond, "nonzero betti vector for an empty variety"))
    return res


def fundamental_product(d: CartanDatum, lam: Weight) -> int:
    """prod_i binom(n + 1, i)^{m_i}: dimension of W(lam) in type A_n."""
    n = d.rank
    return math.prod(math.comb(n + 1, i + 1) ** m for i, m in enumerate(lam))


def check_dimension(d: CartanDatum, lam: Weight) -> CheckResult:
    res = CheckResult("dimension consistency", lam)
    gdim = graded_character(d, lam).dimension(d)
    alphas = nonempty_alphas(d, lam)
    pdim = sum(eval_at_one(poincare_polynomial(d, a, lam)) for a in alphas)
    if gdim != pdim:
        res.failures.append((lam, f"sum M(1) dim V = {gdim}, sum poincare(1) = {pdim}"))
    if d.series == "A":
        expected = fundamental_product(d, lam)
        cl = sum(eval_at_one(chari_loktev_polynomial(d, a, lam)) for a in alphas)
        if not gdim == expected == cl:
            res.failures.append((lam, f"{gdim} vs product {expected} vs chari-loktev {cl}"))
    return res


CHECKS = (check_cross_formula, check_tableaux, check_layers, check_betti, check_dimension)


def weights_to_verify(lam: Weight, depth: int) -> list[Weight]:
    """lam and every dominant lam' <= lam coordinatewise with sum(lam - lam') <= depth."""
    out = []

    def rec(i: int, budget: int, acc: list[int]) -> None:
        if i == len(lam):
            out.append(tuple(acc))
            return
        for drop in range(0, min(budget, lam[i]) + 1):
            acc.append(lam[i] - drop)
            rec(i + 1, budget - drop, acc)
            acc.pop()

    rec(0, depth, [])
    return sorted(out, key=lambda w: (-sum(w), tuple(-c for c in w)))


def run_checks(d: CartanDatum, lam: Weight, depth: int = 0) -> list[CheckResult]:
    if not is_dominant(lam):
        raise ValueError(f"weight {tuple(lam)} is not dominant")
    return [check(d, w) for w in weights_to_verify(tuple(lam), depth) for check in CHECKS]
