"""Numerical invariants of the quiver varieties M(alpha, lambda) and L(alpha, lambda).

Homology of the Lagrangian fibre L(alpha, lambda) is the weight space of
W(lambda) at lambda - alpha, with H_{d - 2k} matching the degree k part.
Everything below is computed from that identification.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import (
    CartanDatum,
    RootElem,
    Weight,
    dominant_conjugate,
    integral_root_coords,
    is_dominant,
    root_pairing,
    root_to_weight,
    sub,
    weight_root_pairing,
    weyl_orbit,
)
from .chars import dominant_character, weight_multiplicity
from .exactpoly import LaurentPoly, substitute_power
from .weylmod import graded_character, graded_multiplicity, lambda_min


@dataclass(frozen=True)
class BettiVector:
    alpha: RootElem
    lam: Weight
    d: int
    betti: tuple[int, ...]

    @property
    def nonzero(self) -> bool:
        return any(self.betti)

    def to_json(self) -> dict:
        return {"alpha": list(self.alpha), "d": self.d, "betti": list(self.betti)}


def _check_alpha(alpha: RootElem) -> None:
    if any(a < 0 for a in alpha):
        raise ValueError(f"alpha = {tuple(alpha)} is not in Q_+")


def weight_at(d: CartanDatum, alpha: RootElem, lam: Weight) -> Weight:
    """lam - alpha in fundamental-weight coordinates."""
    return sub(lam, root_to_weight(d, alpha))


def dim_M(d: CartanDatum, alpha: RootElem, lam: Weight) -> int:
    """(lam, lam) - (lam - alpha, lam - alpha) = 2 (lam, alpha) - (alpha, alpha)."""
    _check_alpha(alpha)
    return 2 * weight_root_pairing(d, lam, alpha) - root_pairing(d, alpha, alpha)


def is_nonempty(d: CartanDatum, alpha: RootElem, lam: Weight) -> bool:
    _check_alpha(alpha)
    return weight_multiplicity(d, lam, weight_at(d, alpha, lam)) > 0


def stratum_nonempty(d: CartanDatum, alpha: RootElem, lam: Weight) -> bool:
    _check_alpha(alpha)
    return is_dominant(weight_at(d, alpha, lam))


def dim_M0(d: CartanDatum, lam: Weight) -> int:
    lo = lambda_min(d, lam)
    return dim_M(d, _root_coords(d, sub(lam, lo)), lam)


def _root_coords(d: CartanDatum, x: Weight) -> RootElem:
    coords = integral_root_coords(d, x)
    assert coords is not None
    return coords


def weight_space_series(d: CartanDatum, alpha: RootElem, lam: Weight) -> dict[int, int]:
    """k -> dim of the weight-(lam - alpha) space of W(lam)_k."""
    nu = weight_at(d, alpha, lam)
    out: dict[int, int] = {}
    for k, layer in graded_character(d, lam).layers.items():
        dim = sum(m * weight_multiplicity(d, mu, nu) for mu, m in layer.items())
        if dim:
            out[k] = dim
    return out


def betti(d: CartanDatum, alpha: RootElem, lam: Weight) -> BettiVector:
    """Betti numbers b_0 .. b_d of L(alpha, lam), d = dim M(alpha, lam).

    An empty variety gives the zero vector; d is still the formula's value and
    the vector has length max(d, 0) + 1.
    """
    alpha, lam = tuple(alpha), tuple(lam)
    dim = dim_M(d, alpha, lam)
    b = [0] * (max(dim, 0) + 1)
    if is_nonempty(d, alpha, lam):
        for k, c in weight_space_series(d, alpha, lam).items():
            j = dim - 2 * k
            assert 0 <= j <= dim, (alpha, lam, k)
            b[j] = c
    return BettiVector(alpha, lam, dim, tuple(b))


def poincare_polynomial(d: CartanDatum, alpha: RootElem, lam: Weight) -> LaurentPoly:
    """sum_j b_j t^(d - j) = sum_k dim (W_k)_{lam - alpha} t^(2k)."""
    _check_alpha(alpha)
    return LaurentPoly({2 * k: c for k, c in weight_space_series(d, tuple(alpha), tuple(lam)).items()})


def kl_polynomial(d: CartanDatum, lam: Weight, mu: Weight) -> LaurentPoly:
    """Kazhdan-Lusztig type polynomial Z_{lam, mu}(t) of the stratum lam - mu."""
    return substitute_power(graded_multiplicity(d, lam, mu), 2)


def is_max_dim(d: CartanDatum, alpha: RootElem, lam: Weight) -> bool:
    if not is_nonempty(d, alpha, lam):
        raise ValueError(f"L(alpha={tuple(alpha)}, lambda={tuple(lam)}) is empty")
    return dominant_conjugate(d, weight_at(d, alpha, lam)) == lambda_min(d, lam)


def nonempty_alphas(d: CartanDatum, lam: Weight) -> list[RootElem]:
    """Every alpha in Q_+ with L(alpha, lam) nonempty, i.e. lam - alpha a weight of V(lam)."""
    lam = tuple(lam)
    out = []
    for mu in dominant_character(d, lam).mults:
        for nu in weyl_orbit(d, mu):
            out.append(_root_coords(d, sub(lam, nu)))
    return sorted(out, key=lambda a: (sum(a), a))
