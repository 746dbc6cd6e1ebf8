"""Graded Weyl modules of ADE current algebras and Betti numbers of quiver varieties."""

from .cartan import CartanDatum, build_cartan, dominant_conjugate, pairing, weight_to_root_coords
from .chars import dim_simple, dominant_character, weight_multiplicity
from .exactpoly import LaurentPoly, eval_at_one, gauss_binomial, substitute_power
from .fermionic import charge, enumerate_S, fermionic_M, vacancy
from .quiver import (
    BettiVector,
    betti,
    dim_M,
    dim_M0,
    is_max_dim,
    is_nonempty,
    kl_polynomial,
    poincare_polynomial,
    stratum_nonempty,
)
from .typea import (
    chari_loktev_polynomial,
    count_row_increasing_tableaux,
    enumerate_S_alpha,
    kostka_multiplicity,
)
from .weylmod import (
    GradedCharacter,
    graded_character,
    graded_multiplicity,
    lambda_min,
    loewy_length,
    loewy_report,
    socle,
)

__version__ = "0.1.0"
