"""Iwasawa invariants of Z_p-cover towers of links, computed from Alexander polynomials."""

from .catalog import (
    LinkFamily,
    bailey_even_family,
    bezout_certificate,
    bezout_link,
    c4_link,
    closed_form_invariants,
    conway_two_bridge,
    figure1_link,
    hopf_link,
    hosokawa_reduced,
    knot_family,
    torres_check,
    torus_link,
)
from .covers import (
    CoverSpec,
    GrowthTable,
    IwasawaInvariants,
    homology_orders,
    invariants_from_reduced,
    iwasawa_invariants,
    orders_from_reduced,
    reduced_polynomial,
)
from .errors import IwalinkError
from .expr import format_poly, parse_poly
from .greenberg import Verdict, pseudonull, pseudonull_criterion, structured_factor
from .laurent import MultiLaurent, UniPoly, resultant, specialize, unit_normal
from .padic import distinguished_part, weierstrass_invariants

__version__ = "0.1.0"
