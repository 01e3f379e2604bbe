"""Exact lens-space surgery calculus: continued fractions, lens spaces,
Alexander polynomials, torus-knot surgeries and the K_n family census."""

import json
from fractions import Fraction

from . import _pslens
from ._pslens import (
    DegenerateEvaluation,
    DomainError,
    ParseError,
    berge_vii_classes,
    berge_viii_classes,
    cf_expand,
    correction_lift,
    cyclic_reduce,
    equivalent_oriented,
    equivalent_unoriented,
    family_params,
    genus,
    hedden_classes,
    hsphere_surgery_classes,
    involution_image,
    lspace_form_check,
    mod_inverse,
    normalize,
    poly_terms,
    pretzel_double_cover,
    pretzel_is_two_bridge,
    quadratic_solutions,
    run_cli,
    slope_distance,
    sum_equivalent,
    tangle_sum_double_cover,
    torus_alexander,
    torus_knot_integral_surgery,
    tunnel_verdict,
)

__all__ = [
    "DegenerateEvaluation",
    "DomainError",
    "ParseError",
    "berge_vii_classes",
    "berge_viii_classes",
    "census",
    "cf_eval",
    "cf_expand",
    "correction_lift",
    "cyclic_reduce",
    "equivalent_oriented",
    "equivalent_unoriented",
    "family_params",
    "family_report",
    "genus",
    "hedden_classes",
    "hsphere_surgery_classes",
    "involution_image",
    "lspace_form_check",
    "mod_inverse",
    "normalize",
    "poly_terms",
    "pretzel_double_cover",
    "pretzel_is_two_bridge",
    "quadratic_solutions",
    "run_cli",
    "slope_distance",
    "sum_equivalent",
    "tangle_sum_double_cover",
    "torus_alexander",
    "torus_knot_integral_surgery",
    "tunnel_verdict",
]


def cf_eval(terms):
    """Value of [a1, ..., ak] as a Fraction, or None for 1/0."""
    num, den = _pslens.cf_eval(list(terms))
    return None if den == 0 else Fraction(num, den)


def family_report(n):
    """Report for K_n as a dict with the same fields as the CLI's JSON."""
    return json.loads(_pslens.family_report_json(n))


def census(n_min, n_max, threads=1):
    """Reports for every n in [n_min, n_max], ordered by n."""
    return [json.loads(line) for line in _pslens.census_json(n_min, n_max, threads)]
