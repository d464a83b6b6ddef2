"""Free-group invariants of open virtual strings and colored open n-strings."""
from .gauss import DiagramError, GaussDiagram, concat, hat, parse_diagram, star
from .invariant import (
    StringInvariant,
    commute_check,
    compose,
    normal_form,
    phi,
    phi_poly,
    ribbon_obstruction_abelian,
    ribbon_obstruction_full,
)
from .laurent import LaurentPolynomial
from .words import Word

__version__ = "0.1.0"
