"""Exact discriminants of the Mutt and Jeff polynomials built from Chebyshev polynomials."""
from .chebyshev import ChebKind, T, U, cheb
from .discriminant import closed_form, disc, resultant, resultant_z
from .factor import FactoredInt, factor_int
from .muttjeff import jeff, mutt, poly_r, transform_su, uprime_sqrt
from .polycore import BivarPoly, RatPoly
from .rootiso import isolate_roots, pair_roots, refine_root, sturm_chain

__version__ = "0.1.0"
