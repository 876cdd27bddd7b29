"""Exact power sums, Faulhaber coefficients and related computations."""

from .asymptotic import a_general, build_series, telescope_check
from .bernoulli import bernoulli_number, bernoulli_polynomial, generalized_bernoulli
from .centralfact import central_factorial, even_powersum_cf, odd_powersum_cf
from .exactnum import Rational, rational_binomial
from .faulcoeff import a_by_determinant, a_by_jacobi, a_by_recurrence, a_explicit, a_symbolic
from .polyring import LadderSeries, Poly
from .powersum import FaulhaberForm, power_sum, to_faulhaber_form
from .reflect import TabulatedFunction, decompose
from .riddle import solve_riddle

__all__ = [
    "Rational", "rational_binomial", "Poly", "LadderSeries",
    "bernoulli_number", "bernoulli_polynomial", "generalized_bernoulli",
    "power_sum", "to_faulhaber_form", "FaulhaberForm",
    "a_by_recurrence", "a_symbolic", "a_by_jacobi", "a_explicit", "a_by_determinant",
    "TabulatedFunction", "decompose",
    "central_factorial", "odd_powersum_cf", "even_powersum_cf",
    "a_general", "build_series", "telescope_check",
    "solve_riddle",
]
