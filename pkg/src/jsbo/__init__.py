"""Exact calculus of bounded symmetric domains and their intertwining operators.

Everything downstream of this package works over exact rationals: polynomial
coefficients are fractions, parameter dependence is kept in factored or
rational-function form, and floating point only ever appears in the one
numeric norm helper used for membership reporting.
"""

__version__ = "1.0.0"
