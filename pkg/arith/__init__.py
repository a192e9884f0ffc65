"""
Exact Arithmetic Package
Rationals, Bernoulli numbers and the factorial conventions of the pairing formula.
"""
