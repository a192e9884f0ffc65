"""
Graded Monomial Package
Monomials in f (degree 2), a (degree 4), b_1..b_2g (degree 3) and the gamma classes
(degree 6), with Koszul-sign normalization, parsing and formal combinations.
"""
