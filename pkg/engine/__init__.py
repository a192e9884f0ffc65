"""
Pairing Engine Package
Intersection pairings on M_g, Gram matrices of the Poincare pairing, dual partners
and the pairing-level checks built on them.
"""
