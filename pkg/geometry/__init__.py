"""
Representation Variety Package
Numerical checks on the fiber mu^-1(-I) inside SU(2)^2g, with SU(2) modelled by unit quaternions.
"""
