"""
Curve Birationality - exact decision of birationality and isomorphism for
polynomial parametrizations of curves.
"""

__version__ = "1.0.0"
__description__ = (
    "Decide whether t -> (f_1(t), ..., f_n(t)) is birational or an isomorphism "
    "onto its image, via reduced Gröbner bases of divided differences."
)
