from .polycore import MultiIndex, Poly, ProjPoint, Scalar

__all__ = ["MultiIndex", "Poly", "ProjPoint", "Scalar"]
