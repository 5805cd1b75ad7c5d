from ._gpilab import Algebra, GenPolynomial, builtin_names

__all__ = ["Algebra", "GenPolynomial", "builtin_names"]
