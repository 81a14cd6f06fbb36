"""Symbol algebras, crossed products and the quantum plane."""
from .base import AlgebraElement, AlgebraInvolution, apply_involution, multiply
from .crossed import CrossedProduct, crossed_from_symbol, cyclic_group
from .ore import LeadingTerm, QuantumPlane, grlex_key, leading_term
from .symbol import SymbolAlgebra, quaternion

__all__ = [
    "AlgebraElement", "AlgebraInvolution", "apply_involution", "multiply",
    "CrossedProduct", "crossed_from_symbol", "cyclic_group", "LeadingTerm", "QuantumPlane", "grlex_key",
    "leading_term", "SymbolAlgebra", "quaternion",
]
