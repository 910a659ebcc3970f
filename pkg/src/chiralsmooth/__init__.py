"""Casson-Gordon obstructions to chiral smoothings of two-bridge knots."""

from .exactmath import DomainError
from .lens import orbit, sigma
from .obstruct import chiral_obstruct, pair_obstruct, torus2_obstruct

__all__ = ["DomainError", "chiral_obstruct", "orbit", "pair_obstruct", "sigma", "torus2_obstruct"]
