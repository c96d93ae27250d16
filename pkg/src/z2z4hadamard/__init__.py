"""Z2Z4-linear Hadamard codes: construction, invariants, equivalence and automorphism groups."""

__version__ = "0.1.0"
