"""Exact verification toolkit for finite group actions on Enriques surfaces.

Subpackages cover permutation groups, character-theoretic obstructions,
integer lattices, curve configurations and exact polynomial identities,
plus a CLI that runs named verification suites.
"""

__version__ = "0.1.0"
