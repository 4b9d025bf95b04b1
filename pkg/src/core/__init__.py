"""
Core engines for perfect 1-factorisations.
Contains factorisation types, canonical labelling, search, invariants, Latin squares and development.
"""
