"""Hamiltonian path counting through frontier and ordering reductions."""
