"""Hamiltonian cycles through short paths in regular graphs."""
