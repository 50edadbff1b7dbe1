"""Lattice sums, residue components and cancellation certificates."""
