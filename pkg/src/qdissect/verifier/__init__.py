"""Claim catalog, brute-force verification, certifying prover and scanner."""
