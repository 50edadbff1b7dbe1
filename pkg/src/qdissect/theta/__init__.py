"""Ramanujan theta functions and their split identities."""
