"""Truncated Laurent series and Pochhammer expansion."""
