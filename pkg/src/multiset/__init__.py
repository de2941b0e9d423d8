"""Multiset strings, π-pattern matching and the full multiset ordering solver."""
