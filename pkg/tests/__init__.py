"""Tests package for c1p-lab."""
