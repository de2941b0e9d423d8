"""PQ-trees over multisets: canonical form, equivalence and frontier counting."""
