"""Application use cases for kcport."""
