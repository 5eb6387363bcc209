"""Adapters implementing the use case interfaces."""
