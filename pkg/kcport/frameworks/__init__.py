"""Outer layer: command line and process setup."""
