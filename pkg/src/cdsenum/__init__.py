"""Enumerate inclusion-minimal connected dominating sets."""
