"""Exact convex geometry toolkit for general probabilistic theories."""
