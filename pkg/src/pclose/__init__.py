"""Permutation-group engine for property closures, components and signalizer functors."""
