"""Separation Plugin - candidate refutations by normalization"""
