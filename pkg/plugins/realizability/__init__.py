"""Realizability Plugin - assemblies, maps and the closed-structure recipes"""
