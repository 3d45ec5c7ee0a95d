"""Workbench core: framework, calculi, compilers, models and assemblies"""
