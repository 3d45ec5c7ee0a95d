"""Workbench Plugins"""
