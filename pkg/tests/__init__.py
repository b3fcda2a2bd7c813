"""
Test package for qseries-factors
"""
