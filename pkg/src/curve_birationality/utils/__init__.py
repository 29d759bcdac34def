"""
Utility functions for curve birationality reports.
"""
