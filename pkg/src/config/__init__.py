"""
Configuration package.
Contains settings and configuration management.
"""
