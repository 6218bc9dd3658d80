"""
Model Test Package
Contains test suites for data models.
"""