"""
View Test Package
Contains test suites for UI components.
"""