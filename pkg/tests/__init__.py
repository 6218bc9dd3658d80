"""
Test Package
Contains all test suites for the application.
"""