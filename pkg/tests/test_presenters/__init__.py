"""
Presenter Test Package
Contains test suites for presenters/business logic.
"""