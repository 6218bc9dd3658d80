"""Structures, morphisms, formulas, classes and extremal search"""
