"""Extremal workbench: reversible structures as extreme elements of classes"""
