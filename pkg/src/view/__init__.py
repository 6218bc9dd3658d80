"""Module containing report views"""
