"""Codec, logging, worker pool, graph helpers and random generators"""
