"""Settings, constants and the class catalog"""
