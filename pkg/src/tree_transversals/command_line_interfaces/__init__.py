"""This package provides the Command Line Interface (CLI) for interfacing with all user-facing library components,
exposed by installing the library into a Python environment.
"""
