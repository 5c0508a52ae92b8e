"""Shared exception base for everything this package can reject."""


class LifterError(Exception):
    """Base class for parse, validation, and loading failures."""
