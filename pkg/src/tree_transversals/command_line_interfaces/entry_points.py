"""Provides the entry point wrapper functions for all CLI commands."""


def transversals_cli() -> None:
    """Entry point for the 'transversals' CLI command."""
    from ..command_line_interfaces.transversals import transversals  # noqa: PLC0415

    transversals()
