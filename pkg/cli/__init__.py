"""Command-line interface for the Set Function Fourier Toolkit."""

from .main import cli, dispatch

__all__ = ["cli", "dispatch"]
