"""Test suite for the Set Function Fourier Toolkit."""
