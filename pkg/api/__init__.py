"""FastAPI service module for the Set Function Fourier Toolkit."""
