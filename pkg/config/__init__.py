"""Configuration module for the Set Function Fourier Toolkit."""

from .settings import transform_config, ssft_settings, evaluation_config, validation_config, app_config

__all__ = ["transform_config", "ssft_settings", "evaluation_config", "validation_config", "app_config"]
