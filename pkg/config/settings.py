"""
Central configuration for the Set Function Fourier Toolkit.
All tunable parameters are exposed here with sensible defaults.
"""

from pathlib import Path
from pydantic_settings import BaseSettings
from pydantic import Field


class TransformConfig(BaseSettings):
    """Configuration for dense transforms and densification."""

    max_dense_n: int = Field(
        default=26,
        description="Largest ground-set size accepted by dense transforms and densify"
    )

    class Config:
        env_prefix = "SFT_TRANSFORM_"


class SsftSettings(BaseSettings):
    """Defaults for the sparse set function Fourier transform."""

    # Zero thresholds on recovered coefficients
    epsilon: float = Field(
        default=1e-8,
        description="Coefficient zero threshold for exact oracles"
    )
    experiment_epsilon: float = Field(
        default=1e-3,
        description="Coefficient zero threshold for noisy or experiment runs"
    )

    k_max: int = Field(
        default=1000,
        description="Support-size cap per chain step"
    )

    # Model 5 least squares
    ls_oversampling: float = 2.0
    max_resamples: int = Field(
        default=8,
        description="Extra row batches a rank-deficient least-squares step may draw before failing"
    )

    # SSFT+ division guard on |h(B)|
    frequency_guard: float = 1e-12

    # Keep the empty set in the step-0 support even when s(empty) is below epsilon
    keep_root: bool = False

    class Config:
        env_prefix = "SFT_SSFT_"


class EvaluationConfig(BaseSettings):
    """Configuration for the evaluation harness."""

    num_samples: int = Field(
        default=100_000,
        description="Uniformly random sets used to estimate relative error"
    )
    batch_size: int = Field(
        default=8192,
        description="Rows per vectorised evaluation chunk"
    )
    lazy_greedy: bool = False
    max_workers: int = 1

    class Config:
        env_prefix = "SFT_EVAL_"


class ValidationConfig(BaseSettings):
    """Tolerances for checking a recovered spectrum against ground truth."""

    coefficient_rel_tol: float = 1e-6
    coefficient_abs_tol: float = Field(
        default=1e-9,
        description="Absolute slack per coefficient; also the zero level for spurious frequencies"
    )

    class Config:
        env_prefix = "SFT_VALIDATION_"


class AppConfig(BaseSettings):
    """Main application configuration."""

    # Paths
    base_dir: Path = Path(__file__).parent.parent
    output_dir: Path = Field(default_factory=lambda: Path(__file__).parent.parent / "output")

    # API settings
    api_host: str = "0.0.0.0"
    api_port: int = 8000

    # Logging
    log_level: str = "INFO"

    # Versions
    version: str = "1.0.0"
    schema_version: str = "1"

    def ensure_directories(self):
        """Create necessary directories if they don't exist."""
        self.output_dir.mkdir(parents=True, exist_ok=True)

    class Config:
        env_prefix = "SFT_APP_"


# Global configuration instances
transform_config = TransformConfig()
ssft_settings = SsftSettings()
evaluation_config = EvaluationConfig()
validation_config = ValidationConfig()
app_config = AppConfig()
