"""
Information gain of a Gaussian process sensor placement,
G(A) = 1/2 log det(I + sigma^-2 K_AA), with G(empty) = 0.
"""

import numpy as np

from core import InvalidInputError, SetFunctionOracle
from core.subsets import elements_of

# Relative eigenvalue slack when checking positive semidefiniteness
_PSD_TOLERANCE = 1e-10


class InformationGainOracle(SetFunctionOracle):
    def __init__(self, covariance, sigma: float):
        matrix = np.asarray(covariance, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise InvalidInputError(f"Covariance must be square, got shape {matrix.shape}")
        if not np.allclose(matrix, matrix.T, atol=1e-12):
            raise InvalidInputError("Covariance must be symmetric")
        if sigma <= 0:
            raise InvalidInputError(f"Noise level must be positive, got {sigma}")
        eigenvalues = np.linalg.eigvalsh(matrix)
        scale = max(1.0, float(np.abs(eigenvalues).max()))
        if eigenvalues.min() < -_PSD_TOLERANCE * scale:
            raise InvalidInputError(f"Covariance is not positive semidefinite (min eigenvalue {eigenvalues.min():.3e})")

        super().__init__(matrix.shape[0])
        self.sigma = float(sigma)
        self._scaled = matrix / self.sigma ** 2

    def _evaluate(self, bits: int) -> float:
        idx = [i - 1 for i in elements_of(bits)]
        if not idx:
            return 0.0
        system = np.eye(len(idx)) + self._scaled[np.ix_(idx, idx)]
        try:
            factor = np.linalg.cholesky(system)
        except np.linalg.LinAlgError as e:
            raise InvalidInputError(f"Cholesky factorisation failed on {len(idx)} sensors: {e}") from e
        # 1/2 log det = sum log diag(L)
        return float(np.log(np.diag(factor)).sum())


def information_gain_oracle(covariance, sigma: float = 1.0) -> InformationGainOracle:
    return InformationGainOracle(covariance, sigma)
