"""
FastAPI service for the Set Function Fourier Toolkit.
Provides REST endpoints for dense transforms, sparse learning and error estimation.
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

import sys
sys.path.insert(0, str(Path(__file__).parent.parent))

from config import app_config, evaluation_config, transform_config
from core import CapacityError, DenseSetFunction, InvalidInputError, ModelId, RecoveryError, SparseFT
from evaluation import relative_error
from export import report_document
from generators import default_keep_root, resolve_oracle
from models import ErrorEstimate, SsftConfig
from ssft import ssft, ssft_plus
from transforms import dense_ft, dense_ift

# Configure logging
logging.basicConfig(
    level=getattr(logging, app_config.log_level),
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)
logger = logging.getLogger(__name__)

# Create FastAPI app
app = FastAPI(
    title="Set Function Fourier Toolkit API",
    description="Fourier transforms of set functions and sparse learning from oracle queries",
    version=app_config.version
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


# Request models
class TransformRequest(BaseModel):
    values: List[float] = Field(description="2^n values in lexicographic order")
    model: ModelId = ModelId.UNION
    direction: Literal["fwd", "inv"] = "fwd"


class SsftRequest(BaseModel):
    oracle: str = Field(description="Compact oracle spec, e.g. cut:path3")
    model: ModelId = ModelId.UNION
    plus: bool = False
    seed: Optional[int] = None
    keep_root: Optional[bool] = Field(
        default=None,
        description="Keep the empty set at step 0; default chosen by the oracle family"
    )
    epsilon: Optional[float] = None
    k_max: Optional[int] = Field(default=None, ge=1)
    keep_root: Optional[bool] = Field(default=None, description="Keep the empty set at step 0; default chosen by the oracle family")


class RelativeErrorRequest(BaseModel):
    oracle: str
    spectrum: Dict[str, Any] = Field(description="Spectrum document as written by /ssft or the CLI")
    seed: Optional[int] = None
    num_samples: int = Field(default_factory=lambda: evaluation_config.num_samples, ge=1)


@app.exception_handler(InvalidInputError)
async def invalid_input_handler(request: Request, exc: InvalidInputError):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.exception_handler(CapacityError)
async def capacity_handler(request: Request, exc: CapacityError):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.exception_handler(RecoveryError)
async def recovery_handler(request: Request, exc: RecoveryError):
    logger.error(f"Recovery failed: {exc}")
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.get("/")
async def root():
    """Health check endpoint."""
    return {
        "status": "healthy",
        "service": "Set Function Fourier Toolkit",
        "version": app_config.version
    }


@app.get("/health")
async def health_check():
    """Detailed health check."""
    return {
        "status": "healthy",
        "schema_version": app_config.schema_version,
        "max_dense_n": transform_config.max_dense_n,
        "output_dir": str(app_config.output_dir),
    }


@app.post("/transform")
async def transform(request: TransformRequest) -> Dict[str, Any]:
    """
    Dense forward or inverse transform.

    Args:
        request: values of length 2^n, model and direction

    Returns:
        Transformed values in lexicographic order
    """
    function = DenseSetFunction.from_values(request.values)
    out = dense_ft(function, request.model) if request.direction == "fwd" else dense_ift(function, request.model)
    return {
        "n": out.n,
        "model": int(request.model),
        "direction": request.direction,
        "values": out.values.tolist(),
    }


@app.post("/ssft")
async def learn(request: SsftRequest) -> Dict[str, Any]:
    """Run SSFT (or SSFT+ when plus is set) against a generated oracle."""
    spec, oracle = resolve_oracle(request.oracle, request.seed)
    overrides = {
        key: value
        for key, value in {"epsilon": request.epsilon, "k_max": request.k_max}.items()
        if value is not None
    }
    overrides["keep_root"] = default_keep_root(spec) if request.keep_root is None else request.keep_root
    cfg = SsftConfig(model=request.model, seed=request.seed, **overrides)
    report = (ssft_plus if request.plus else ssft)(oracle, spec.n, cfg)
    logger.info(f"/ssft {request.oracle}: k={report.k}, {report.queries_used} queries")
    return report_document(report)


@app.post("/relative-error")
async def estimate_error(request: RelativeErrorRequest) -> ErrorEstimate:
    spec, oracle = resolve_oracle(request.oracle, request.seed)
    estimate = SparseFT.from_json_dict(request.spectrum)
    return relative_error(oracle, estimate, request.num_samples, request.seed)


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(
        "main:app",
        host=app_config.api_host,
        port=app_config.api_port,
        reload=True
    )
