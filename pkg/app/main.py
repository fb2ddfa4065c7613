"""
matpow HTTP service.

A FastAPI application exposing the bounds, construction, oracle and search
operations as JSON endpoints.
"""
from contextlib import asynccontextmanager

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import ValidationError

from core.config import settings
from core.logging import setup_logging, app_logger
from core.exceptions import MatpowException, create_error_response
from api.matrix import router as matrix_router

VERSION = "1.0.0"


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Application lifespan manager."""
    app_logger.info("Starting matpow service...")
    if settings.debug:
        app_logger.info("Running in DEBUG mode (incremental objective re-verified on every move)")
    app_logger.info(f"Workers available for search/oracle: {settings.worker_count}")

    yield

    app_logger.info("Shutting down matpow service...")


app = FastAPI(
    title=settings.app_title,
    description="Bounds, constructions and searches for arrangements of 1..n^2 maximizing s(A^2)",
    version=VERSION,
    debug=settings.debug,
    lifespan=lifespan,
)


# Exception handlers
@app.exception_handler(ValidationError)
async def validation_exception_handler(request: Request, exc: ValidationError):
    """Handle Pydantic validation errors raised inside services."""
    app_logger.warning(f"Validation error: {exc}")
    return JSONResponse(
        status_code=422,
        content={"error": "validation", "message": "Invalid input provided", "details": {"errors": exc.errors(include_url=False, include_context=False, include_input=False)}},
    )


@app.exception_handler(MatpowException)
async def matpow_exception_handler(request: Request, exc: MatpowException):
    """Handle toolkit errors."""
    if exc.exit_code in (2, 3, 5):
        app_logger.warning(f"Rejected request {request.url.path}: {exc.message}")
    else:
        app_logger.error(f"Failed request {request.url.path}: {exc.message}", exception=exc)
    return create_error_response(exc)


# Include routers
app.include_router(matrix_router)


@app.get("/health")
async def health_check():
    """Basic health check endpoint."""
    return {
        "status": "healthy",
        "service": settings.app_title,
        "version": VERSION,
        "debug": settings.debug,
        "workers": settings.worker_count,
    }


if __name__ == "__main__":
    import uvicorn

    setup_logging()

    uvicorn.run(
        "main:app",
        host="0.0.0.0",
        port=8000,
        reload=settings.debug,
        log_level="debug" if settings.debug else "info",
    )
