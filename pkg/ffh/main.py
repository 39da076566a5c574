from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from contextlib import asynccontextmanager
import logging

from ffh import __version__
from ffh.config import Config
from ffh.routers import transform
from ffh.services.transform_service import TransformService


# Configure logging to filter out health check requests
class HealthCheckFilter(logging.Filter):
    def filter(self, record: logging.LogRecord) -> bool:
        return record.getMessage().find("/health") == -1


# Apply filter to uvicorn access logger
logging.getLogger("uvicorn.access").addFilter(HealthCheckFilter())
logging.getLogger("ffh").setLevel(Config().LOG_LEVEL)


@asynccontextmanager
async def lifespan(app: FastAPI):
    # Startup: warm the quadrature cache
    print("🚀 Initializing Fueter-Funk-Hecke API...")
    try:
        TransformService.initialize()
        print("✅ Fueter-Funk-Hecke API initialization completed")
    except Exception as e:
        print(f"❌ Failed to initialize Fueter-Funk-Hecke API: {e}")
        raise

    yield

    print("🔥 Fueter-Funk-Hecke API shutting down...")


app = FastAPI(
    title="Fueter-Funk-Hecke API",
    description="Exact and numeric biaxial Fueter-Funk-Hecke transforms of holomorphic seeds",
    version=__version__,
    lifespan=lifespan
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(transform.router, prefix="/api/v1", tags=["transform"])


@app.get("/")
async def root():
    return {"message": "Fueter-Funk-Hecke API", "version": __version__}


@app.get("/health")
async def health_check():
    return await transform.health_check()
