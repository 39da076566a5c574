"""
Routers package for the API
"""

from .transform import router as transform_router

__all__ = ["transform_router"]
