"""HTTP service wrapping the engine; ``app`` is the ASGI entry point."""

from .app import app

__all__ = ["app"]
