"""HTTP service layer: pydantic schemas and the FastAPI application."""

from .app import app, create_app
from .schemas import CountEntry, RunReport, Verdict

__all__ = ["app", "create_app", "CountEntry", "RunReport", "Verdict"]
