"""FastAPI service layer: request/response schemas and endpoint handlers."""
