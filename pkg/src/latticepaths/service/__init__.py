"""FastAPI service wrapping the counting library."""
