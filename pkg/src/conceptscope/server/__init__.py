"""Pipeline orchestration, artifact persistence, HTTP API, and CLI."""

from .workspace import (
    DocumentRecord,
    Workspace,
    build_workspace,
    bundled_taxonomy_text,
    load_workspace,
    write_workspace,
)

__all__ = [
    "DocumentRecord",
    "Workspace",
    "build_workspace",
    "bundled_taxonomy_text",
    "create_app",
    "load_workspace",
    "write_workspace",
]


def create_app(workspace: Workspace):
    # deferred so importing the package does not pull in FastAPI
    from .api import create_app as _create_app

    return _create_app(workspace)
