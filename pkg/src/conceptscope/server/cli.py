"""Command line entry points.

``conceptscope process`` runs the pipeline and writes a workspace;
``conceptscope serve`` loads a written workspace and serves the HTTP
API. The CLI stays a thin client: all real work happens in the library.
"""

from __future__ import annotations

import argparse
import json
import sys

from ..config import load_config
from ..errors import ConceptScopeError
from .workspace import build_workspace, load_workspace, write_workspace


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conceptscope",
        description="Ontology-grounded document analysis with bubble treemap output.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    process = sub.add_parser("process", help="analyze documents and write a workspace")
    process.add_argument("docs", nargs="+", metavar="doc", help="plain-text input files")
    process.add_argument("--ontology", required=True, help="ontology triple CSV")
    process.add_argument("--taxonomy", default=None, help="similarity taxonomy TSV (default: bundled)")
    process.add_argument("--cache", default=None, help="recorded lookup cache JSON")
    process.add_argument("--threshold", type=float, default=None, help="fuzzy similarity threshold")
    process.add_argument("--no-fuzzy", action="store_true", help="disable fuzzy matching")
    process.add_argument("--config", default=None, help="key=value configuration file")
    process.add_argument("--out", default="workspace", help="output directory (default: workspace)")

    serve = sub.add_parser("serve", help="serve a processed workspace over HTTP")
    serve.add_argument("--workspace", required=True, help="directory written by process")
    serve.add_argument("--bind", default="127.0.0.1:8000", help="host:port (default: 127.0.0.1:8000)")
    return parser


def _fail(message: str) -> int:
    sys.stderr.write(json.dumps({"error": message}) + "\n")
    return 1


def _cmd_process(args: argparse.Namespace) -> int:
    try:
        config = load_config(args.config)
        overrides = {}
        if args.threshold is not None:
            overrides["matcher_threshold"] = args.threshold
        if args.no_fuzzy:
            overrides["fuzzy_enabled"] = False
        if overrides:
            from dataclasses import replace

            config = replace(config, **overrides)
        workspace = build_workspace(
            args.docs,
            ontology_path=args.ontology,
            taxonomy_path=args.taxonomy,
            cache_path=args.cache,
            config=config,
        )
        manifest_path = write_workspace(workspace, args.out)
    except (ConceptScopeError, OSError, UnicodeDecodeError, ValueError) as exc:
        return _fail(str(exc))
    print(f"processed {len(workspace.documents)} document(s) -> {manifest_path.parent}")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    host, _, port_text = args.bind.rpartition(":")
    if not host or not port_text.isdigit():
        return _fail(f"--bind expects host:port, got {args.bind!r}")
    try:
        workspace = load_workspace(args.workspace)
    except (ConceptScopeError, OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        return _fail(f"cannot load workspace: {exc}")

    import uvicorn

    from .api import create_app

    app = create_app(workspace)
    try:
        uvicorn.run(app, host=host, port=int(port_text), log_level="warning")
    except (OSError, SystemExit) as exc:
        return _fail(f"server failed to start: {exc}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "process":
        return _cmd_process(args)
    return _cmd_serve(args)


if __name__ == "__main__":
    sys.exit(main())
