"""Command-line client for the counting service.

The CLI never computes anything itself: every command issues an HTTP
request against the service API and formats the response.  By default
the service app runs in-process (no sockets, no daemon, byte-identical
output for identical invocations); ``--server URL`` points the same
requests at a remote instance instead.

Exit codes: 0 success, 1 verification or comparison mismatch, 2 usage
error, 3 resource guard exceeded, 4 external service failure.  Data goes
to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys
from typing import Optional
from urllib.parse import quote

import httpx

from latticepaths import __version__
from latticepaths.oeis import CACHE_ENV_VAR

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_EXTERNAL = 4

_CODE_EXITS = {
    "resource-limit": EXIT_RESOURCE,
    "network-unreachable": EXIT_EXTERNAL,
    "bfile-parse": EXIT_EXTERNAL,
}


class ApiError(Exception):
    """A non-200 response from the service."""

    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message

    @property
    def exit_code(self) -> int:
        return _CODE_EXITS.get(self.code, EXIT_USAGE)


class TransportError(Exception):
    """The service itself could not be reached."""


def _request(args: argparse.Namespace, path: str, params: dict) -> dict:
    params = {k: v for k, v in params.items() if v is not None}
    if args.server:
        try:
            with httpx.Client(base_url=args.server, timeout=args.timeout) as client:
                response = client.get(path, params=params)
        except httpx.HTTPError as exc:
            raise TransportError(f"cannot reach {args.server}: {exc}") from exc
    else:

        async def call() -> httpx.Response:
            from latticepaths.service.app import app

            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(
                transport=transport, base_url="http://latticepaths.internal"
            ) as client:
                return await client.get(path, params=params, timeout=args.timeout)

        response = asyncio.run(call())
    if response.status_code != 200:
        detail = None
        try:
            detail = response.json().get("detail")
        except ValueError:
            pass
        if isinstance(detail, dict) and "code" in detail:
            raise ApiError(response.status_code, detail["code"], detail.get("message", ""))
        raise ApiError(response.status_code, "bad-request", str(detail or response.text))
    return response.json()


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _emit_json(payload: dict) -> None:
    _emit(json.dumps(payload, indent=2) + "\n")


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


# -- subcommand handlers ----------------------------------------------------


def cmd_seq(args: argparse.Namespace) -> int:
    payload = _request(
        args, f"/seq/{quote(args.family, safe='')}", {"terms": args.terms, "method": args.method}
    )
    if args.format == "json":
        _emit_json(payload)
    elif args.format == "bfile":
        offset = payload["offset"]
        _emit("".join(f"{offset + i} {v}\n" for i, v in enumerate(payload["terms"])))
    else:
        _emit(" ".join(str(v) for v in payload["terms"]) + "\n")
    return EXIT_OK


def _trim_zeros(row: list[int]) -> list[int]:
    end = len(row)
    while end > 1 and row[end - 1] == 0:
        end -= 1
    return row[:end]


def cmd_triangle(args: argparse.Namespace) -> int:
    payload = _request(args, f"/triangle/{quote(args.array, safe='')}", {"rows": args.rows})
    if args.format == "json":
        _emit_json(payload)
    else:
        # Structural trailing zeros (columns beyond the support) are omitted.
        for row in payload["rows"]:
            _emit(" ".join(str(v) for v in _trim_zeros(row)) + "\n")
    return EXIT_OK


def cmd_paths(args: argparse.Namespace) -> int:
    wants_list = args.list or args.ascii
    payload = _request(
        args,
        f"/paths/{quote(args.family, safe='')}",
        {
            "n": args.n,
            "list": "true" if wants_list else None,
            "ascii": "true" if args.ascii else None,
        },
    )
    if args.format == "json":
        _emit_json(payload)
    elif args.ascii:
        for label, grid in zip(payload["paths"], payload["grids"]):
            _emit(label + "\n")
            if grid:
                _emit(grid + "\n")
            _emit("\n")
    elif args.list:
        _emit("".join(label + "\n" for label in payload["paths"]))
    else:
        _emit(f"{payload['count']}\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    payload = _request(args, "/verify", {"max_n": args.max_n, "order": args.order})
    for check in payload["checks"]:
        status = "PASS" if check["ok"] else "FAIL"
        line = f"{status}  {check['name']} ({check['cases']} cases)"
        if check["detail"]:
            line += f": {check['detail']}"
        _emit(line + "\n")
    good = sum(1 for c in payload["checks"] if c["ok"])
    _emit(f"{good}/{len(payload['checks'])} checks passed\n")
    return EXIT_OK if payload["ok"] else EXIT_MISMATCH


def cmd_oeis(args: argparse.Namespace) -> int:
    cache_dir = args.cache_dir or os.environ.get(CACHE_ENV_VAR) or None
    payload = _request(
        args,
        f"/oeis/{quote(args.family, safe='')}",
        {
            "terms": args.terms,
            "cache_dir": cache_dir,
            "refresh": "true" if args.refresh else None,
        },
    )
    if payload.get("note"):
        _warn(payload["note"])
    if args.format == "json":
        _emit_json(payload)
        return EXIT_OK if payload["agree"] else EXIT_MISMATCH
    label = f"{payload['oeis_id']} ({payload['family']})"
    if payload["agree"]:
        _emit(
            f"{label}: agree on {payload['checked']} terms (source: {payload['source']})\n"
        )
        return EXIT_OK
    mismatch = payload["first_mismatch"]
    _emit(
        f"{label}: mismatch at n={mismatch['n']}: "
        f"reference={mismatch['reference']} computed={mismatch['computed']}\n"
    )
    return EXIT_MISMATCH


# -- parser -----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticepaths",
        description="Lattice-path sequences, triangles, path listings, and verification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--server",
        default=None,
        metavar="URL",
        help="remote service base URL (default: run the service in-process)",
    )
    parser.add_argument(
        "--timeout", type=float, default=120.0, help="HTTP timeout in seconds"
    )
    sub = parser.add_subparsers(dest="command")

    seq = sub.add_parser("seq", help="print terms of one of the ten named sequences")
    seq.add_argument("family", help="family key (e.g. motzkin) or OEIS id (e.g. A001006)")
    seq.add_argument("--terms", type=int, default=10, metavar="K")
    seq.add_argument(
        "--method",
        choices=["formula", "gf", "riordan", "brute"],
        default="formula",
        help="computation route (all agree; brute is enumeration-limited)",
    )
    seq.add_argument("--format", choices=["text", "json", "bfile"], default="text")
    seq.set_defaults(handler=cmd_seq)

    triangle = sub.add_parser("triangle", help="print rows of a named triangular array")
    triangle.add_argument("array", help="one of: delannoy, motzkin, uh, pascal")
    triangle.add_argument("--rows", type=int, default=8, metavar="K")
    triangle.add_argument("--format", choices=["text", "json"], default="text")
    triangle.set_defaults(handler=cmd_triangle)

    paths = sub.add_parser("paths", help="count or list the paths of a family")
    paths.add_argument("family")
    paths.add_argument("--n", type=int, required=True, help="sequence index n")
    paths.add_argument("--list", action="store_true", help="print one path per line")
    paths.add_argument("--ascii", action="store_true", help="draw each path")
    paths.add_argument("--format", choices=["text", "json"], default="text")
    paths.set_defaults(handler=cmd_paths)

    verify = sub.add_parser("verify", help="run the full cross-check suite")
    verify.add_argument("--max-n", type=int, default=6, dest="max_n", metavar="K")
    verify.add_argument("--order", type=int, default=30, metavar="M")
    verify.set_defaults(handler=cmd_verify)

    oeis = sub.add_parser("oeis", help="compare computed terms against an OEIS b-file")
    oeis.add_argument("family", help="OEIS id or family key")
    oeis.add_argument("--terms", type=int, default=100, metavar="K")
    oeis.add_argument(
        "--cache-dir",
        default=None,
        help=f"b-file cache directory (falls back to ${CACHE_ENV_VAR})",
    )
    oeis.add_argument(
        "--refresh",
        action="store_true",
        help="skip caches and fixtures, fetch from oeis.org",
    )
    oeis.add_argument("--format", choices=["text", "json"], default="text")
    oeis.set_defaults(handler=cmd_oeis)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    try:
        return args.handler(args)
    except ApiError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return exc.exit_code
    except TransportError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXTERNAL


def entrypoint() -> None:
    """Console-script wrapper."""
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
