"""Command-line front end: a thin client of the HTTP service.

Without --server the requests go to the FastAPI app in-process, so the CLI
works offline and deterministically; with --server they go over the wire.
Exit codes: 0 success, 1 verification failure, 2 argument error.
"""

from __future__ import annotations

import argparse
import json
import sys

import httpx

from .functional import default_radius_tol


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    import warnings

    with warnings.catch_warnings():
        # the in-process client path must not leak import-time warnings
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def _post(args, path: str, payload: dict):
    with _client(args.server) as client:
        return client.post(path, json=payload)


def _fail(resp) -> int:
    try:
        detail = resp.json().get("detail", resp.text)
    except ValueError:
        detail = resp.text
    print(f"error: {detail}", file=sys.stderr)
    return 2


def _cmd_radius(args) -> int:
    resp = _post(
        args,
        "/radius",
        {
            "family": args.family,
            "nu": args.nu,
            "alpha": args.alpha,
            "beta": args.beta,
            "tol": args.tol,
        },
    )
    if resp.status_code != 200:
        return _fail(resp)
    print(json.dumps(resp.json(), sort_keys=True))
    return 0


def _cmd_figure(args) -> int:
    resp = _post(args, "/figure", {"figure_id": args.figure_id, "r_points": args.r_points})
    if resp.status_code != 200:
        return _fail(resp)
    sys.stdout.write(resp.text)
    return 0


def _cmd_zeros(args) -> int:
    resp = _post(
        args,
        "/zeros",
        {"kind": args.kind, "nu": args.nu, "count": args.count, "zero_tol": args.zero_tol},
    )
    if resp.status_code != 200:
        return _fail(resp)
    sys.stdout.write(resp.text)
    return 0


def _cmd_sweep(args) -> int:
    try:
        alphas = [float(a) for a in args.alphas.split(",") if a != ""]
    except ValueError:
        print("error: --alphas must be a comma-separated list of numbers", file=sys.stderr)
        return 2
    resp = _post(
        args,
        "/sweep",
        {
            "family": args.family,
            "nu": args.nu,
            "beta": args.beta,
            "alphas": alphas,
            "tol": args.tol,
        },
    )
    if resp.status_code != 200:
        return _fail(resp)
    sys.stdout.write(resp.text)
    return 0


def _cmd_verify(args) -> int:
    payload: dict = {
        "count": args.count,
        "samples": args.samples,
        "lemma_trials": args.lemma_trials,
        "dual_r_points": args.dual_r_points,
    }
    if args.grid:
        try:
            entries = []
            for spec in args.grid.split(";"):
                family, nu, beta, *alphas = spec.split(",")
                entries.append(
                    {
                        "family": family.strip(),
                        "nu": float(nu),
                        "beta": float(beta),
                        "alphas": [float(a) for a in alphas],
                    }
                )
            payload["entries"] = entries
        except (ValueError, TypeError):
            print(
                "error: --grid format is family,nu,beta,alpha1,alpha2[;...]",
                file=sys.stderr,
            )
            return 2
    if args.interlacing_nus:
        try:
            payload["interlacing_nus"] = [float(v) for v in args.interlacing_nus.split(",")]
        except ValueError:
            print("error: --interlacing-nus must be comma-separated numbers", file=sys.stderr)
            return 2
    resp = _post(args, "/verify", payload)
    if resp.status_code != 200:
        return _fail(resp)
    report = resp.json()
    print(json.dumps(report, sort_keys=True))
    return 0 if report["passed"] else 1


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bessel-radii",
        description="Radii of alpha-convexity of normalized Bessel functions",
    )
    parser.add_argument("--server", default=None, help="service URL (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radius", help="compute one radius of alpha-convexity")
    p.add_argument("--family", required=True, choices=["f", "g", "h"])
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--tol", type=float, default=default_radius_tol())
    p.set_defaults(func=_cmd_radius)

    p = sub.add_parser("figure", help="emit curve CSV reproducing one figure")
    p.add_argument("figure_id", type=int, choices=[1, 2, 3])
    p.add_argument("--r-points", type=int, default=200)
    p.set_defaults(func=_cmd_figure)

    p = sub.add_parser("zeros", help="emit a zero-table CSV")
    p.add_argument("--kind", required=True, choices=["j", "jprime", "dini_g", "dini_h"])
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--zero-tol", type=float, default=1e-12)
    p.set_defaults(func=_cmd_zeros)

    p = sub.add_parser("sweep", help="radius sweep over alpha values (CSV)")
    p.add_argument("--family", required=True, choices=["f", "g", "h"])
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--alphas", required=True, help="comma-separated alpha list")
    p.add_argument("--tol", type=float, default=default_radius_tol())
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("verify", help="run the full verification suite")
    p.add_argument("--grid", default=None, help="family,nu,beta,alpha1,...[;...]")
    p.add_argument("--interlacing-nus", default=None)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--samples", type=int, default=512)
    p.add_argument("--lemma-trials", type=int, default=10_000)
    p.add_argument("--dual-r-points", type=int, default=20)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except httpx.HTTPError as exc:
        print(f"error: cannot reach service: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
