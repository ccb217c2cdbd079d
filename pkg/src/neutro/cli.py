"""``neu``: command-line client for the computation engine.

The CLI talks to the HTTP service.  By default it mounts the service
in-process (no server needed); ``--server URL`` or the ``NEU_SERVER``
environment variable points it at a running instance instead.

Exit codes: 0 success, 1 usage or transport error, 2 domain error (bad
expressions, bad triples, malformed files, failed law or property checks).
Output is byte-deterministic for identical arguments, environment, and seed.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys

import httpx

from .sweep import PropertyResult, SweepReport, render_report

USAGE_EXIT = 1
DOMAIN_EXIT = 2

_CONNECTOR_NAMES = ["not", "and", "or", "xor", "implies", "iff", "nand", "nor"]


class _UsageError(Exception):
    def __init__(self, message: str, usage: str):
        super().__init__(message)
        self.message = message
        self.usage = usage


class _CliError(Exception):
    def __init__(self, message: str, code: int = DOMAIN_EXIT):
        super().__init__(message)
        self.message = message
        self.code = code


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}", self.format_usage())


class _InProcessTransport(httpx.BaseTransport):
    """Serve each request straight through the ASGI app, no network listener."""

    def __init__(self, asgi_app):
        self._asgi = httpx.ASGITransport(app=asgi_app)

    def handle_request(self, request: httpx.Request) -> httpx.Response:
        async def call() -> httpx.Response:
            response = await self._asgi.handle_async_request(request)
            content = await response.aread()
            await response.aclose()
            return httpx.Response(
                status_code=response.status_code,
                headers=response.headers,
                content=content,
                request=request,
            )

        return asyncio.run(call())


def _make_client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=30.0)
    from .service.app import app

    return httpx.Client(
        base_url="http://neutro.internal", transport=_InProcessTransport(app)
    )


def _percent_mode(flag: bool) -> bool:
    return flag or os.environ.get("NEU_PERCENT") == "1"


def _read_json_file(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as handle:
            payload = json.load(handle)
    except OSError as exc:
        raise _CliError(f"cannot read {path!r}: {exc.strerror or exc}")
    except json.JSONDecodeError as exc:
        raise _CliError(
            f"invalid JSON in {path!r}: {exc.msg} (line {exc.lineno} column {exc.colno})"
        )
    if not isinstance(payload, dict):
        raise _CliError(f"{path!r} must contain a JSON object")
    return payload


def _parse_binding(item: str) -> tuple[str, list[float]]:
    name, sep, rest = item.partition("=")
    parts = rest.split(",")
    if not sep or not name or len(parts) != 3:
        raise _CliError(f"invalid binding {item!r}: expected NAME=t,i,f")
    try:
        components = [float(part) for part in parts]
    except ValueError:
        raise _CliError(f"invalid binding {item!r}: components must be numbers")
    return name, components


def _report_failure(response: httpx.Response) -> int:
    try:
        detail = response.json().get("detail")
    except (ValueError, AttributeError):
        detail = None
    if isinstance(detail, dict):
        message = detail.get("message", "invalid input")
        position = detail.get("position")
        where = f" (at offset {position})" if position is not None else ""
        print(f"error: {message}{where}", file=sys.stderr)
    elif isinstance(detail, list) and detail:
        first = detail[0]
        location = ".".join(str(part) for part in first.get("loc", []))
        print(f"error: invalid request at {location}: {first.get('msg')}", file=sys.stderr)
    else:
        print(
            f"error: request failed with status {response.status_code}",
            file=sys.stderr,
        )
    return DOMAIN_EXIT


def _print_warnings(data: dict) -> None:
    for warning in data.get("warnings", []):
        print(f"warning: {warning}", file=sys.stderr)


def _triple_text(data: dict) -> str:
    return f"({data['t']:.6f},{data['i']:.6f},{data['f']:.6f})"


def _cmd_eval(client: httpx.Client, args) -> int:
    bindings = {}
    for item in args.bind or []:
        name, components = _parse_binding(item)
        bindings[name] = components
    response = client.post(
        "/expressions/eval",
        json={
            "expression": args.expression,
            "bindings": bindings,
            "percent": _percent_mode(args.percent),
        },
    )
    if response.status_code != 200:
        return _report_failure(response)
    data = response.json()
    if args.json:
        print(json.dumps(data))
    else:
        print(_triple_text(data))
    return 0


def _cmd_classify(client: httpx.Client, args) -> int:
    payload: dict = {"s": args.s, "i": args.i, "u": args.u}
    if args.table:
        table = _read_json_file(args.table)
        rows = table.get("rows")
        if not isinstance(rows, list):
            raise _CliError(f"{args.table!r} needs a 'rows' array")
        payload["table"] = rows
    response = client.post("/classify", json=payload)
    if response.status_code != 200:
        return _report_failure(response)
    data = response.json()
    if args.json:
        print(json.dumps(data))
    else:
        lo, hi = data["interval"]
        print(
            f"{data['model']} distance={data['distance']:g} interval=[{lo:g},{hi:g}]"
        )
    return 0


def _set_payload(path: str) -> dict:
    payload = _read_json_file(path)
    if "universe" not in payload:
        raise _CliError(f"{path!r} needs a 'universe' array")
    return {
        "universe": payload["universe"],
        "membership": payload.get("membership", {}),
    }


def _cmd_set(client: httpx.Client, args) -> int:
    if args.set_op == "complement":
        body: dict = {"set": _set_payload(args.file)}
    else:
        body = {"left": _set_payload(args.file), "right": _set_payload(args.other)}
    response = client.post(f"/sets/{args.set_op}", json=body)
    if response.status_code != 200:
        return _report_failure(response)
    data = response.json()
    _print_warnings(data)
    if args.set_op == "product":
        print(json.dumps({"pairs": data["pairs"]}))
    else:
        print(json.dumps(data["set"]))
    return 0


def _events_payload(path: str) -> dict:
    payload = _read_json_file(path)
    events = payload.get("events")
    if not isinstance(events, dict):
        raise _CliError(f"{path!r} needs an 'events' object")
    return events


def _cmd_prob(client: httpx.Client, args) -> int:
    if args.prob_op == "chance":
        response = client.post(
            "/probability/chance",
            json={"events": _events_payload(args.file), "name": args.name},
        )
    elif args.prob_op == "combine":
        response = client.post(
            "/probability/combine",
            json={
                "events": _events_payload(args.file),
                "kind": args.kind,
                "a": args.a,
                "b": args.b,
            },
        )
    elif args.prob_op == "resolve":
        response = client.post(
            "/probability/resolve",
            json={
                "accepted": args.accepted,
                "rejected": args.rejected,
                "pending": args.pending,
                "theta": args.theta,
            },
        )
    else:
        response = client.post(
            "/probability/summary", json={"events": _events_payload(args.file)}
        )
    if response.status_code != 200:
        return _report_failure(response)
    data = response.json()
    if args.json:
        print(json.dumps(data))
        return 0
    if args.prob_op in ("chance", "combine"):
        print(_triple_text(data))
    elif args.prob_op == "resolve":
        print(f"accepted={data['accepted']:.6f} rejected={data['rejected']:.6f}")
    else:
        mean = _triple_text(data["mean"])
        minima = ",".join(f"{c:.6f}" for c in data["minima"])
        maxima = ",".join(f"{c:.6f}" for c in data["maxima"])
        print(
            f"count={data['count']} mean={mean} min=({minima}) max=({maxima})"
        )
    return 0


def _cmd_topo(client: httpx.Client, args) -> int:
    if args.topo_op == "complement":
        response = client.post("/topology/complement", json={"p": args.p})
    else:
        response = client.post(
            f"/topology/{args.topo_op}", json={"p": args.p, "q": args.q}
        )
    if response.status_code != 200:
        return _report_failure(response)
    data = response.json()
    if args.json:
        print(json.dumps(data))
    else:
        print(f"{data['parameter']:.6f}")
    return 0


def _cmd_concepts(client: httpx.Client, args) -> int:
    payload = _read_json_file(args.file)
    for key in ("attributes", "A", "AntiA"):
        if key not in payload:
            raise _CliError(f"{args.file!r} needs an {key!r} array")
    response = client.post(
        "/concepts/check",
        json={
            "attributes": payload["attributes"],
            "A": payload["A"],
            "AntiA": payload["AntiA"],
        },
    )
    if response.status_code != 200:
        return _report_failure(response)
    data = response.json()
    if args.json:
        print(json.dumps(data))
        return 0 if data["all_hold"] else DOMAIN_EXIT
    print("non: " + " ".join(data["non"]))
    print("neut: " + " ".join(data["neut"]))
    for law in data["laws"]:
        status = "PASS" if law["holds"] else "FAIL"
        print(f"[{status}] {law['name']}")
    print("all laws hold" if data["all_hold"] else "LAW FAILURES PRESENT")
    return 0 if data["all_hold"] else DOMAIN_EXIT


def _cmd_props(client: httpx.Client, args) -> int:
    response = client.post(
        "/properties/sweep", json={"step": args.step, "seed": args.seed}
    )
    if response.status_code != 200:
        return _report_failure(response)
    data = response.json()
    if args.json:
        print(json.dumps(data))
    else:
        report = SweepReport(
            step=data["step"],
            seed=data["seed"],
            results=tuple(PropertyResult(**entry) for entry in data["results"]),
        )
        print(render_report(report))
    return 0 if data["all_passed"] else DOMAIN_EXIT


def _step_value(text: str) -> float:
    value = float(text)
    if not (0.0 < value <= 0.5):
        raise argparse.ArgumentTypeError("step must be in (0, 0.5]")
    return value


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="neu",
        description="Triple-valued logic engine: evaluate, classify, sweep.",
    )
    parser.add_argument(
        "--server",
        default=None,
        help="URL of a running service (default: run the engine in-process; "
        "NEU_SERVER environment variable works too)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    eval_parser = commands.add_parser(
        "eval",
        help="evaluate an expression",
        epilog="Expression grammar: see GRAMMAR.md. "
        "NEU_PERCENT=1 is equivalent to --percent.",
    )
    eval_parser.add_argument("expression", help="expression text, e.g. 'P & Q'")
    eval_parser.add_argument(
        "--bind",
        action="append",
        metavar="NAME=t,i,f",
        help="bind an atom to a triple (repeatable)",
    )
    eval_parser.add_argument(
        "--percent",
        action="store_true",
        help="read bindings and unsuffixed literals as percent components",
    )
    eval_parser.add_argument(
        "--json", action="store_true", help="full-precision JSON output"
    )
    eval_parser.set_defaults(handler=_cmd_eval)

    classify_parser = commands.add_parser(
        "classify", help="match an assessment against the orientation table"
    )
    classify_parser.add_argument("--s", type=float, required=True, help="supportive %%")
    classify_parser.add_argument(
        "--i", type=float, required=True, help="indeterminate %%"
    )
    classify_parser.add_argument(
        "--u", type=float, required=True, help="unsupportive %%"
    )
    classify_parser.add_argument(
        "--table", default=None, help="JSON file with custom table rows"
    )
    classify_parser.add_argument(
        "--json", action="store_true", help="full-precision JSON output"
    )
    classify_parser.set_defaults(handler=_cmd_classify)

    set_parser = commands.add_parser("set", help="operate on membership sets")
    set_ops = set_parser.add_subparsers(dest="set_op", required=True)
    complement = set_ops.add_parser("complement", help="elementwise negation")
    complement.add_argument("file", help="set JSON file")
    for name, description in (
        ("union", "elementwise weak disjunction"),
        ("intersect", "elementwise conjunction"),
        ("difference", "elementwise difference"),
        ("product", "cartesian product of two sets"),
    ):
        sub = set_ops.add_parser(name, help=description)
        sub.add_argument("file", help="left set JSON file")
        sub.add_argument("other", help="right set JSON file")
    set_parser.set_defaults(handler=_cmd_set)

    prob_parser = commands.add_parser("prob", help="event-space probability")
    prob_ops = prob_parser.add_subparsers(dest="prob_op", required=True)
    chance = prob_ops.add_parser("chance", help="chance triple of one event")
    chance.add_argument("file", help="events JSON file")
    chance.add_argument("name", help="event name")
    combine = prob_ops.add_parser("combine", help="connect one or two events")
    combine.add_argument("file", help="events JSON file")
    combine.add_argument("kind", choices=_CONNECTOR_NAMES, help="connector")
    combine.add_argument("a", help="first event name")
    combine.add_argument("b", nargs="?", default=None, help="second event name")
    resolve = prob_ops.add_parser("resolve", help="resolve a pending pool")
    resolve.add_argument("--accepted", type=float, required=True)
    resolve.add_argument("--rejected", type=float, required=True)
    resolve.add_argument("--pending", type=float, required=True)
    resolve.add_argument("--theta", type=float, required=True)
    summary = prob_ops.add_parser("summary", help="componentwise statistics")
    summary.add_argument("file", help="events JSON file")
    for sub in (chance, combine, resolve, summary):
        sub.add_argument("--json", action="store_true", help="JSON output")
    prob_parser.set_defaults(handler=_cmd_prob)

    topo_parser = commands.add_parser("topo", help="parameterized open sets")
    topo_ops = topo_parser.add_subparsers(dest="topo_op", required=True)
    for name, arity in (("union", 2), ("intersect", 2), ("complement", 1)):
        sub = topo_ops.add_parser(name, help=f"{name} of open-set parameters")
        sub.add_argument("p", type=float, help="first parameter in [0,1]")
        if arity == 2:
            sub.add_argument("q", type=float, help="second parameter in [0,1]")
        sub.add_argument("--json", action="store_true", help="JSON output")
    topo_parser.set_defaults(handler=_cmd_topo)

    concepts_parser = commands.add_parser(
        "concepts", help="concept algebra law checking"
    )
    concept_ops = concepts_parser.add_subparsers(dest="concepts_op", required=True)
    check = concept_ops.add_parser("check", help="verify all laws over a universe")
    check.add_argument("file", help="concepts JSON file")
    check.add_argument("--json", action="store_true", help="JSON output")
    concepts_parser.set_defaults(handler=_cmd_concepts)

    props_parser = commands.add_parser(
        "props", help="run the algebraic property sweep"
    )
    props_parser.add_argument(
        "--step", type=_step_value, default=0.01, help="grid step in (0, 0.5]"
    )
    props_parser.add_argument("--seed", type=int, default=0, help="random seed")
    props_parser.add_argument(
        "--json", action="store_true", help="JSON report output"
    )
    props_parser.set_defaults(handler=_cmd_props)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc.usage, end="", file=sys.stderr)
        print(exc.message, file=sys.stderr)
        return USAGE_EXIT
    except SystemExit as exc:  # --help
        code = exc.code
        return code if isinstance(code, int) else 0
    server = args.server or os.environ.get("NEU_SERVER") or None
    try:
        with _make_client(server) as client:
            return args.handler(client, args)
    except _CliError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return exc.code
    except httpx.TransportError as exc:
        print(f"error: cannot reach server: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    raise SystemExit(main())
