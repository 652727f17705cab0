"""Command-line client for the spherezone service.

The CLI is a thin HTTP client.  By default it talks to an in-process
instance of the FastAPI app; ``--server URL`` points it at a running one.

Exit codes: 0 success, 1 usage error, 2 degenerate input, 3 internal
consistency failure (a failed identity), 4 headline finding (the proven
C(L) <= 5 bound violated; expected unreachable).
"""

from __future__ import annotations

import json
import sys

import click

EXIT_USAGE = 1
EXIT_DEGENERATE = 2
EXIT_INCONSISTENT = 3
EXIT_HEADLINE = 4

_CODE_EXITS = {
    "degenerate-input": EXIT_DEGENERATE,
    "internal-consistency": EXIT_INCONSISTENT,
    "headline-finding": EXIT_HEADLINE,
}


class Client:
    def __init__(self, server=None):
        if server:
            import httpx

            self._client = httpx.Client(base_url=server, timeout=600.0)
        else:
            from fastapi.testclient import TestClient

            from .service import app

            self._client = TestClient(app)

    def call(self, method, path, **kwargs):
        resp = self._client.request(method, path, **kwargs)
        if resp.status_code >= 400:
            detail = {}
            try:
                detail = resp.json().get("detail", {})
            except ValueError:
                pass
            if isinstance(detail, dict) and "code" in detail:
                click.echo(f"error: {detail.get('message', '')}", err=True)
                sys.exit(_CODE_EXITS.get(detail["code"], EXIT_USAGE))
            click.echo(f"error: HTTP {resp.status_code}: {resp.text}",
                       err=True)
            sys.exit(EXIT_USAGE)
        return resp.json()


def _source_payload(document, n, bound, seed, example=None):
    if example:
        return {"example": example}
    if document:
        with open(document) as fh:
            return {"document": json.load(fh)}
    if n is None:
        raise click.UsageError("provide --doc PATH or --n N (or an example)")
    return {"random": {"n": n, "bound": bound, "seed": seed}}


def _emit(data, fmt, out, table_fn=None):
    if fmt == "json":
        text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    else:
        text = table_fn(data) if table_fn else json.dumps(data, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _common(fn):
    fn = click.option("--doc", "document", type=click.Path(exists=True),
                      default=None, help="Line-set document (JSON).")(fn)
    fn = click.option("--n", type=int, default=None,
                      help="Random arrangement size.")(fn)
    fn = click.option("--bound", type=int, default=50, show_default=True)(fn)
    fn = click.option("--seed", type=int, default=0, show_default=True)(fn)
    return fn


def _output(fn):
    fn = click.option("--format", "fmt", type=click.Choice(["json", "table"]),
                      default="table", show_default=True)(fn)
    fn = click.option("--out", type=click.Path(), default=None,
                      help="Write output to a file instead of stdout.")(fn)
    return fn


@click.group()
@click.option("--server", default=None,
              help="Base URL of a running service; default is in-process.")
@click.pass_context
def main(ctx, server):
    """Exact zone complexity and discharging for line arrangements."""
    ctx.obj = Client(server)


@main.command()
@_common
@_output
@click.pass_obj
def build(client, document, n, bound, seed, fmt, out):
    """Build an arrangement and report its counts and f-vector."""
    data = client.call("POST", "/build",
                       json=_source_payload(document, n, bound, seed))

    def table(d):
        lines = [
            f"n = {d['n']}  ring = {d['ring']}",
            f"sphere      V={d['sphere']['V']} E={d['sphere']['E']} "
            f"F={d['sphere']['F']}",
            f"projective  V={d['projective']['V']} E={d['projective']['E']} "
            f"F={d['projective']['F']}",
            "f-vector    " + "  ".join(
                f"f{k}={v}" for k, v in sorted(d["f_vector"].items())),
        ]
        return "\n".join(lines) + "\n"

    _emit(data, fmt, out, table)


@main.command()
@_common
@_output
@click.pass_obj
def zones(client, document, n, bound, seed, fmt, out):
    """Per-line zone complexities C(l), r(l), and C(L)."""
    data = client.call("POST", "/zones",
                       json=_source_payload(document, n, bound, seed))

    def table(d):
        rows = [f"C(L) = {d['C_L']}"]
        for item in d["per_line"]:
            rows.append(
                f"line {item['line']:>2}: C(l)={item['C_l']:>4} "
                f"r(l)={item['r_l']} C(l)/(n-1)={item['ratio']:.3f}"
            )
        rows.append(f"zone theorem bound ok: {d['zone_theorem_ok']}; "
                    f"r(l) <= 7 ok: {d['r_bound_ok']}")
        return "\n".join(rows) + "\n"

    _emit(data, fmt, out, table)


@main.command("vertex-zones")
@_common
@_output
@click.pass_obj
def vertex_zones(client, document, n, bound, seed, fmt, out):
    """Per-vertex K_v and C(v)."""
    data = client.call("POST", "/vertex-zones",
                       json=_source_payload(document, n, bound, seed))

    def table(d):
        rows = [f"C(L) = {d['C_L']}", "vertex type census:"]
        for k, v in sorted(d["type_census"].items()):
            rows.append(f"  {{{k}}}: {v}")
        for item in d["per_vertex"]:
            rows.append(
                f"v{item['vertex']:>3} lines {item['line_pair']}: "
                f"K_v={item['K_v']} C(v)={item['C_v']}"
            )
        return "\n".join(rows) + "\n"

    _emit(data, fmt, out, table)


@main.command()
@_common
@_output
@click.pass_obj
def discharge(client, document, n, bound, seed, fmt, out):
    """Run the three discharging stages and report exact charge totals."""
    data = client.call("POST", "/discharge",
                       json=_source_payload(document, n, bound, seed))

    def table(d):
        return (
            f"totals: w1={d['totals']['w1']} w2={d['totals']['w2']} "
            f"w3={d['totals']['w3']} (conserved: {d['conserved']})\n"
            f"min w2 = {d['min_w2']}, min w3 = {d['min_w3']}\n"
            f"negative-w2 vertices: {d['negative_w2']}, donors: {d['donors']}, "
            f"low-complexity witnesses: {d['theorem_witnesses']}\n"
        )

    _emit(data, fmt, out, table)


@main.command()
@click.option("--cap", type=int, default=12, show_default=True)
@_output
@click.pass_obj
def lemma(client, cap, fmt, out):
    """Enumerate the negative 4-multisets of the deficiency lemma."""
    data = client.call("GET", "/lemma", params={"cap": cap})

    def table(d):
        rows = [f"cap = {d['cap']}"]
        for k in d["multisets"]:
            rows.append("  {" + ",".join(map(str, k)) + "}")
        return "\n".join(rows) + "\n"

    _emit(data, fmt, out, table)


@main.command()
@_common
@_output
@click.pass_obj
def verify(client, document, n, bound, seed, fmt, out):
    """Check every zone identity plus the theorem bounds; exit 3 on failure."""
    data = client.call("POST", "/verify",
                       json=_source_payload(document, n, bound, seed))

    def table(d):
        rows = [f"C(L) = {d['C_L']} (bound 5: {'ok' if d['theorem_ok'] else 'VIOLATED'})"]
        for key, okflag in sorted(d["identities"].items()):
            rows.append(f"  {key}: {'ok' if okflag else 'FAIL'}")
        rows.append(f"zone theorem: {'ok' if d['zone_theorem_ok'] else 'FAIL'}; "
                    f"r(l) <= 7: {'ok' if d['r_bound_ok'] else 'FAIL'}")
        return "\n".join(rows) + "\n"

    _emit(data, fmt, out, table)
    if not data["identities_ok"]:
        sys.exit(EXIT_INCONSISTENT)
    if not (data["theorem_ok"] and data["r_bound_ok"]):
        sys.exit(EXIT_HEADLINE)


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--trials", type=int, default=10, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--bound", type=int, default=50, show_default=True)
@click.option("--strategy", type=click.Choice(["random", "hillclimb"]),
              default="random", show_default=True)
@_output
@click.pass_obj
def search(client, n, trials, seed, bound, strategy, fmt, out):
    """Randomized search for large C(L)."""
    data = client.call("POST", "/search",
                       params={"n": n, "trials": trials, "seed": seed,
                               "bound": bound, "strategy": strategy})

    def table(d):
        rows = [f"max C(L) = {d['max_C_L']} (best seed {d['best_seed']})"]
        for rec in d["records"]:
            flag = " *" if rec["best_so_far"] else ""
            rows.append(f"  seed {rec['seed']}: C(L)={rec['C_L']}"
                        f" [{rec['runtime']*1000:.0f} ms]{flag}")
        return "\n".join(rows) + "\n"

    _emit(data, fmt, out, table)


@main.command("stats-q1")
@click.option("--n", type=int, required=True)
@click.option("--trials", type=int, default=10, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--bound", type=int, default=50, show_default=True)
@_output
@click.pass_obj
def stats_q1(client, n, trials, seed, bound, fmt, out):
    """Average line-zone ratio statistics (Question-1 evidence)."""
    data = client.call("POST", "/stats-q1",
                       params={"n": n, "trials": trials, "seed": seed,
                               "bound": bound})

    def table(d):
        rows = [
            f"mean ratio = {d['mean']:.4f}, max = {d['max']:.4f} "
            f"(per-line bound ok: {d['per_line_bound_ok']})",
            "histogram:",
        ]
        for k, v in sorted(d["histogram"].items(), key=lambda kv: float(kv[0])):
            rows.append(f"  {k}: {v}")
        return "\n".join(rows) + "\n"

    _emit(data, fmt, out, table)


@main.command()
@click.argument("name", type=click.Choice(["icosahedral"]))
@_output
@click.pass_obj
def example(client, name, fmt, out):
    """Emit a verified named example as a document plus its census."""
    data = client.call("GET", f"/example/{name}")

    def table(d):
        c = d["census"]
        rows = [
            f"vertices: {c['vertices']}, C(L) = {c['C_L']}",
            "f-vector: " + "  ".join(
                f"f{k}={v}" for k, v in sorted(c["f_vector"].items())),
            "vertex types: " + "  ".join(
                f"{{{k}}}x{v}" for k, v in sorted(c["vertex_types"].items())),
            json.dumps(d["document"], indent=2, sort_keys=True),
        ]
        return "\n".join(rows) + "\n"

    _emit(data, fmt, out, table)


@main.command()
@_common
@click.option("--example", "example_name",
              type=click.Choice(["icosahedral"]), default=None)
@click.option("--tint/--no-tint", default=False, show_default=True)
@click.option("--labels/--no-labels", default=False, show_default=True,
              help="Label vertices with C(v).")
@click.option("--size", type=int, default=600, show_default=True)
@click.option("--out", type=click.Path(), default=None)
@click.pass_obj
def render(client, document, n, bound, seed, example_name, tint, labels,
           size, out):
    """Render the projective arrangement as a deterministic SVG."""
    payload = {
        "source": _source_payload(document, n, bound, seed, example_name),
        "tint_faces": tint,
        "label_complexities": labels,
        "size": size,
    }
    data = client.call("POST", "/render", json=payload)
    svg = data["svg"]
    if out:
        with open(out, "w") as fh:
            fh.write(svg)
    else:
        click.echo(svg, nl=False)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("spherezone.service:app", host=host, port=port)


def entrypoint():
    try:
        main(standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        sys.exit(EXIT_USAGE)
    except click.Abort:
        sys.exit(EXIT_USAGE)


if __name__ == "__main__":
    entrypoint()
