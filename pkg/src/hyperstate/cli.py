"""Batch command-line front end.

Subcommands: state, circuit, operators, squeeze, sweep, agarwal-tara,
coherence, reproduce.  Output defaults to human-readable tables; --format
csv|json switches to machine forms, --out redirects to a file.  Exit
codes: 0 success, 1 user error, 2 computation guard violation (and a
failed reproduction).  Errors print one line to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import __version__, reproduce as reproduce_mod
from .coherence import BASES, coherence_report
from .errors import GuardError
from .hypergraph import Hypergraph, parse_edges
from .moments import agarwal_tara, m_moment, mu_moment
from .operators import (
    apply_phase_operator,
    gershgorin_bound,
    number_phase_commutator_dense,
    phase_operator_dense,
    verify_structure,
)
from .reference_tables import witness_discrepancies
from .squeezing import squeeze_report
from .state import circuit_text, emit_circuit, hypergraph_state
from .sweep import (
    METRIC_NAMES,
    Family,
    cached_sweep,
    render_results,
    resolve_cache_dir,
)

SQUEEZE_FIELDS = ("d", "edges", "mean_n", "var_n", "mean_p", "var_p", "half_comm", "s_n", "s_p")
COHERENCE_FIELDS = ("d", "edges", "basis", "c_l1", "c_rel_ent")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="hyperstate", description=__doc__)
    parser.add_argument("--version", action="version", version=f"hyperstate {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p: _Parser) -> None:
        p.add_argument("--format", choices=("table", "csv", "json"), default="table")
        p.add_argument("--out", help="write the payload to this path instead of stdout")

    p_state = sub.add_parser("state", help="amplitudes of a hypergraph state")
    p_state.add_argument("--d", type=int, required=True)
    p_state.add_argument("--edges", default="", help="edge list, e.g. '0,3;0,2,3;1,2,3'")
    add_output(p_state)

    p_circuit = sub.add_parser("circuit", help="generating circuit of a hypergraph state")
    p_circuit.add_argument("--d", type=int, required=True)
    p_circuit.add_argument("--edges", default="")
    add_output(p_circuit)

    p_ops = sub.add_parser("operators", help="structural checks of the phase operators")
    p_ops.add_argument("--d", type=int, required=True)
    p_ops.add_argument("--check-all", action="store_true",
                       help="also run the spectral and FFT agreement checks")
    add_output(p_ops)

    p_squeeze = sub.add_parser("squeeze", help="number/phase squeezing report")
    p_squeeze.add_argument("--d", type=int, required=True)
    p_squeeze.add_argument("--edges", default="")
    add_output(p_squeeze)

    p_sweep = sub.add_parser("sweep", help="evaluate a hypergraph family exhaustively")
    p_sweep.add_argument("--family", choices=("dminus1", "complete-k", "single-full"),
                         required=True)
    p_sweep.add_argument("--d", type=int, required=True)
    p_sweep.add_argument("--k", type=int, help="edge size for complete-k")
    p_sweep.add_argument("--metric", choices=METRIC_NAMES, action="append",
                         help="metric to summarize (repeatable; default all)")
    p_sweep.add_argument("--connected", choices=("auto", "on", "off"), default="auto",
                         help="connectivity filter (auto: on for dminus1)")
    p_sweep.add_argument("--threads", type=int, default=1)
    p_sweep.add_argument("--cache-dir", help="cache directory (default $HYPERSTATE_CACHE)")
    add_output(p_sweep)

    p_at = sub.add_parser("agarwal-tara", help="moment-determinant nonclassicality witness")
    p_at.add_argument("--d", type=int, required=True)
    p_at.add_argument("--n", type=int, required=True)
    p_at.add_argument("--exact", action="store_true", help="also print exact fractions")
    add_output(p_at)

    p_coh = sub.add_parser("coherence", help="l1 and relative-entropy coherence")
    p_coh.add_argument("--d", type=int, required=True)
    p_coh.add_argument("--edges", default="")
    p_coh.add_argument("--basis", choices=BASES, default="number")
    add_output(p_coh)

    p_rep = sub.add_parser("reproduce", help="recompute and compare every published table")
    p_rep.add_argument("--extended", action="store_true",
                       help="include the d=9..12 sweeps and the remaining table rows")
    p_rep.add_argument("--threads", type=int, default=1)
    p_rep.add_argument("--plot-dir", help="also write metric-vs-d series files here")
    p_rep.add_argument("--format", choices=("table", "json"), default="table")
    p_rep.add_argument("--out")

    return parser


def _emit(payload: str, out: str | None) -> None:
    if out:
        Path(out).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)


def emit_plot_data(series: Sequence[tuple[float, float]], path: str, name: str = "series") -> None:
    """Write one two-column (x, y) series as plot-ready whitespace text."""
    lines = [f"# {name}"]
    lines.extend(f"{x:g} {y!r}" for x, y in series)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def _fmt(value: float | None, precision: str = ".6g") -> str:
    if value is None:
        return "undefined"
    return format(value, precision)


def _aligned(pairs: list[tuple[str, str]]) -> str:
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in pairs) + "\n"


def _csv_row(fields: Sequence[str], values: Sequence) -> str:
    import csv
    import io

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(fields)
    writer.writerow(["" if v is None else (v if isinstance(v, str) else repr(v)) for v in values])
    return buffer.getvalue()


def _hypergraph(args: argparse.Namespace) -> Hypergraph:
    return Hypergraph(args.d, parse_edges(args.edges))


def _cmd_state(args: argparse.Namespace) -> int:
    psi = hypergraph_state(_hypergraph(args))
    if args.format == "json":
        payload = json.dumps([[a.real, a.imag] for a in psi]) + "\n"
    elif args.format == "csv":
        import csv
        import io

        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(("n", "re", "im"))
        for n, a in enumerate(psi):
            writer.writerow((n, repr(float(a.real)), repr(float(a.imag))))
        payload = buffer.getvalue()
    else:
        rows = [(f"|{n}>", f"{a.real:+.10f}{a.imag:+.10f}j") for n, a in enumerate(psi)]
        payload = _aligned(rows)
    _emit(payload, args.out)
    return 0


def _cmd_circuit(args: argparse.Namespace) -> int:
    circ = emit_circuit(_hypergraph(args))
    if args.format == "json":
        payload = json.dumps(
            {"d": circ.d, "gates": [[kind, list(qs)] for kind, qs in circ.gates]}
        ) + "\n"
    elif args.format == "csv":
        import csv
        import io

        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(("gate", "qubits"))
        for kind, qs in circ.gates:
            writer.writerow((kind, " ".join(str(q) for q in qs)))
        payload = buffer.getvalue()
    else:
        payload = circuit_text(circ) + "\n"
    _emit(payload, args.out)
    return 0


def _cmd_operators(args: argparse.Namespace) -> int:
    dim = 1 << args.d
    phase_op = phase_operator_dense(dim)
    comm = number_phase_commutator_dense(dim)
    report: dict = {
        "dim": dim,
        "gershgorin_bound": gershgorin_bound(dim),
        "phase_operator": verify_structure(phase_op).to_dict(),
        "number_phase_commutator": verify_structure(comm).to_dict(),
    }
    if args.check_all:
        import numpy as np

        from .operators import phase_angles

        n = np.arange(dim)
        fourier = np.exp(2j * np.pi * np.outer(n, n) / dim) / np.sqrt(dim)
        spectral = (fourier * phase_angles(dim)) @ fourier.conj().T
        rng = np.random.default_rng(7)
        state = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        state /= np.linalg.norm(state)
        eigenvalues = np.linalg.eigvalsh(1j * comm)
        radius = float(np.max(np.abs(eigenvalues)))
        row_sum = float(np.max(np.sum(np.abs(comm), axis=1)))
        report["check_all"] = {
            "spectral_sum_max_error": float(np.max(np.abs(phase_op - spectral))),
            "fft_vs_dense_max_error": float(
                np.max(np.abs(apply_phase_operator(state) - phase_op @ state))
            ),
            "spectral_radius": radius,
            "row_sum_bound": row_sum,
            "eigenvalues_within_row_sum": bool(radius <= row_sum * (1.0 + 1e-12)),
            "eigenvalues_within_stated_formula": bool(radius <= gershgorin_bound(dim)),
            "commutator_diagonal_max": float(np.max(np.abs(np.diag(comm)))),
        }
    if args.format == "json":
        payload = json.dumps(report, indent=2) + "\n"
    elif args.format == "csv":
        pairs = _flatten("", report)
        payload = "key,value\n" + "\n".join(f"{k},{v}" for k, v in pairs) + "\n"
    else:
        pairs = _flatten("", report)
        payload = _aligned([(k, str(v)) for k, v in pairs])
    _emit(payload, args.out)
    return 0


def _flatten(prefix: str, tree: dict) -> list[tuple[str, object]]:
    pairs: list[tuple[str, object]] = []
    for key, value in tree.items():
        name = f"{prefix}.{key}" if prefix else key
        if isinstance(value, dict):
            pairs.extend(_flatten(name, value))
        else:
            pairs.append((name, value))
    return pairs


def _cmd_squeeze(args: argparse.Namespace) -> int:
    report = squeeze_report(_hypergraph(args))
    data = report.to_dict()
    if args.format == "json":
        payload = json.dumps({k: data[k] for k in SQUEEZE_FIELDS}) + "\n"
    elif args.format == "csv":
        payload = _csv_row(SQUEEZE_FIELDS, [data[k] for k in SQUEEZE_FIELDS])
    else:
        payload = _aligned(
            [(k, data[k] if isinstance(data[k], (str, int)) else _fmt(data[k]))
             for k in SQUEEZE_FIELDS]
        )
    _emit(payload, args.out)
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    if args.family == "complete-k" and args.k is None:
        raise _UsageError("--family complete-k requires --k")
    family = Family(args.family, args.d, args.k)
    connectivity = {"auto": None, "on": True, "off": False}[args.connected]
    records, summary = cached_sweep(
        family,
        metrics=args.metric,
        connectivity_filter=connectivity,
        threads=args.threads,
        cache_dir=resolve_cache_dir(args.cache_dir),
    )
    if args.format in ("csv", "json") and args.out:
        from .sweep import write_results

        write_results(records, args.out, args.format)
        sys.stdout.write(_summary_text(summary))
        return 0
    if args.format == "json":
        payload = json.dumps(
            {
                "records": json.loads(render_results(records, "json")),
                "summary": summary.to_dict(),
            },
            indent=2,
        ) + "\n"
        _emit(payload, args.out)
    elif args.format == "csv":
        _emit(render_results(records, "csv"), args.out)
    else:
        lines = [f"{'d':>2} {'edges':<40} " + " ".join(f"{m:>12}" for m in METRIC_NAMES)]
        for record in records:
            lines.append(
                f"{record.d:>2} {record.edges:<40} "
                + " ".join(f"{_fmt(record.metrics[m]):>12}" for m in METRIC_NAMES)
            )
        payload = "\n".join(lines) + "\n\n" + _summary_text(summary)
        _emit(payload, args.out)
    return 0


def _summary_text(summary) -> str:
    lines = [f"family {summary.family}: {summary.count} configurations"]
    for name, metric in summary.metrics.items():
        lines.append(
            f"  {name}: min={_fmt(metric.min_value)} at {list(metric.argmin)}"
            f" | max={_fmt(metric.max_value)} at {list(metric.argmax)}"
        )
    return "\n".join(lines) + "\n"


def _cmd_agarwal_tara(args: argparse.Namespace) -> int:
    result = agarwal_tara(args.d, args.n)
    discrepancies = witness_discrepancies(d=args.d, n=args.n)
    data = {
        "d": result.d,
        "n": result.n,
        "det_m": float(result.det_m),
        "det_mu": float(result.det_mu),
        "a_n": float(result.a_n),
        "paper_discrepancies": [disc.describe() for disc in discrepancies],
    }
    if args.exact:
        data["det_m_exact"] = str(result.det_m)
        data["det_mu_exact"] = str(result.det_mu)
        data["a_n_exact"] = str(result.a_n)
    if args.format == "json":
        payload = json.dumps(data, indent=2) + "\n"
    elif args.format == "csv":
        fields = ("d", "n", "det_m", "det_mu", "a_n")
        payload = _csv_row(fields, [data[k] for k in fields])
    else:
        pairs = [("d", str(result.d)), ("n", str(result.n))]
        for key in ("det_m", "det_mu", "a_n"):
            text = _fmt(data[key], ".10g")
            if args.exact:
                text += f"  (= {data[key + '_exact']})"
            pairs.append((key, text))
        moments_used = 2 * args.n - 2
        pairs.append(("moments", ", ".join(
            f"m_{k}={_fmt(float(m_moment(args.d, k)))}" for k in range(1, moments_used + 1)
        )))
        pairs.append(("number moments", ", ".join(
            f"mu_{k}={_fmt(float(mu_moment(args.d, k)))}" for k in range(1, moments_used + 1)
        )))
        payload = _aligned(pairs)
        for disc in discrepancies:
            payload += f"note: {disc.describe()}\n"
    _emit(payload, args.out)
    return 0


def _cmd_coherence(args: argparse.Namespace) -> int:
    report = coherence_report(_hypergraph(args), args.basis)
    data = report.to_dict()
    if args.format == "json":
        payload = json.dumps({k: data[k] for k in COHERENCE_FIELDS}) + "\n"
    elif args.format == "csv":
        payload = _csv_row(COHERENCE_FIELDS, [data[k] for k in COHERENCE_FIELDS])
    else:
        payload = _aligned(
            [(k, data[k] if isinstance(data[k], (str, int)) else _fmt(data[k], ".10g"))
             for k in COHERENCE_FIELDS]
        )
    _emit(payload, args.out)
    return 0


def _cmd_reproduce(args: argparse.Namespace) -> int:
    runner = reproduce_mod.Reproducer(extended=args.extended, threads=args.threads)
    results = runner.run()
    if args.plot_dir:
        plot_dir = Path(args.plot_dir)
        plot_dir.mkdir(parents=True, exist_ok=True)
        for name, series in runner.plot_series().items():
            emit_plot_data(series, str(plot_dir / f"{name}.dat"), name=name)
    if args.format == "json":
        payload = json.dumps([r.to_dict() for r in results], indent=2) + "\n"
    else:
        payload = reproduce_mod.render_text(results)
    _emit(payload, args.out)
    return 0 if all(r.status == "PASS" for r in results) else 2


_COMMANDS = {
    "state": _cmd_state,
    "circuit": _cmd_circuit,
    "operators": _cmd_operators,
    "squeeze": _cmd_squeeze,
    "sweep": _cmd_sweep,
    "agarwal-tara": _cmd_agarwal_tara,
    "coherence": _cmd_coherence,
    "reproduce": _cmd_reproduce,
}


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv and execute one subcommand, returning the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return 1
    except GuardError as exc:
        print(f"error: guard: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
