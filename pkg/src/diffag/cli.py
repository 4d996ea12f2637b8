"""Command-line front end.

Exit status: 0 on success, 1 on decoding failure, 2 on usage or build errors.
Vectors are read as integer-encoded field elements separated by newlines,
commas or spaces, and written as one comma-separated line.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import analysis, codedata, goppa, oracle
from .codedata import CodeData, CodeDataError
from .decoder import DecodingFailure, format_trace, run
from .field import FieldError
from .hermitian import build_hermitian


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- file helpers ----------------------------------------------------------

def load_code(path: str):
    """A CodeData or a GoppaCode, depending on the file's kind."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    kind = doc.get("kind") if isinstance(doc, dict) else None
    if kind == "goppa":
        return goppa.from_description(doc)
    if kind == "codedata":
        return codedata.from_document(doc)
    raise UsageError(f"{path}: unknown file kind {kind!r}")


def read_vector(path: str) -> list[int]:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def fmt_vector(v) -> str:
    return ",".join(str(a) for a in v)


def _write(text: str, path: str | None):
    if path in (None, "-"):
        sys.stdout.write(text + "\n")
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def _codedata(code) -> CodeData:
    return goppa.goppa_codedata(code) if isinstance(code, goppa.GoppaCode) else code


# -- decoding shared by decode and simulate --------------------------------

def decode_word(code, v, trace=False):
    """(codeword, iterations, max_degree, trace_lines)."""
    if isinstance(code, goppa.GoppaCode):
        st = goppa.goppa_run(code, v, trace=trace)
        lines = goppa.format_trace(code, st).splitlines() if trace else []
        return st.output, st.iterations, st.max_degree, lines
    st = run(code, v, trace=trace)
    lines = format_trace(st.trace) if trace else []
    return st.codeword, st.iterations, st.max_degree, lines


def simulate_trial(code, index: int, seed: int, max_errors: int) -> dict:
    trial_seed = seed + index
    rng = oracle.SplitMix64(trial_seed)
    msg = oracle.random_message(code, rng)
    c = oracle.encode(code, msg)
    w = rng.below(max_errors + 1)
    v, _ = oracle.add_errors(c, w, rng, code.field, oracle.error_values(code))
    try:
        out, iters, maxdeg, _ = decode_word(code, v)
        outcome = "exact" if out == c else "miscorrect"
    except DecodingFailure:
        outcome, iters, maxdeg = "failure", None, None
    return {"seed": trial_seed, "wt": w, "outcome": outcome,
            "iterations": iters, "max_degree": maxdeg}


def _trial_job(args):
    path, index, seed, max_errors = args
    return simulate_trial(load_code(path), index, seed, max_errors)


# -- subcommands -----------------------------------------------------------

def cmd_build_hermitian(a):
    prim = _ints(a.prim) if a.prim else None
    code = build_hermitian(a.q, a.gO, a.gQ, prim=prim)
    _write(codedata.serialize(code), a.output)
    return 0


def cmd_goppa_build(a):
    q, m = a.q, a.m
    g = _ints(a.g)
    prim = _ints(a.prim) if a.prim else None
    from .field import field_of_order
    F = field_of_order(q ** m, prim)
    L = goppa.parse_L(a.L, F)
    desc = {"kind": "goppa", "q": q, "m": m, "prim": list(F.prim), "L": L,
            "g": g, "squared": bool(a.square)}
    code = goppa.from_description(desc)
    _write(goppa.serialize(code), a.output)
    return 0


def cmd_params(a):
    code = load_code(a.file)
    print(analysis.params_report(_codedata(code)))
    return 0


def cmd_encode(a):
    code = load_code(a.file)
    msg = read_vector(a.msgfile)
    try:
        cw = oracle.encode(code, msg)
    except oracle.OracleError as exc:
        raise UsageError(str(exc)) from exc
    print(fmt_vector(cw))
    return 0


def cmd_decode(a):
    code = load_code(a.file)
    v = read_vector(a.vfile)
    if len(v) != code.n:
        raise UsageError(f"received word has length {len(v)}, expected {code.n}")
    try:
        out, _, _, lines = decode_word(code, v, trace=a.trace)
    except DecodingFailure as exc:
        if a.trace and getattr(exc, "trace", None):
            for line in format_trace(exc.trace):
                print(line, file=sys.stderr)
        print(str(exc), file=sys.stderr)
        return 1
    if a.trace:
        for line in lines:
            print(line, file=sys.stderr)
    print(fmt_vector(out))
    return 0


def cmd_simulate(a):
    code = load_code(a.file)
    if a.max_errors < 0 or a.max_errors > code.n:
        raise UsageError(f"--max-errors must lie in 0..{code.n}")
    if a.jobs > 1:
        jobs = [(a.file, i, a.seed, a.max_errors) for i in range(a.trials)]
        with ProcessPoolExecutor(max_workers=a.jobs) as pool:
            rows = list(pool.map(_trial_job, jobs, chunksize=16))
    else:
        rows = [simulate_trial(code, i, a.seed, a.max_errors) for i in range(a.trials)]
    for r in rows:
        print(json.dumps(r))
    return 0


def cmd_verify(a):
    code = load_code(a.file)
    cd = _codedata(code)
    codedata.validate(cd)
    d, tau = analysis.d_omega_tau(cd)
    problems = analysis.check_nu_lower_bound(cd) + analysis.check_capacity_sandwiches(cd)
    problems += analysis.check_tau_identities(cd)
    for p in problems:
        print(p, file=sys.stderr)
    if problems:
        return 2
    print(f"ok: n = {cd.n}, k = {cd.k}, d_Omega = {d}, tau = {tau}")
    return 0


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError as exc:
        raise UsageError(f"expected integers: {text!r}") from exc


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="diffag", description="Differential AG code builder, decoder and analysis.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build-hermitian", help="build code data for a Hermitian code")
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--gO", type=int, required=True, help="multiplicity of the origin in G")
    b.add_argument("--gQ", type=int, required=True, help="multiplicity of the point at infinity")
    b.add_argument("--prim", help="primitive polynomial coefficients, ascending")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_build_hermitian)

    g = sub.add_parser("goppa-build", help="write a Goppa code description")
    g.add_argument("--q", type=int, required=True, help="subfield order")
    g.add_argument("--m", type=int, required=True, help="extension degree")
    g.add_argument("--g", required=True, help="Goppa polynomial coefficients, ascending")
    g.add_argument("--L", required=True, help="'all' or a list of field elements")
    g.add_argument("--square", action="store_true", help="use g^2 (binary, separable g)")
    g.add_argument("--prim")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_goppa_build)

    pa = sub.add_parser("params", help="print the capacity table and bounds")
    pa.add_argument("file")
    pa.set_defaults(func=cmd_params)

    e = sub.add_parser("encode", help="encode a message (k lines, descending s)")
    e.add_argument("file")
    e.add_argument("msgfile")
    e.set_defaults(func=cmd_encode)

    d = sub.add_parser("decode", help="decode a received word")
    d.add_argument("file")
    d.add_argument("vfile")
    d.add_argument("--trace", action="store_true", help="write the iteration trace to stderr")
    d.set_defaults(func=cmd_decode)

    s = sub.add_parser("simulate", help="seeded decoding trials, one JSON line each")
    s.add_argument("file")
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--max-errors", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_simulate)

    v = sub.add_parser("verify", help="check all code data invariants")
    v.add_argument("file")
    v.set_defaults(func=cmd_verify)
    return p


def run_cli(argv=None) -> int:
    try:
        args = make_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (CodeDataError, FieldError, analysis.AnalysisError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
