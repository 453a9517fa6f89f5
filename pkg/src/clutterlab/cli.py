"""Command-line front end.

Hypergraph files are either JSON (``{"n": 3, "edges": [[1, 2], ...]}``) or
plain text: a first line ``n m`` followed by m lines of 1-based vertex
indices.  Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, TextIO

from clutterlab.exact_linalg import format_vector
from clutterlab.hypergraph import Hypergraph, HypergraphError, blocker, koenig, make_simple
from clutterlab.ideals import (
    closure_gens,
    closure_membership,
    cover_ideal,
    edge_ideal,
    is_normal_up_to,
    power,
    symbolic_membership,
    symbolic_power_gens,
)
from clutterlab.polytope import extreme_points, is_fulkersonian
from clutterlab.verify import (
    PASS,
    corpus_json,
    default_corpus,
    dumps,
    full_report,
    is_mengerian_bounded,
    verify_fulkerson,
    verify_gvv,
    verify_menger,
)

COMMANDS = (
    "analyze", "blocker", "vertices", "fulkersonian", "mengerian", "koenig", "power",
    "symbolic", "closure-member", "closure-gens", "normal", "verify", "corpus",
)


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class InstanceFile:
    path: Path
    H: Hypergraph
    name: str


@dataclass(frozen=True)
class RunConfig:
    command: str
    path: Optional[str] = None
    B: int = 2
    kmax: int = 3
    K: Optional[int] = None
    k: int = 1
    monomial: Optional[str] = None
    theorem: str = "fulkerson"
    ideal: str = "edge"
    json: bool = False
    assert_mode: bool = False
    seed: int = 0
    n_random: int = 8
    timings: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        for label in ("B", "kmax", "k", "n_random"):
            if getattr(self, label) < 1:
                raise ValueError(f"{label} must be at least 1")
        if self.K is not None and self.K < 1:
            raise ValueError("K must be at least 1")


def _parse_text(text: str) -> Hypergraph:
    lines = []
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((no, body))
    if not lines:
        raise ParseError(1, "empty file")
    no, header = lines[0]
    try:
        n, m = (int(x) for x in header.split())
    except ValueError:
        raise ParseError(no, f"expected 'n m', got {header!r}") from None
    if len(lines) - 1 != m:
        raise ParseError(lines[-1][0], f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for no, body in lines[1:]:
        try:
            edges.append([int(x) for x in body.split()])
        except ValueError:
            raise ParseError(no, f"non-integer vertex in {body!r}") from None
    return make_simple(n, edges)


def parse_hypergraph_file(path) -> Hypergraph:
    """Read a hypergraph from a ``.json`` or text file."""
    return read_instance(path).H


def read_instance(path) -> InstanceFile:
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.lineno, exc.msg) from None
        H = make_simple(int(data["n"]), data["edges"])
        return InstanceFile(path, H, data.get("name", path.stem))
    return InstanceFile(path, _parse_text(text), path.stem)


def parse_monomial(spec: str, n: int) -> tuple[int, ...]:
    try:
        c = tuple(int(x) for x in spec.split(","))
    except ValueError:
        raise ValueError(f"bad monomial {spec!r}; expected comma-separated exponents") from None
    if len(c) != n:
        raise ValueError(f"monomial has {len(c)} exponents, hypergraph has {n} vertices")
    if any(x < 0 for x in c):
        raise ValueError("exponents must be non-negative")
    return c


def _emit(out: TextIO, cfg: RunConfig, text: str, payload: dict):
    if cfg.json:
        out.write(dumps(payload))
    else:
        out.write(text.rstrip("\n") + "\n")


def run(cfg: RunConfig, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """Execute one command; return the process exit code."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        return _run(cfg, out)
    except (OSError, ParseError, HypergraphError, ValueError, KeyError) as exc:
        err.write(f"error: {exc}\n")
        return 1


def _flag(ok: bool, cfg: RunConfig) -> int:
    return 2 if cfg.assert_mode and not ok else 0


def _run(cfg: RunConfig, out: TextIO) -> int:
    if cfg.command == "corpus":
        if cfg.json:
            out.write(corpus_json(cfg.seed, cfg.B, cfg.kmax, cfg.n_random))
            ok = True
        else:
            ok = True
            for label, H in default_corpus(cfg.seed, cfg.n_random):
                rep = full_report(H, cfg.B, cfg.kmax, name=label)
                ok &= rep.all_pass()
                statuses = " ".join(f"{k}={v.status}" for k, v in rep.verdicts.items())
                out.write(f"{label}: {statuses}\n")
        return _flag(ok, cfg)

    if cfg.path is None:
        raise ValueError(f"command {cfg.command!r} needs a hypergraph file")
    inst = read_instance(cfg.path)
    H = inst.H
    I = edge_ideal(H) if cfg.ideal == "edge" else cover_ideal(H)
    base = {"instance": inst.name, "n": H.n, "m": H.m}

    if cfg.command == "analyze":
        rep = full_report(H, cfg.B, cfg.kmax, cfg.K, name=inst.name, timings=cfg.timings)
        if cfg.json:
            out.write(rep.to_json())
        else:
            p = rep.properties
            out.write(f"{inst.name}: n={H.n} m={H.m}\n")
            out.write(f"  koenig: {str(p['koenig']).lower()}\n")
            out.write(f"  fulkersonian: {str(p['fulkersonian']).lower()}\n")
            mb = p["mengerian_bounded"]
            out.write(f"  mengerian (no violation up to B={mb['B']}): {str(mb['value']).lower()}\n")
            nu = p["normal_up_to"]
            out.write(f"  normal up to K={nu['K']}: {str(nu['value']).lower()}\n")
            for name, v in rep.verdicts.items():
                out.write(f"  verdict {name}: {v.status}\n")
        return _flag(rep.all_pass(), cfg)

    if cfg.command == "blocker":
        B = blocker(H)
        _emit(out, cfg, "\n".join(" ".join(map(str, e)) for e in B.edges),
              dict(base, blocker=[list(e) for e in B.edges]))
        return 0

    if cfg.command == "vertices":
        V = extreme_points(H)
        lines = [format_vector(p) + ("" if ok else "  (fractional)") for p, ok in zip(V.points, V.integral)]
        _emit(out, cfg, "\n".join(lines),
              dict(base, vertices=[format_vector(p) for p in V.points],
                   fractional=[format_vector(p) for p in V.fractional()]))
        return 0

    if cfg.command == "fulkersonian":
        V = extreme_points(H)
        frac = V.fractional()
        ok = not frac
        text = "true" if ok else f"false, fractional vertex {format_vector(frac[0])}"
        _emit(out, cfg, text, dict(base, fulkersonian=ok, fractional=[format_vector(p) for p in frac]))
        return _flag(ok, cfg)

    if cfg.command == "mengerian":
        ok, c = is_mengerian_bounded(H, cfg.B)
        text = f"true (no violation up to B={cfg.B})" if ok else f"false, witness {format_vector(c)}"
        _emit(out, cfg, text, dict(base, mengerian=ok, B=cfg.B, witness=None if ok else format_vector(c)))
        return _flag(ok, cfg)

    if cfg.command == "koenig":
        ok = koenig(H)
        _emit(out, cfg, str(ok).lower(), dict(base, koenig=ok))
        return _flag(ok, cfg)

    if cfg.command in ("power", "closure-gens", "symbolic") and cfg.monomial is None:
        if cfg.command == "power":
            J = power(I, cfg.k)
        elif cfg.command == "closure-gens":
            J = closure_gens(I, cfg.k)
        else:
            J = symbolic_power_gens(H if cfg.ideal == "edge" else blocker(H), cfg.k)
        gens = [format_vector(g) for g in J.gens]
        _emit(out, cfg, "\n".join(gens), dict(base, k=cfg.k, ideal=cfg.ideal, generators=gens))
        return 0

    if cfg.command in ("symbolic", "closure-member"):
        if cfg.monomial is None:
            raise ValueError("--monomial is required")
        c = parse_monomial(cfg.monomial, H.n)
        if cfg.command == "symbolic":
            v = symbolic_membership(c, H if cfg.ideal == "edge" else blocker(H), cfg.k)
            text = "member" if v.member else f"not a member, violated cover {' '.join(map(str, v.certificate))}"
            cert = None if v.member else list(v.certificate)
        else:
            v = closure_membership(c, I, cfg.k)
            cert = format_vector(v.certificate) if v.member else None
            text = f"member, lambda = {cert}" if v.member else "not a member"
        _emit(out, cfg, text, dict(base, k=cfg.k, ideal=cfg.ideal, monomial=format_vector(c),
                                   member=v.member, certificate=cert))
        return _flag(v.member, cfg)

    if cfg.command == "power":
        from clutterlab.ideals import power_membership

        c = parse_monomial(cfg.monomial, H.n)
        v = power_membership(c, I, cfg.k)
        cert = [format_vector(g) for g in v.certificate] if v.member else None
        text = f"member, generators {' + '.join(cert)}" if v.member else "not a member"
        _emit(out, cfg, text, dict(base, k=cfg.k, ideal=cfg.ideal, monomial=format_vector(c),
                                   member=v.member, certificate=cert))
        return _flag(v.member, cfg)

    if cfg.command == "closure-gens":
        raise ValueError("closure-gens takes no --monomial; use closure-member")

    if cfg.command == "normal":
        K = H.n if cfg.K is None else cfg.K
        ok, w = is_normal_up_to(I, K)
        text = f"true (normal up to K={K})" if ok else f"false, k={w[0]} monomial {format_vector(w[1])}"
        wit = None if ok else {"k": w[0], "monomial": format_vector(w[1])}
        _emit(out, cfg, text, dict(base, normal=ok, K=K, witness=wit))
        return _flag(ok, cfg)

    if cfg.command == "verify":
        fn = {"menger": verify_menger, "fulkerson": verify_fulkerson, "gvv": verify_gvv}[cfg.theorem]
        v = fn(H, cfg.B, cfg.kmax)
        sides = ", ".join(f"{k}={str(x).lower()}" for k, x in v.sides.items())
        text = f"{v.name}: {v.status} ({sides})" + (f"; {v.note}" if v.note else "")
        _emit(out, cfg, text, dict(base, theorem=cfg.theorem, bounds={"B": cfg.B, "kmax": cfg.kmax},
                                   verdict=v.to_dict()))
        return _flag(v.status == PASS, cfg)

    raise ValueError(f"unhandled command {cfg.command!r}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="clutterlab", description=__doc__.splitlines()[0])
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("path", nargs="?", help="hypergraph file (.json or text)")
    ap.add_argument("--B", type=int, default=2, help="box bound for Mengerian and closure scans")
    ap.add_argument("--kmax", type=int, default=3, help="largest power compared")
    ap.add_argument("--K", type=int, default=None, help="normality bound (default: n)")
    ap.add_argument("--k", type=int, default=1, help="power for membership and generator commands")
    ap.add_argument("--monomial", help="comma-separated exponent vector, e.g. 1,0,2")
    ap.add_argument("--theorem", choices=("menger", "fulkerson", "gvv"), default="fulkerson")
    ap.add_argument("--ideal", choices=("edge", "cover"), default="edge")
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--assert", dest="assert_mode", action="store_true",
                    help="exit 2 when the queried property is false or a verdict fails")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--n-random", dest="n_random", type=int, default=8)
    ap.add_argument("--timings", action="store_true", help="record per-check timings (breaks byte-identical output)")
    return ap


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; 2 is reserved for failed assertions here
        return 0 if exc.code == 0 else 1
    try:
        cfg = RunConfig(**vars(args))
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
