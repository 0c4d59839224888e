"""``actorkit`` command line.

Exit codes: 0 constructed/passed, 1 invalid input, 2 oracle failure.
Every command prints a JSON report with the keys
``command, inputs, result, cases_checked, failures, wall_time_ms``.
``wall_time_ms`` is ``null`` unless ``--timing`` is given, so reports are
byte-identical across runs and worker counts.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from . import io
from .catalog import load_catalog
from .errors import ActorkitError
from .groups import FiniteGroup, Subgroup
from .lattice import centralizer_of, huq_commutator, normalizer
from .parallel import resolve_jobs

EXIT_OK, EXIT_INVALID, EXIT_ORACLE = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    inputs: list[str]
    catalog: str | None = None
    max_base_order: int = 8
    verify: bool = False
    out: str | None = None
    report: str | None = None
    jobs: int | None = None
    timing: bool = False
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.max_base_order < 1:
            raise ValueError("max base order must be at least 1")

    def check_paths(self) -> None:
        for p in self.inputs:
            if not Path(p).exists():
                raise FileNotFoundError(p)
        if self.catalog is not None and not Path(self.catalog).is_dir():
            raise FileNotFoundError(self.catalog)

    def catalog_groups(self) -> list[FiniteGroup]:
        return load_catalog(self.catalog, max_order=self.max_base_order)


def _report(cfg: RunConfig, result: dict, cases: int = 0, failures: list | None = None, started: float = 0.0) -> dict:
    return {
        "command": cfg.command,
        "inputs": list(cfg.inputs),
        "result": result,
        "cases_checked": cases,
        "failures": list(failures or []),
        "wall_time_ms": round((time.perf_counter() - started) * 1000) if cfg.timing else None,
    }


def _emit(cfg: RunConfig, report: dict) -> None:
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if cfg.report:
        Path(cfg.report).write_text(text)
    else:
        sys.stdout.write(text)


def _subgroup(G: FiniteGroup, text: str | None) -> Subgroup:
    """``all`` (default), ``none``, or comma-separated generator indices."""
    if text is None or text == "all":
        return Subgroup.whole(G)
    text = text.strip()
    if text in ("", "none"):
        return Subgroup.trivial(G)
    gens = [int(tok) for tok in text.split(",")]
    if any(g < 0 or g >= G.order for g in gens):
        raise ActorkitError(f"generator out of range in {text!r}")
    return Subgroup.generated(G, gens)


def _graph_from(path: str):
    kind, obj = io.parse_any(Path(path).read_text())
    if kind == "rg":
        return obj
    if kind == "xmod":
        from .groupoid import xmod_to_cat1

        return xmod_to_cat1(obj)
    from .rgraph import discrete

    return discrete(obj)


def cmd_validate(cfg: RunConfig) -> int:
    path = cfg.inputs[0]
    started = time.perf_counter()
    kind = "unknown"
    try:
        text = Path(path).read_text()
        kind = io.detect_kind(text)
        _, obj = io.parse_any(text)
        result = {"kind": kind, "valid": True}
        if kind == "group":
            result["order"] = obj.order
        elif kind == "rg":
            from .groupoid import is_groupoid

            result["order"] = obj.carrier.order
            result["groupoid"] = is_groupoid(obj)
        else:
            result["orders"] = [obj.T.order, obj.G.order]
        _emit(cfg, _report(cfg, result, started=started))
        return EXIT_OK
    except ActorkitError as exc:
        result = {"kind": kind, "valid": False, "invariant": exc.invariant, "message": str(exc)}
        _emit(cfg, _report(cfg, result, started=started))
        print(f"{exc.invariant}: {exc}", file=sys.stderr)
        return EXIT_INVALID


def _write_outputs(cfg: RunConfig, files: dict[str, str]) -> list[str]:
    if not cfg.out:
        return []
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, text in files.items():
        (out / name).write_text(text)
    return sorted(files)


def cmd_generic(cfg: RunConfig) -> int:
    from .splitext import generic_split_extension, verify_generic

    started = time.perf_counter()
    X = io.read_group(cfg.inputs[0])
    E = generic_split_extension(X)
    result = {"kernel_order": X.order, "base_order": E.B.order, "total_order": E.A.order}
    result["files"] = _write_outputs(
        cfg,
        {"base.grp": io.format_group(E.B), "total.grp": io.format_group(E.A), "action.txt": io.format_action(E.action)},
    )
    cases, failures = 0, []
    if cfg.verify:
        rep = verify_generic(E, cfg.catalog_groups(), jobs=cfg.jobs)
        cases, failures = rep.cases_checked, rep.failures
        result["verified"] = rep.passed
    _emit(cfg, _report(cfg, result, cases, failures, started))
    return EXIT_ORACLE if failures else EXIT_OK


def _graph_files(E) -> dict[str, str]:
    return {
        "base.rg": io.format_rg(E.B),
        "total.rg": io.format_rg(E.A),
        "action.txt": io.format_action(E.ext.action),
    }


def _graph_result(E) -> dict:
    from .groupoid import is_groupoid
    from .rgraph import rg_is_faithful

    return {
        "kernel_order": E.X.carrier.order,
        "base_order": E.B.carrier.order,
        "total_order": E.A.carrier.order,
        "base_s": E.B.s.images.tolist(),
        "base_t": E.B.t.images.tolist(),
        "base_groupoid": is_groupoid(E.B),
        "total_groupoid": is_groupoid(E.A),
        "faithful": rg_is_faithful(E),
    }


def cmd_rg_classifier(cfg: RunConfig) -> int:
    from .rgraph import rg_classifier, rg_verify_generic

    started = time.perf_counter()
    X = _graph_from(cfg.inputs[0])
    E = rg_classifier(X).extension
    result = _graph_result(E)
    result["files"] = _write_outputs(cfg, _graph_files(E))
    cases, failures = 0, []
    if cfg.verify:
        rep = rg_verify_generic(E, cfg.catalog_groups(), jobs=cfg.jobs)
        cases, failures = rep.cases_checked, rep.failures
        result["verified"] = rep.passed
    _emit(cfg, _report(cfg, result, cases, failures, started))
    return EXIT_ORACLE if failures else EXIT_OK


def cmd_actor(cfg: RunConfig) -> int:
    from .groupoid import groupoid_classifier, grpd_verify_generic

    started = time.perf_counter()
    X = _graph_from(cfg.inputs[0])
    E = groupoid_classifier(X)
    result = _graph_result(E)
    result["files"] = _write_outputs(cfg, _graph_files(E))
    cases, failures = 0, []
    if cfg.verify:
        rep = grpd_verify_generic(E, cfg.catalog_groups(), jobs=cfg.jobs)
        cases, failures = rep.cases_checked, rep.failures
        result["verified"] = rep.passed
    _emit(cfg, _report(cfg, result, cases, failures, started))
    return EXIT_ORACLE if failures else EXIT_OK


def _lattice_cmd(cfg: RunConfig, op) -> int:
    started = time.perf_counter()
    G = io.read_group(cfg.inputs[0])
    S = op(G)
    result = {"order": S.order, "elements": list(S.elements), "normal": S.is_normal()}
    _emit(cfg, _report(cfg, result, started=started))
    return EXIT_OK


def cmd_commutator(cfg: RunConfig) -> int:
    return _lattice_cmd(
        cfg, lambda G: huq_commutator(_subgroup(G, cfg.extra.get("left")), _subgroup(G, cfg.extra.get("right")))
    )


def cmd_centralizer(cfg: RunConfig) -> int:
    return _lattice_cmd(cfg, lambda G: centralizer_of(_subgroup(G, cfg.extra.get("of"))))


def cmd_normalizer(cfg: RunConfig) -> int:
    return _lattice_cmd(cfg, lambda G: normalizer(_subgroup(G, cfg.extra.get("of"))))


def cmd_laws(cfg: RunConfig) -> int:
    from .laws import run_laws

    started = time.perf_counter()
    catalog = load_catalog(cfg.catalog)
    reports = run_laws(catalog, cfg.extra.get("law", "all"))
    failures = [{"law": r.law, **f} for r in reports for f in r.failures]
    result = {"laws": [r.to_dict() for r in reports], "passed": not failures}
    cases = sum(r.cases_checked for r in reports)
    _emit(cfg, _report(cfg, result, cases, failures, started))
    return EXIT_ORACLE if failures else EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "generic": cmd_generic,
    "rg-classifier": cmd_rg_classifier,
    "actor": cmd_actor,
    "commutator": cmd_commutator,
    "centralizer": cmd_centralizer,
    "normalizer": cmd_normalizer,
    "laws": cmd_laws,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="actorkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, verify=False):
        p.add_argument("--report", help="write the JSON report here instead of stdout")
        p.add_argument("--timing", action="store_true", help="fill in wall_time_ms")
        if verify:
            p.add_argument("--verify", action="store_true", help="run the brute-force oracle")
            p.add_argument("--catalog", help="directory of *.grp base groups (default: bundled)")
            p.add_argument("--max-base-order", type=int, default=8)
            p.add_argument("--jobs", type=int, default=None, help="worker processes (0 = all cores)")
            p.add_argument("--out", help="directory for the constructed objects")

    p = sub.add_parser("validate", help="parse and validate a group, graph or crossed-module file")
    p.add_argument("path")
    common(p)

    for name, helptext in (
        ("generic", "Aut(X) x| X for a group file"),
        ("rg-classifier", "split extension classifier of a reflexive graph"),
        ("actor", "split extension classifier of a cat^1-group (groupoid)"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("path")
        common(p, verify=True)

    p = sub.add_parser("commutator", help="Huq commutator [L, R] of two subgroups")
    p.add_argument("path")
    p.add_argument("--left", default="all", help="generators, e.g. 1,2 (default: whole group)")
    p.add_argument("--right", default="all")
    common(p)

    for name in ("centralizer", "normalizer"):
        p = sub.add_parser(name, help=f"{name} of a subgroup")
        p.add_argument("path")
        p.add_argument("--of", default="all", help="generators of the subgroup; 'none' for the trivial one")
        common(p)

    p = sub.add_parser("laws", help="run the law suite")
    lsub = p.add_subparsers(dest="laws_command", required=True)
    run = lsub.add_parser("run")
    run.add_argument("--catalog", help="directory of *.grp groups (default: bundled)")
    run.add_argument("--law", default="all")
    common(run)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    inputs = [args.path] if hasattr(args, "path") else []
    extra = {k: getattr(args, k) for k in ("left", "right", "of", "law") if hasattr(args, k)}
    cfg = RunConfig(
        command=args.command,
        inputs=inputs,
        catalog=getattr(args, "catalog", None),
        max_base_order=getattr(args, "max_base_order", 8),
        verify=getattr(args, "verify", False),
        out=getattr(args, "out", None),
        report=args.report,
        jobs=resolve_jobs(getattr(args, "jobs", None)),
        timing=args.timing,
        extra=extra,
    )
    try:
        cfg.check_paths()
    except FileNotFoundError as exc:
        print(f"no such path: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if cfg.command == "validate":
        return cmd_validate(cfg)
    try:
        return COMMANDS[cfg.command](cfg)
    except ActorkitError as exc:
        _emit(cfg, _report(cfg, {"error": exc.invariant, "message": str(exc)}))
        print(f"{exc.invariant}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
