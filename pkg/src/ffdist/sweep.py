"""Experiment sweeps and the spectral-vs-brute benchmark.

A sweep walks (q, s, size pair, trial) cells in configuration order,
draws seeded random sets for every cell, runs the requested checkers,
and emits one row per (checker, cell).  Identical configurations give
byte-identical output: per-trial seeds are stable 64-bit hashes of
(master seed, q, s, trial, "E"/"F"), floats render with 17 significant
digits and '.' decimal, and rows are buffered in deterministic order.
"""

from __future__ import annotations

import hashlib
import json
import statistics
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Optional, Sequence

import numpy as np

from .checks import CHECKERS, EVEN_S_ONLY, LemmaReport
from .distance import DEFAULT_PAIR_CAP, nu_brute, nu_spectral
from .errors import FFDistError, PairCapExceeded
from .field import FieldContext, make_field
from .generators import GeneratorSpec, generate
from .spectral import DEFAULT_GRID_CAP, check_grid_cap

CSV_HEADER = ("lemma_id,q,s,sizeE,sizeF,trial,seed,"
              "hypothesis_met,lhs,explicit_pass,measured_constant")


class ConfigError(FFDistError):
    """Invalid sweep/verify configuration (CLI exit code 2)."""


@dataclass
class SweepConfig:
    q_list: list[int]
    s_list: list[int]
    size_pairs: list[tuple[int, int]]
    trials: int
    seed: int
    checkers: list[str]
    out: Optional[str] = None
    grid_cap: int = DEFAULT_GRID_CAP
    pair_cap: int = DEFAULT_PAIR_CAP


@dataclass
class SweepRow:
    lemma_id: str
    q: int
    s: int
    sizeE: int
    sizeF: int
    trial: int
    seed: int
    report: LemmaReport


def trial_seed(master: int, q: int, s: int, trial: int, tag: str) -> int:
    """Stable 64-bit per-cell seed; independent of platform and run order."""
    text = f"{master}:{q}:{s}:{trial}:{tag}".encode()
    return int.from_bytes(hashlib.blake2b(text, digest_size=8).digest(), "big")


def validate_config(cfg: SweepConfig) -> None:
    if cfg.trials < 1:
        raise ConfigError("trials must be >= 1")
    if not cfg.q_list or not cfg.s_list or not cfg.size_pairs:
        raise ConfigError("q_list, s_list and size_pairs must be nonempty")
    for name in cfg.checkers:
        if name not in CHECKERS:
            raise ConfigError(
                f"unknown checker {name!r}; known: {', '.join(sorted(CHECKERS))}"
            )
    for q in cfg.q_list:
        try:
            make_field(q)
        except FFDistError as exc:
            raise ConfigError(f"q_list entry {q}: {exc}") from None
    for s in cfg.s_list:
        if s < 1:
            raise ConfigError(f"s_list entry {s}: dimension must be >= 1")
        if s % 2 == 1:
            bad = EVEN_S_ONLY.intersection(cfg.checkers)
            if bad:
                raise ConfigError(
                    f"checker(s) {sorted(bad)} need even s, got s = {s}"
                )
        for q in cfg.q_list:
            check_grid_cap(q, s, cfg.grid_cap)
    for ne, nf in cfg.size_pairs:
        if ne < 1 or nf < 1:
            raise ConfigError(f"size pair ({ne}, {nf}): sizes must be >= 1")
        for q in cfg.q_list:
            for s in cfg.s_list:
                if max(ne, nf) > q ** s:
                    raise ConfigError(
                        f"size pair ({ne}, {nf}) exceeds q**s = {q ** s} "
                        f"at q = {q}, s = {s}"
                    )


def iter_sweep(cfg: SweepConfig) -> Iterator[SweepRow]:
    """Run the sweep in deterministic configuration order."""
    validate_config(cfg)
    contexts: dict[int, FieldContext] = {}
    for q in cfg.q_list:
        contexts[q] = make_field(q)
    for q in cfg.q_list:
        ctx = contexts[q]
        for s in cfg.s_list:
            for ne, nf in cfg.size_pairs:
                for trial in range(cfg.trials):
                    E = generate(ctx, s, GeneratorSpec(
                        "uniform_random", size=ne,
                        seed=trial_seed(cfg.seed, q, s, trial, "E")))
                    F = generate(ctx, s, GeneratorSpec(
                        "uniform_random", size=nf,
                        seed=trial_seed(cfg.seed, q, s, trial, "F")))
                    for name in cfg.checkers:
                        report = CHECKERS[name](ctx, E, F)
                        yield SweepRow(lemma_id=report.lemma_id, q=q, s=s,
                                       sizeE=ne, sizeF=nf, trial=trial,
                                       seed=cfg.seed, report=report)


def run_verify(cfg: SweepConfig) -> list[SweepRow]:
    return list(iter_sweep(cfg))


def _fmt(value) -> str:
    """17-significant-digit float rendering; '' for absent values."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return format(float(value), ".17g")


def row_to_csv(row: SweepRow) -> str:
    rep = row.report
    return ",".join([
        row.lemma_id, str(row.q), str(row.s), str(row.sizeE), str(row.sizeF),
        str(row.trial), str(row.seed), _fmt(rep.hypothesis_met),
        _fmt(rep.lhs), _fmt(rep.explicit_pass), _fmt(rep.measured_constant),
    ])


def run_sweep(cfg: SweepConfig) -> tuple[list[SweepRow], bool]:
    """Execute the sweep, write CSV when cfg.out is set, report overall pass.

    The boolean is False exactly when some explicit_pass came back False.
    """
    rows = run_verify(cfg)
    all_ok = all(r.report.explicit_pass is not False for r in rows)
    if cfg.out is not None:
        text = "\n".join([CSV_HEADER] + [row_to_csv(r) for r in rows]) + "\n"
        Path(cfg.out).write_text(text)
    return rows, all_ok


def run_bench(q: int, s: int, sizeE: int, sizeF: int, repetitions: int = 5,
              seed: int = 0, grid_cap: int = DEFAULT_GRID_CAP,
              pair_cap: int = DEFAULT_PAIR_CAP) -> dict:
    """Median wall times of the brute and spectral nu paths.

    When the pair count is over cap the brute path is skipped and the
    spectral result is self-checked against the mass identity
    sum_j nu(j) = #E #F (degraded mode, noted in the report).
    """
    if repetitions < 1:
        raise ConfigError("repetitions must be >= 1")
    ctx = make_field(q)
    check_grid_cap(q, s, grid_cap)
    E = generate(ctx, s, GeneratorSpec("uniform_random", size=sizeE,
                                       seed=trial_seed(seed, q, s, 0, "E")))
    F = generate(ctx, s, GeneratorSpec("uniform_random", size=sizeF,
                                       seed=trial_seed(seed, q, s, 0, "F")))

    t_spectral = []
    for _ in range(repetitions):
        t0 = time.perf_counter()
        spectral = nu_spectral(ctx, E, F, grid_cap=grid_cap)
        t_spectral.append(time.perf_counter() - t0)

    report = {
        "q": q, "s": s, "sizeE": sizeE, "sizeF": sizeF,
        "repetitions": repetitions,
        "t_spectral": statistics.median(t_spectral),
    }
    try:
        t_brute = []
        for _ in range(repetitions):
            t0 = time.perf_counter()
            brute = nu_brute(E, F, pair_cap=pair_cap)
            t_brute.append(time.perf_counter() - t0)
        report["t_brute"] = statistics.median(t_brute)
        report["speedup"] = report["t_brute"] / report["t_spectral"]
        report["outputs_match"] = bool(np.array_equal(brute.nu, spectral.nu))
        report["mode"] = "full"
    except PairCapExceeded:
        report["t_brute"] = None
        report["speedup"] = None
        report["outputs_match"] = None
        report["mass_identity_ok"] = bool(int(spectral.nu.sum()) == sizeE * sizeF)
        report["mode"] = "spectral_only"
    return report


def bench_to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False) + "\n"


def parse_sizes(text: str) -> list[tuple[int, int]]:
    """Parse '40x40,20x80' into [(40, 40), (20, 80)]."""
    pairs = []
    for item in text.split(","):
        parts = item.lower().split("x")
        if len(parts) != 2:
            raise ConfigError(f"size pair {item!r} must look like 40x80")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ConfigError(f"size pair {item!r}: not integers") from None
    return pairs


def parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip() != ""]
    except ValueError:
        raise ConfigError(f"{what} must be a comma list of integers, got {text!r}") from None


def parse_checkers(text: Optional[Sequence[str]]) -> list[str]:
    if not text:
        return sorted(CHECKERS)
    names: list[str] = []
    for chunk in text:
        names.extend(v for v in chunk.split(",") if v)
    if names == ["all"]:
        return sorted(CHECKERS)
    return names
