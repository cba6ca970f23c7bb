"""Deterministic grid sweeps over (beta, q) and canned figure datasets.

Grid points are independent and may be computed on a thread pool (size
capped by the FOCKPORT_THREADS environment variable), but rows are always
emitted in canonical (beta ascending, q ascending) order and the numbers
are bitwise-independent of the execution schedule.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone

import numpy as np

from ._version import __version__
from .errors import DomainError
from .quasi_epr import (FilterOrder, beta_q, filtered_input, ideal_resource,
                        make_resource, phase_distribution, quality)
from .states import (RelativePhaseSpec, coherent_coefficients,
                     relative_phase_state)
from .teleport import evaluate_outcome, fidelity, high_fidelity_region

_DEFAULT_STEP = math.radians(0.5)

RESOURCE_KINDS = ("j0", "2pt", "3pt", "4pt", "ideal", "relative-phase-input")

# filter level (doubled) behind each beam-splitter resource kind
_KIND_LEVEL = {"j0": 0, "2pt": 1, "3pt": 2, "4pt": 3}


@dataclass(frozen=True)
class BetaGrid:
    """Inclusive arithmetic grid over beta, in radians."""

    start: float
    stop: float
    step: float = _DEFAULT_STEP

    def values(self) -> np.ndarray:
        if self.step <= 0.0 or self.stop < self.start:
            return np.array([])
        count = int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1
        return self.start + self.step * np.arange(count)


@dataclass(frozen=True)
class SweepSpec:
    """Full description of one sweep: resource, grid, target, outcomes."""

    resource_kind: str
    N: int
    beta_grid: BetaGrid
    alpha: float = 0.0
    q_list: object = "all"
    parity_correction: bool = False

    def validate(self):
        errors = []
        if self.resource_kind not in RESOURCE_KINDS:
            errors.append(f"resource_kind: unknown kind {self.resource_kind!r}")
        if not isinstance(self.N, (int, np.integer)) or self.N < 1:
            errors.append(f"N: must be a positive integer, got {self.N!r}")
        elif self.resource_kind in _KIND_LEVEL and self.N % 2 != _KIND_LEVEL[self.resource_kind] % 2:
            need = "odd" if _KIND_LEVEL[self.resource_kind] % 2 else "even"
            errors.append(f"N: resource {self.resource_kind!r} requires {need} N, got {self.N}")
        if self.beta_grid.step <= 0.0:
            errors.append(f"beta_grid: step must be > 0, got {self.beta_grid.step}")
        elif len(self.beta_grid.values()) == 0:
            errors.append("beta_grid: empty grid")
        if self.alpha < 0:
            errors.append(f"alpha: must be >= 0, got {self.alpha}")
        if self.q_list != "all":
            try:
                qs = [int(q) for q in self.q_list]
            except (TypeError, ValueError):
                errors.append(f"q_list: must be 'all' or a list of integers, got {self.q_list!r}")
            else:
                if any(q < 0 for q in qs):
                    errors.append("q_list: entries must be non-negative")
        if errors:
            raise ValueError("invalid sweep spec: " + "; ".join(errors))

    def echo(self) -> dict:
        return {
            "resource_kind": self.resource_kind,
            "N": int(self.N),
            "beta_start_deg": math.degrees(self.beta_grid.start),
            "beta_stop_deg": math.degrees(self.beta_grid.stop),
            "beta_step_deg": math.degrees(self.beta_grid.step),
            "alpha": float(self.alpha),
            "q_list": self.q_list if self.q_list == "all" else [int(q) for q in self.q_list],
            "parity_correction": bool(self.parity_correction),
        }


@dataclass(frozen=True)
class SweepResult:
    """Ordered table of sweep rows plus reproducibility metadata."""

    columns: tuple
    rows: list
    meta: dict


def _worker_count() -> int:
    env = os.environ.get("FOCKPORT_THREADS", "").strip()
    if env:
        try:
            n = int(env)
        except ValueError:
            raise DomainError(f"FOCKPORT_THREADS must be an integer, got {env!r}")
        if n < 1:
            raise DomainError(f"FOCKPORT_THREADS must be >= 1, got {n}")
        return n
    return min(os.cpu_count() or 1, 8)


def resource_for_kind(kind: str, N: int, beta: float):
    """Build the resource behind a sweep kind at one grid point."""
    if kind == "ideal":
        return ideal_resource(N)
    if kind == "relative-phase-input":
        return make_resource(relative_phase_state(RelativePhaseSpec(N, 0)), beta)
    if kind in _KIND_LEVEL:
        return make_resource(filtered_input(N, FilterOrder(_KIND_LEVEL[kind])), beta)
    raise DomainError(f"unknown resource kind {kind!r}")


def run_sweep(spec: SweepSpec) -> SweepResult:
    """Evaluate fidelity/bound/probability and quality metrics over the grid.

    Row layout: (beta_deg, q, fidelity, bound, probability, min_modulus,
    zero_count, flatness, entropy), beta ascending then q ascending; row
    count = grid size x outcome count; unreachable outcomes carry fidelity
    None and probability 0.
    """
    spec.validate()
    target = coherent_coefficients(spec.alpha)
    if spec.q_list == "all":
        qs = list(range(spec.N + target.k_max + 1))
    else:
        qs = [int(q) for q in spec.q_list]
    betas = spec.beta_grid.values()

    def point(beta: float):
        resource = resource_for_kind(spec.resource_kind, spec.N, float(beta))
        rep = quality(resource)
        out = []
        for q in qs:
            res = evaluate_outcome(target, resource, q, spec.parity_correction)
            out.append((math.degrees(beta), q, res.fidelity, res.bound, res.probability,
                        rep.min_modulus, rep.zero_count, rep.flatness, rep.entropy))
        return out

    workers = _worker_count()
    if workers == 1 or len(betas) == 1:
        chunks = [point(b) for b in betas]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(point, betas))
    rows = [row for chunk in chunks for row in chunk]
    columns = ("beta_deg", "q", "fidelity", "bound", "probability",
               "min_modulus", "zero_count", "flatness", "entropy")
    meta = {"kind": "sweep", "spec": spec.echo(), "version": __version__}
    return SweepResult(columns, rows, meta)


def find_beta_q_numeric(N: int, resource_kind: str = "j0",
                        objective: str = "min_modulus",
                        step: float = _DEFAULT_STEP) -> float:
    """Grid argmax of an EPR-quality objective over beta in (0, pi/2].

    Objectives: "min_modulus" (default; maximize the smallest amplitude
    modulus), "entropy" (maximize modulus entropy), "min_fidelity_target"
    (maximize the worst conditional fidelity over the high-fidelity window
    of a unit-alpha target, correction on).  Ties break toward smaller
    beta.  The default follows the flatness reading of "best quasi-EPR
    state": it tracks (pi/2)(1-1/N) to within one grid step for N >= 10.
    """
    if objective not in ("min_modulus", "entropy", "min_fidelity_target"):
        raise DomainError(f"unknown objective {objective!r}")
    betas = step * np.arange(1, int(round((math.pi / 2) / step)) + 1)
    if objective == "min_fidelity_target":
        target = coherent_coefficients(1.0)
        region = high_fidelity_region(1.0, N)
        if region is None:
            raise DomainError(f"no high-fidelity window at N = {N}")
        q_lo, q_hi = region

    scores = np.empty(len(betas))
    for i, beta in enumerate(betas):
        resource = resource_for_kind(resource_kind, N, float(beta))
        if objective == "min_modulus":
            scores[i] = quality(resource).min_modulus
        elif objective == "entropy":
            scores[i] = quality(resource).entropy
        else:
            scores[i] = min(fidelity(target, resource, q, True)
                            for q in range(q_lo, q_hi + 1))
    return float(betas[int(np.argmax(scores))])


def _modulus_rows(kind: str, N: int, betas, with_phase: bool = False):
    rows = []
    for beta in betas:
        resource = resource_for_kind(kind, N, float(beta))
        mods = np.abs(resource.s)
        if with_phase:
            phases = phase_distribution(resource)
            rows.extend((math.degrees(beta), n, float(mods[n]), float(phases[n]))
                        for n in range(N + 1))
        else:
            rows.extend((math.degrees(beta), n, float(mods[n])) for n in range(N + 1))
    return rows


def figure_dataset(figure_id: int) -> SweepResult:
    """Dataset behind one of the seven canned figures.

    1: rotated relative-phase input, N=20, moduli vs beta in [0, 90] deg.
    2: rotated level-0 input, N=20, moduli vs beta.
    3: level-0 input, N=20, moduli and phases at 85.5 and 90 deg.
    4: level-0 input at beta_q(N) for N in {200, 2000, 20000}, moduli.
    5: rotated 2pt input, N=21, moduli vs beta.
    6: fidelity/bound/probability vs (beta, q), 2pt, N=21, alpha=3.
    7: fidelity/bound/probability vs beta at q=19, level-0, N=20, alpha=3,
       parity correction on.
    """
    step = _DEFAULT_STEP
    if figure_id == 1:
        betas = BetaGrid(0.0, math.pi / 2, step).values()
        rows = _modulus_rows("relative-phase-input", 20, betas)
        return SweepResult(("beta_deg", "n", "modulus"), rows,
                           {"kind": "figure", "figure": 1, "resource_kind": "relative-phase-input",
                            "N": 20, "version": __version__})
    if figure_id == 2:
        betas = BetaGrid(0.0, math.pi / 2, step).values()
        rows = _modulus_rows("j0", 20, betas)
        return SweepResult(("beta_deg", "n", "modulus"), rows,
                           {"kind": "figure", "figure": 2, "resource_kind": "j0",
                            "N": 20, "version": __version__})
    if figure_id == 3:
        betas = [math.radians(85.5), math.radians(90.0)]
        rows = _modulus_rows("j0", 20, betas, with_phase=True)
        return SweepResult(("beta_deg", "n", "modulus", "phase"), rows,
                           {"kind": "figure", "figure": 3, "resource_kind": "j0",
                            "N": 20, "version": __version__})
    if figure_id == 4:
        rows = []
        for N in (200, 2000, 20000):
            b = beta_q(N)
            resource = resource_for_kind("j0", N, b)
            mods = np.abs(resource.s)
            rows.extend((N, math.degrees(b), n, float(mods[n])) for n in range(N + 1))
        return SweepResult(("N", "beta_deg", "n", "modulus"), rows,
                           {"kind": "figure", "figure": 4, "resource_kind": "j0",
                            "version": __version__})
    if figure_id == 5:
        betas = BetaGrid(0.0, math.pi / 2, step).values()
        rows = _modulus_rows("2pt", 21, betas)
        return SweepResult(("beta_deg", "n", "modulus"), rows,
                           {"kind": "figure", "figure": 5, "resource_kind": "2pt",
                            "N": 21, "version": __version__})
    if figure_id == 6:
        spec = SweepSpec("2pt", 21, BetaGrid(math.pi / 4, math.pi / 2, step), alpha=3.0,
                         q_list="all", parity_correction=False)
        inner = run_sweep(spec)
        rows = [row[:5] for row in inner.rows]
        return SweepResult(("beta_deg", "q", "fidelity", "bound", "probability"), rows,
                           {"kind": "figure", "figure": 6, "spec": spec.echo(),
                            "version": __version__})
    if figure_id == 7:
        spec = SweepSpec("j0", 20, BetaGrid(math.pi / 4, math.pi / 2, step), alpha=3.0,
                         q_list=[19], parity_correction=True)
        inner = run_sweep(spec)
        rows = [row[:5] for row in inner.rows]
        return SweepResult(("beta_deg", "q", "fidelity", "bound", "probability"), rows,
                           {"kind": "figure", "figure": 7, "spec": spec.echo(),
                            "version": __version__})
    raise DomainError(f"unknown figure id {figure_id}")


def stamp(result: SweepResult) -> SweepResult:
    """Copy of a result with a UTC timestamp added to the metadata.

    Off by default so that identical specs produce identical bytes.
    """
    meta = dict(result.meta)
    meta["timestamp"] = datetime.now(timezone.utc).isoformat()
    return SweepResult(result.columns, result.rows, meta)
