"""Number-sum / relative-phase teleportation: conditional states and fidelity.

Alice holds the target mode and one half of a two-mode resource with
amplitudes s_n; she measures the photon-number sum q and a relative phase
phi^{(q)}_s.  Bob's mode collapses onto amplitudes c_k s_{q-k} at Fock
index k+N-q; a number shift and phase shift (plus, for resources with a
curved phase profile, a quadratic parity correction) reconstruct the
target.  The conditional fidelity F(q) and its partial-mass bound are
evaluated directly from the collapsed amplitudes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ImpossibleOutcomeError
from .quasi_epr import QuasiEprResource
from .states import CoherentTarget

_ALIGN_TOL = 1e-12


@dataclass(frozen=True)
class MeasurementOutcome:
    """Number-sum result q and phase index s selecting phi^{(q)}_s."""

    q: int
    s_index: int
    phi0: float = 0.0

    def __post_init__(self):
        if self.q < 0:
            raise DomainError(f"q must be non-negative, got {self.q}")
        if not 0 <= self.s_index <= self.q:
            raise DomainError(f"s_index must lie in [0, {self.q}], got {self.s_index}")

    @property
    def phase(self) -> float:
        """phi^{(q)}_s = phi0 + 2 pi s / (q+1)."""
        return self.phi0 + 2.0 * math.pi * self.s_index / (self.q + 1)


@dataclass(frozen=True)
class BobState:
    """Bob's collapsed mode: amplitudes over k = k0..q at Fock index k+N-q."""

    N: int
    q: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        object.__setattr__(self, "amplitudes", amps)
        if amps.shape != (self.q - self.k0 + 1,):
            raise DomainError(
                f"amplitudes must cover k = {self.k0}..{self.q}, got length {amps.shape[0]}")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > 1e-10:
            raise DomainError(f"BobState norm {norm} deviates from 1")

    @property
    def k0(self) -> int:
        return max(0, self.q - self.N)

    def k_values(self) -> np.ndarray:
        return np.arange(self.k0, self.q + 1)

    def fock_indices(self) -> np.ndarray:
        return self.k_values() + self.N - self.q


@dataclass(frozen=True)
class SingleModeState:
    """Normalized single-mode state; amplitudes[k] at Fock level k."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        object.__setattr__(self, "amplitudes", amps)
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > 1e-10:
            raise DomainError(f"state norm {norm} deviates from 1")


@dataclass(frozen=True)
class TeleportOutcome:
    """Per-q record: fidelity (None when the outcome is unreachable), bound, probability."""

    q: int
    fidelity: float | None
    bound: float
    probability: float


@dataclass(frozen=True)
class ShiftedPhaseOperator:
    """Bookkeeping for measuring the resource-offset relative phase on Alice's side.

    Shifting the measured operator by the resource phase offset is the same
    as relabeling the projection phase: the projector uses phase - offset,
    after which Bob corrects with the bare measurement label only.
    """

    resource_offset: float

    def measurement_phase(self, outcome: MeasurementOutcome) -> float:
        return outcome.phase - self.resource_offset


def shifted_phase_operator_note(resource_phase_offset: float) -> ShiftedPhaseOperator:
    """Descriptor for the Alice-side alternative to Bob's resource phase shift."""
    return ShiftedPhaseOperator(resource_phase_offset)


def _window(target: CoherentTarget, resource: QuasiEprResource, q: int):
    """k range k0..q with the target truncation applied; returns (k0, ks, ck, sv)."""
    k0 = max(0, q - resource.N)
    ks = np.arange(k0, q + 1)
    ck = np.array([target.coefficient(int(k)) for k in ks])
    sv = resource.s[q - ks]
    return k0, ks, ck, sv


def outcome_probability(target: CoherentTarget, resource: QuasiEprResource, q: int) -> float:
    """P(q) = sum_k |c_k|^2 |s_{q-k}|^2 over the reachable k window."""
    if q < 0:
        raise DomainError(f"q must be non-negative, got {q}")
    if q > resource.N + target.k_max:
        return 0.0
    _, _, ck, sv = _window(target, resource, q)
    return float(np.sum(ck ** 2 * np.abs(sv) ** 2))


def post_measurement_state(target: CoherentTarget, resource: QuasiEprResource,
                           outcome: MeasurementOutcome,
                           measurement_phase: float | None = None) -> BobState:
    """Bob's mode after Alice measures (q, phi^{(q)}_s).

    Amplitudes are C(q) e^{-i k phi} c_k s_{q-k} at Fock index k+N-q with
    C(q) = P(q)^{-1/2}.  measurement_phase overrides phi^{(q)}_s (used by
    the shifted-operator bookkeeping).
    """
    q = outcome.q
    k0, ks, ck, sv = _window(target, resource, q)
    phi = outcome.phase if measurement_phase is None else measurement_phase
    weight = float(np.sum(ck ** 2 * np.abs(sv) ** 2))
    if weight <= 0.0:
        raise ImpossibleOutcomeError(f"outcome q = {q} has zero probability")
    amps = np.exp(-1j * phi * ks) * ck * sv / math.sqrt(weight)
    return BobState(resource.N, q, amps)


def reconstruct(bob: BobState, resource_phase_offset: float,
                outcome: MeasurementOutcome,
                measurement_phase: float | None = None) -> SingleModeState:
    """Number shift to Fock index k plus phase shift e^{i k (phi_s + offset)}.

    For a resource whose phases are linear in n with slope
    resource_phase_offset, the output is flat-phase: C(q) sum c_k t_{q-k} |k>
    up to a global phase.
    """
    phi = outcome.phase if measurement_phase is None else measurement_phase
    ks = bob.k_values()
    shifted = bob.amplitudes * np.exp(1j * (phi + resource_phase_offset) * ks)
    amps = np.zeros(bob.q + 1, dtype=complex)
    amps[bob.k0:] = shifted
    return SingleModeState(amps)


def parity_phase_correction(state: SingleModeState, q: int) -> SingleModeState:
    """Apply e^{i (-1)^q (pi/2) k^2} at each Fock level k; exactly norm-preserving."""
    k = np.arange(len(state.amplitudes))
    powers = (k * k) % 4
    factors = 1j ** powers if q % 2 == 0 else (-1j) ** powers
    return SingleModeState(state.amplitudes * factors)


def _parity_factors(ks: np.ndarray, q: int) -> np.ndarray:
    powers = (ks * ks) % 4
    return 1j ** powers if q % 2 == 0 else (-1j) ** powers


def fidelity(target: CoherentTarget, resource: QuasiEprResource, q: int,
             apply_parity_correction: bool = False) -> float:
    """Conditional fidelity F(q) = |sum |c_k|^2 s_{q-k}|^2 / sum |c_k|^2 |s_{q-k}|^2.

    With the correction flag the numerator's s_{q-k} gains the quadratic
    phase e^{i (-1)^q (pi/2) k^2}; moduli (and hence the denominator and
    the bound) are unchanged.
    """
    if q < 0 or q > resource.N + target.k_max:
        raise ImpossibleOutcomeError(f"outcome q = {q} has zero probability")
    _, ks, ck, sv = _window(target, resource, q)
    w = ck ** 2
    denom = float(np.sum(w * np.abs(sv) ** 2))
    if denom <= 0.0:
        raise ImpossibleOutcomeError(f"outcome q = {q} has zero probability")
    num_vec = w * sv
    if apply_parity_correction:
        num_vec = num_vec * _parity_factors(ks, q)
    return float(abs(np.sum(num_vec)) ** 2 / denom)


def fidelity_bound(target: CoherentTarget, q: int, N: int) -> float:
    """Partial target mass sum_{k0..q} |c_k|^2; F(q) never exceeds it."""
    if q < 0:
        raise DomainError(f"q must be non-negative, got {q}")
    k0 = max(0, q - N)
    hi = min(q, target.k_max)
    if hi < k0:
        return 0.0
    return float(np.sum(target.weights()[k0:hi + 1]))


def average_fidelity(target: CoherentTarget, resource: QuasiEprResource,
                     apply_parity_correction: bool = False) -> float:
    """P-weighted mean of F(q) over all reachable outcomes q = 0..N+k_max."""
    total = 0.0
    for q in range(resource.N + target.k_max + 1):
        p = outcome_probability(target, resource, q)
        if p <= 0.0:
            continue
        total += p * fidelity(target, resource, q, apply_parity_correction)
    return total


def high_fidelity_region(alpha: float, N: int) -> tuple[int, int] | None:
    """Integer window [ceil(a^2+a), floor(N-a^2+a)] where the bound stays near 1.

    Returns None when the bounds cross (no high-fidelity outcomes exist).
    """
    lo = math.ceil(alpha * alpha + alpha)
    hi = math.floor(N - alpha * alpha + alpha)
    if lo > hi:
        return None
    return max(lo, 0), hi


def evaluate_outcome(target: CoherentTarget, resource: QuasiEprResource, q: int,
                     apply_parity_correction: bool = False) -> TeleportOutcome:
    """Bundle F(q), its bound, and P(q); unreachable q yields fidelity None."""
    p = outcome_probability(target, resource, q)
    bound = fidelity_bound(target, q, resource.N)
    if p <= 0.0:
        return TeleportOutcome(q, None, bound, 0.0)
    return TeleportOutcome(q, fidelity(target, resource, q, apply_parity_correction), bound, p)
