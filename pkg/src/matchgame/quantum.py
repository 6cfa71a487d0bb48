"""Exact statevector simulation of the entangled strategy.

Alice and Bob share the maximally entangled pair of index registers,
sum_i |i>|i> / sqrt(m).  On input x Alice flips the sign of her component i
whenever x_i = 1, applies the n-fold two-valued Fourier (Hadamard) transform
and measures, obtaining a.  Bob measures his half in the matching basis
{(|i> +- |j>)/sqrt(2) : {i, j} in y}, obtaining an edge and a sign, and
encodes the sign into b2.  Every outcome with nonzero probability wins the
round; ``verify_always_wins`` checks that exhaustively rather than assuming
it.

Supported only for m a power of two, where Alice's transform exists; other
even m are rejected rather than approximated.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import UnsupportedGameError, ValidationError
from .game import Answer, BitString, Edge, GameInstance, Question, wins_round
from .matchings import PerfectMatching, enumerate_matchings

__all__ = [
    "StateVector",
    "OutcomeDistribution",
    "shared_state",
    "joint_distribution",
    "sample_round",
    "verify_always_wins",
]

_SUPPORT_EPS = 1e-12
_SUM_EPS = 1e-9

Outcome = tuple[BitString, Edge, BitString]


@dataclass(frozen=True)
class StateVector:
    """Joint amplitudes over |i>_Alice |j>_Bob as an (m, m) complex matrix."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=np.complex128)
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        if amps.ndim != 2 or amps.shape[0] != amps.shape[1]:
            raise ValidationError("amplitudes must form a square matrix")
        norm = float(np.sum(np.abs(amps) ** 2))
        if abs(norm - 1.0) > 1e-12:
            raise ValidationError(f"squared amplitudes sum to {norm}, not 1")

    @property
    def m(self) -> int:
        return self.amplitudes.shape[0]


@dataclass(frozen=True)
class OutcomeDistribution:
    """Probabilities over (a, edge, b2); support below 1e-12 is dropped."""

    probabilities: dict[Outcome, float]

    def __post_init__(self):
        probs = dict(self.probabilities)
        object.__setattr__(self, "probabilities", probs)
        if any(p < 0 for p in probs.values()):
            raise ValidationError("probabilities must be nonnegative")
        total = sum(probs.values())
        if abs(total - 1.0) > _SUM_EPS:
            raise ValidationError(f"probabilities sum to {total}, not 1")

    def probability(self, a: BitString, edge: Edge, b2: BitString) -> float:
        return self.probabilities.get((a, edge, b2), 0.0)

    def items(self):
        return self.probabilities.items()

    def sorted_items(self) -> list[tuple[Outcome, float]]:
        return sorted(
            self.probabilities.items(),
            key=lambda kv: (kv[0][0].value, kv[0][1].i, kv[0][1].j, kv[0][2].value),
        )


def _require_power_of_two(inst: GameInstance) -> int:
    m = inst.m
    if m & (m - 1):
        raise UnsupportedGameError(
            f"the entangled strategy is implemented for m a power of two, not m={m}"
        )
    return m


def shared_state(inst: GameInstance) -> StateVector:
    """The shared state: amplitude 1/sqrt(m) on each |i>|i>, 0 elsewhere."""
    m = _require_power_of_two(inst)
    amps = np.zeros((m, m), dtype=np.complex128)
    np.fill_diagonal(amps, 1.0 / math.sqrt(m))
    return StateVector(amps)


@lru_cache(maxsize=None)
def _hadamard(n: int) -> np.ndarray:
    dim = 1 << n
    signs = np.array(
        [[(r & c).bit_count() & 1 for c in range(dim)] for r in range(dim)]
    )
    mat = np.where(signs, -1.0, 1.0) / math.sqrt(dim)
    mat.setflags(write=False)
    return mat


@lru_cache(maxsize=None)
def _matching_basis(y: PerfectMatching) -> tuple[np.ndarray, tuple[tuple[Edge, int], ...]]:
    """Rows of Bob's measurement basis plus (edge, sign bit) labels."""
    m = y.m
    rows = np.zeros((m, m))
    meta = []
    r = 0
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    for edge in y.edges:
        for sign_bit in (0, 1):
            rows[r, edge.i] = inv_sqrt2
            rows[r, edge.j] = inv_sqrt2 if sign_bit == 0 else -inv_sqrt2
            meta.append((edge, sign_bit))
            r += 1
    rows.setflags(write=False)
    return rows, tuple(meta)


def _sign_response(edge: Edge, sign_bit: int, n: int) -> BitString:
    """b2 with dot(enc(i) xor enc(j), b2) equal to the sign bit.

    Zero for the + outcome; for the - outcome a single one at the least
    significant position where the endpoint encodings differ.
    """
    if sign_bit == 0:
        return BitString(0, n)
    d = edge.i ^ edge.j
    return BitString(d & -d, n)


def _phased_state(inst: GameInstance, x: BitString) -> np.ndarray:
    psi = shared_state(inst).amplitudes.copy()
    signs = np.array([-1.0 if x[i] else 1.0 for i in range(inst.m)])
    return signs[:, None] * psi


def joint_distribution(
    inst: GameInstance,
    x: BitString,
    y: PerfectMatching,
    order: str = "bob-first",
) -> OutcomeDistribution:
    """Exact outcome distribution for one question.

    ``order`` selects which register is measured first.  The two orders act
    on disjoint subsystems, so their joint distributions agree; both are
    implemented so that the agreement can be asserted numerically.
    """
    m = _require_power_of_two(inst)
    if x.length != m:
        raise ValidationError(f"x has {x.length} bits, expected {m}")
    if y.m != m:
        raise ValidationError(f"matching covers {y.m} vertices, expected {m}")
    psi = _phased_state(inst, x)
    basis, meta = _matching_basis(y)
    hadamard = _hadamard(inst.n)
    probs: dict[Outcome, float] = {}
    if order == "bob-first":
        residuals = psi @ basis.T
        alice_amps = hadamard @ residuals
        outcome_probs = np.abs(alice_amps) ** 2
        for col, (edge, sign_bit) in enumerate(meta):
            b2 = _sign_response(edge, sign_bit, inst.n)
            for av in range(m):
                p = float(outcome_probs[av, col])
                if p > _SUPPORT_EPS:
                    probs[(BitString(av, inst.n), edge, b2)] = p
    elif order == "alice-first":
        transformed = hadamard @ psi
        for av in range(m):
            row = transformed[av]
            p_a = float(np.sum(np.abs(row) ** 2))
            if p_a <= _SUPPORT_EPS:
                continue
            conditional = row / math.sqrt(p_a)
            bob_amps = basis @ conditional
            a = BitString(av, inst.n)
            for col, (edge, sign_bit) in enumerate(meta):
                p = p_a * float(np.abs(bob_amps[col]) ** 2)
                if p > _SUPPORT_EPS:
                    probs[(a, edge, _sign_response(edge, sign_bit, inst.n))] = p
    else:
        raise ValidationError(f"unknown measurement order {order!r}")
    return OutcomeDistribution(probs)


def sample_round(
    inst: GameInstance, x: BitString, y: PerfectMatching, rng_seed: int
) -> Answer:
    """Draw one outcome of the round; a fixed seed gives a fixed draw."""
    dist = joint_distribution(inst, x, y)
    rng = random.Random(rng_seed)
    u = rng.random()
    acc = 0.0
    outcome = None
    for outcome, p in dist.sorted_items():
        acc += p
        if u < acc:
            break
    assert outcome is not None
    a, edge, b2 = outcome
    return Answer(edge=edge, a=a, b2=b2)


def verify_always_wins(inst: GameInstance) -> bool:
    """Exhaustively check that every supported outcome wins every question."""
    m = _require_power_of_two(inst)
    matchings = enumerate_matchings(inst)
    for xv in range(1 << m):
        x = BitString(xv, m)
        for y in matchings:
            question = Question(x=x, y=y)
            dist = joint_distribution(inst, x, y)
            for (a, edge, b2), _ in dist.items():
                if not wins_round(inst, question, Answer(edge=edge, a=a, b2=b2)):
                    return False
    return True
