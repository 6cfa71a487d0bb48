"""Search over Bob tables: exact optimum for tiny m, completion, hill climbing.

The question count factors per matching, so for a fixed Bob table each input
x has an independent best answer for Alice.  Enumerating Bob tables and
best-responding with Alice is therefore enough for an exact optimum, and the
same evaluation drives the local search.  All reported successes are exact
integer counts; the numpy layer only accelerates the counting.

For m >= 8 no strategy wins everything, and the true optimum is not known;
hill climbing yields lower bounds only and is labeled as such by the CLI.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from typing import Callable, Mapping

import numpy as np

from .errors import BudgetExceededError, ValidationError
from .game import BitString, Edge, GameInstance
from .matchings import PerfectMatching, enumerate_matchings
from .strategies import (
    BobEntry,
    DeterministicStrategy,
    PartialStrategy,
    SuccessRatio,
    anchor_strategy,
)

__all__ = [
    "DEFAULT_BUDGET",
    "alice_best_response",
    "exact_optimum",
    "complete_anchor_strategy",
    "hill_climb",
]

DEFAULT_BUDGET = 2_000_000


class _SearchContext:
    """Per-m integer tables shared by every Bob-table evaluation."""

    def __init__(self, inst: GameInstance):
        m, n = inst.m, inst.n
        self.inst = inst
        self.matchings = enumerate_matchings(inst)
        self.total = (1 << m) * len(self.matchings)
        xs = np.arange(1 << m, dtype=np.int64)
        self.edge_list = [Edge(i, j) for i in range(m) for j in range(i + 1, m)]
        self.edge_index = {e: k for k, e in enumerate(self.edge_list)}
        rows = []
        for e in self.edge_list:
            rows.append(((xs >> (m - 1 - e.i)) ^ (xs >> (m - 1 - e.j))) & 1)
        # edge_parity[e, x] = x_i xor x_j; transposed copy feeds the matmul
        self.edge_parity = np.array(rows, dtype=np.int32)
        self.edge_parity_t = np.ascontiguousarray(self.edge_parity.T)
        self.a_values = np.arange(1 << n, dtype=np.int64)
        self.bit_parity = np.array(
            [v.bit_count() & 1 for v in range(1 << n)], dtype=np.int32
        )
        # Candidate (edge, b2) entries per matching, in canonical order.
        self.entries: list[list[tuple[Edge, int]]] = [
            [(e, b2) for e in y.edges for b2 in range(1 << n)]
            for y in self.matchings
        ]

    def evaluate(self, table: list[tuple[Edge, int]]) -> tuple[int, np.ndarray]:
        """Best-response win count and per-x answer choice for one Bob table.

        agree[x, a] counts matchings won when Alice answers a on input x;
        with 0/1 entries p, r the identity [p == r] = 1 - p - r + 2pr turns
        the count into one integer matmul.  Ties pick the smallest a.
        """
        eidx = np.fromiter(
            (self.edge_index[e] for e, _ in table), dtype=np.int64, count=len(table)
        )
        dv = np.fromiter(
            (e.i ^ e.j for e, _ in table), dtype=np.int64, count=len(table)
        )
        b2 = np.fromiter((b for _, b in table), dtype=np.int64, count=len(table))
        r = self.bit_parity[dv[:, None] & (self.a_values[None, :] ^ b2[:, None])]
        p_t = self.edge_parity_t[:, eidx]
        agree = (
            len(table)
            - p_t.sum(axis=1)[:, None]
            - r.sum(axis=0)[None, :]
            + 2 * (p_t @ r)
        )
        choice = agree.argmax(axis=1)
        wins = int(agree.max(axis=1).sum())
        return wins, choice

    def table_from_bob(
        self, bob: Mapping[PerfectMatching, BobEntry]
    ) -> list[tuple[Edge, int]]:
        if len(bob) != len(self.matchings):
            raise ValidationError(
                f"bob table covers {len(bob)} of {len(self.matchings)} matchings"
            )
        n = self.inst.n
        table = []
        for y in self.matchings:
            entry = bob.get(y)
            if entry is None:
                raise ValidationError(f"bob table is missing matching {y}")
            edge, b2 = entry
            if edge not in y:
                raise ValidationError(f"bob output {edge} is not an edge of {y}")
            value = b2.value if isinstance(b2, BitString) else int(b2)
            if not 0 <= value < (1 << n):
                raise ValidationError(f"b2 value {value} does not fit in {n} bits")
            table.append((edge, value))
        return table

    def strategy_from_table(
        self, table: list[tuple[Edge, int]], choice: np.ndarray
    ) -> DeterministicStrategy:
        m, n = self.inst.m, self.inst.n
        alice = {
            BitString(xv, m): BitString(int(choice[xv]), n) for xv in range(1 << m)
        }
        bob = {
            y: (edge, BitString(b2, n))
            for y, (edge, b2) in zip(self.matchings, table)
        }
        return DeterministicStrategy(m, alice, bob)


@lru_cache(maxsize=None)
def _context(m: int) -> _SearchContext:
    return _SearchContext(GameInstance(m))


def alice_best_response(
    bob_table: Mapping[PerfectMatching, BobEntry], inst: GameInstance
) -> tuple[dict[BitString, BitString], SuccessRatio]:
    """Best Alice table against a fixed total Bob table, ties to smallest a.

    The returned success is the exact count achieved by that pair.
    """
    ctx = _context(inst.m)
    table = ctx.table_from_bob(bob_table)
    wins, choice = ctx.evaluate(table)
    alice = {
        BitString(xv, inst.m): BitString(int(choice[xv]), inst.n)
        for xv in range(1 << inst.m)
    }
    return alice, SuccessRatio(wins, ctx.total)


def exact_optimum(
    inst: GameInstance, budget: int = DEFAULT_BUDGET
) -> tuple[SuccessRatio, DeterministicStrategy]:
    """Exact maximum success over all deterministic strategies, with witness.

    Enumerates Bob tables (their count is the product over matchings of
    m/2 * 2^n) and best-responds with Alice; the witness is the first table
    attaining the maximum, i.e. the lexicographically smallest one.  Raises
    BudgetExceededError, reporting the space size, when the table count
    exceeds the budget.
    """
    ctx = _context(inst.m)
    space = 1
    for ents in ctx.entries:
        space *= len(ents)
    if space > budget:
        raise BudgetExceededError(space, budget)
    best_wins = -1
    best_table: list[tuple[Edge, int]] | None = None
    best_choice: np.ndarray | None = None
    for combo in itertools.product(*ctx.entries):
        table = list(combo)
        wins, choice = ctx.evaluate(table)
        if wins > best_wins:
            best_wins, best_table, best_choice = wins, table, choice
            if wins == ctx.total:
                break
    assert best_table is not None and best_choice is not None
    strategy = ctx.strategy_from_table(best_table, best_choice)
    return SuccessRatio(best_wins, ctx.total), strategy


def complete_anchor_strategy(
    inst: GameInstance,
    filler: Callable[[PerfectMatching], BobEntry] | None = None,
) -> DeterministicStrategy:
    """Total strategy: the anchor strategy plus a filler on skipped matchings.

    The default filler answers the first edge in canonical order with an
    all-zero b2.
    """
    base = anchor_strategy(inst)
    zero = BitString(0, inst.n)
    bob = dict(base.bob)
    for y in enumerate_matchings(inst):
        if y not in bob:
            bob[y] = filler(y) if filler is not None else (y.edges[0], zero)
    return DeterministicStrategy(inst.m, base.alice, bob)


def hill_climb(
    inst: GameInstance,
    seed: int,
    iterations: int,
    start: PartialStrategy | None = None,
    restart_every: int = 64,
    history: list[tuple[int, bool]] | None = None,
) -> tuple[DeterministicStrategy, SuccessRatio]:
    """Seeded local search over Bob tables, Alice always best-responding.

    Each iteration either proposes a single-matching change to the current
    table, accepting strict improvements, or (every ``restart_every``-th
    iteration) restarts from a fresh random table.  The best table ever
    evaluated is returned with its exact success; for a fixed seed and
    iteration count the outcome is deterministic.  When ``history`` is a
    list, a (wins, kind) pair is appended for every evaluation, with kind
    one of "start", "restart", "accept", "reject".
    """
    ctx = _context(inst.m)
    rng = random.Random(seed)

    def random_table() -> list[tuple[Edge, int]]:
        return [ents[rng.randrange(len(ents))] for ents in ctx.entries]

    def note(wins: int, kind: str) -> None:
        if history is not None:
            history.append((wins, kind))

    if start is not None:
        current = ctx.table_from_bob(start.bob)
    else:
        current = random_table()
    cur_wins, _ = ctx.evaluate(current)
    note(cur_wins, "start")
    best_wins, best_table = cur_wins, list(current)
    for it in range(iterations):
        if best_wins == ctx.total:
            break
        if restart_every and it and it % restart_every == 0:
            current = random_table()
            cur_wins, _ = ctx.evaluate(current)
            note(cur_wins, "restart")
        else:
            k = rng.randrange(len(ctx.entries))
            ents = ctx.entries[k]
            alt = ents[rng.randrange(len(ents))]
            while alt == current[k]:
                alt = ents[rng.randrange(len(ents))]
            candidate = list(current)
            candidate[k] = alt
            wins, _ = ctx.evaluate(candidate)
            if wins > cur_wins:
                note(wins, "accept")
                current, cur_wins = candidate, wins
            else:
                note(wins, "reject")
        if cur_wins > best_wins:
            best_wins, best_table = cur_wins, list(current)
    wins, choice = ctx.evaluate(best_table)
    assert wins == best_wins
    strategy = ctx.strategy_from_table(best_table, choice)
    return strategy, SuccessRatio(best_wins, ctx.total)
