"""Fast simulator core.

The hot loop is numba-compiled over dense transition arrays; undefined
transitions are materialized as stay-in-place self-loops, which makes the
divergence-by-decision semantics a plain table lookup.  The tape is a flat
int8 array grown by doubling when the head nears an edge, so far-flung
heads stay O(1) amortized per step.
"""

from __future__ import annotations

import time

import numpy as np

from .machine import (
    Configuration,
    Exhausted,
    Halted,
    LABELS,
    Machine,
    RunOutcome,
)
from .words import BLANK, TAPE_SYMBOLS, Word

try:  # pragma: no cover - exercised implicitly everywhere
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _HAVE_NUMBA = False

    def njit(*args, **kwargs):  # type: ignore
        def wrap(f):
            return f

        if args and callable(args[0]):
            return args[0]
        return wrap


_HALTED, _EXHAUSTED, _GROW = 0, 1, 2


@njit(cache=True)
def _run_core(nxt, wr, mv, final, tape, head, state, budget):  # pragma: no cover
    steps = np.int64(0)
    size = tape.shape[0]
    while True:
        if final[state] >= 0:
            return _HALTED, steps, state, head
        if steps >= budget:
            return _EXHAUSTED, steps, state, head
        if head == 0 or head == size - 1:
            return _GROW, steps, state, head
        sym = tape[head]
        tape[head] = wr[state, sym]
        head = head + mv[state, sym]
        state = nxt[state, sym]
        steps += 1


def tables(m: Machine) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Dense (next, write, move, final-label) arrays for m, cached on m."""
    cached = getattr(m, "_simcache", None)
    if cached is not None:
        return cached
    n = m.state_count
    nxt = np.empty((n, TAPE_SYMBOLS), np.int32)
    wr = np.empty((n, TAPE_SYMBOLS), np.int8)
    mv = np.zeros((n, TAPE_SYMBOLS), np.int8)
    for s in range(n):
        nxt[s, :] = s
        for sym in range(TAPE_SYMBOLS):
            wr[s, sym] = sym
    for s, sym, s2, sym2, move in m.transitions:
        nxt[s, sym] = s2
        wr[s, sym] = sym2
        mv[s, sym] = move
    final = np.full(n, -1, np.int8)
    for s, lab in m.finals:
        final[s] = LABELS.index(lab)
    arrays = (nxt, wr, mv, final)
    object.__setattr__(m, "_simcache", arrays)
    return arrays


def run_fast(m: Machine, input_word: Word, budget: int) -> RunOutcome:
    nxt, wr, mv, final = tables(m)
    size = max(4096, 4 * len(input_word) + 1024)
    tape = np.full(size, BLANK, np.int8)
    origin = size // 3
    for i, s in enumerate(input_word):
        tape[origin + i] = s
    head = origin
    state = 0
    done = 0
    while True:
        code, steps, state, head = _run_core(
            nxt, wr, mv, final, tape, head, state, budget - done
        )
        done += int(steps)
        if code == _GROW:
            grown = np.full(size * 2, BLANK, np.int8)
            shift = size // 2
            grown[shift : shift + size] = tape
            tape = grown
            origin += shift
            head += shift
            size *= 2
            continue
        cells = np.nonzero(tape != BLANK)[0]
        if code == _HALTED:
            tape_word = Word(tuple(int(tape[i]) for i in cells))
            return Halted(done, LABELS[final[state]], tape_word)
        snapshot = Configuration(
            state=int(state),
            tape={int(i - origin): int(tape[i]) for i in cells},
            head=int(head - origin),
            steps_taken=done,
        )
        return Exhausted(budget, snapshot)


def measure_steps_per_second(m: Machine, input_word: Word, steps: int) -> float:
    """Wall-clock throughput of a budgeted run (compilation excluded)."""
    run_fast(m, input_word, 1)  # warm the jit
    t0 = time.perf_counter()
    run_fast(m, input_word, steps)
    dt = time.perf_counter() - t0
    return steps / dt if dt > 0 else float("inf")


def have_numba() -> bool:
    return _HAVE_NUMBA
