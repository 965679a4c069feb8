"""Machine data model, budgeted simulator and the breve transform.

Machines are deterministic single-tape machines over the 18-symbol tape
alphabet (the 17 word symbols plus the machine-internal blank).  Halting
means reaching a final state; an undefined transition leaves head, state
and tape unchanged while consuming one step, i.e. it diverges by decision.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .words import BLANK, TAPE_SYMBOLS, Word

LEFT, RIGHT, STAY = -1, 1, 0
MOVES = (LEFT, RIGHT, STAY)
MOVE_GLYPHS = {LEFT: "L", RIGHT: "R", STAY: "S"}
MOVE_FROM_GLYPH = {v: k for k, v in MOVE_GLYPHS.items()}

PLAIN, PROVED, NOT_PROVED = "Plain", "Proved", "NotProved"
LABELS = (PLAIN, PROVED, NOT_PROVED)

TM, STM = "TM", "STM"


class KindError(TypeError):
    """Operation applied to a machine of the wrong kind."""


class MachineError(ValueError):
    """Machine table violates a structural invariant."""


Transition = tuple[int, int, int]  # (next_state, written_symbol, move)


@dataclass(frozen=True)
class Machine:
    """Immutable machine table.

    states are 0..state_count-1 with 0 initial; transitions maps
    (state, read_symbol) to (next_state, written_symbol, move); finals maps
    a state to its label.  A TM carries only Plain labels (zero or more
    finals); an STM carries at least one Proved and one NotProved final and
    no Plain ones.
    """

    state_count: int
    transitions: tuple[tuple[int, int, int, int, int], ...]
    finals: tuple[tuple[int, str], ...]
    kind: str = TM

    def __post_init__(self) -> None:
        n = self.state_count
        if n < 1:
            raise MachineError("a machine needs at least one state")
        if self.kind not in (TM, STM):
            raise MachineError(f"unknown machine kind {self.kind!r}")
        finals = dict(self.finals)
        if len(finals) != len(self.finals):
            raise MachineError("duplicate final state")
        labels = set(finals.values())
        if self.kind == TM:
            if labels - {PLAIN}:
                raise MachineError("TM finals must all be Plain")
        else:
            if PLAIN in labels or not {PROVED, NOT_PROVED} <= labels:
                raise MachineError(
                    "STM finals must include Proved and NotProved and no Plain"
                )
        for s, lab in self.finals:
            if not 0 <= s < n:
                raise MachineError(f"final state {s} out of range")
            if lab not in LABELS:
                raise MachineError(f"unknown final label {lab!r}")
        seen: set[tuple[int, int]] = set()
        prev = None
        for s, sym, s2, sym2, move in self.transitions:
            key = (s, sym)
            if key in seen:
                raise MachineError(f"duplicate transition for {key}")
            seen.add(key)
            if prev is not None and key < prev:
                raise MachineError("transitions must be sorted by (state, symbol)")
            prev = key
            if not (0 <= s < n and 0 <= s2 < n):
                raise MachineError(f"transition state out of range: {(s, s2)}")
            if not (0 <= sym < TAPE_SYMBOLS and 0 <= sym2 < TAPE_SYMBOLS):
                raise MachineError(f"transition symbol out of range: {(sym, sym2)}")
            if move not in MOVES:
                raise MachineError(f"bad move {move}")
            if s in finals:
                raise MachineError(f"final state {s} has an outgoing transition")
        object.__setattr__(self, "_table", dict(((s, sym), (s2, sym2, mv))
                                                for s, sym, s2, sym2, mv in self.transitions))
        object.__setattr__(self, "_finals_map", finals)

    # --- lookups -------------------------------------------------------

    @property
    def finals_map(self) -> Mapping[int, str]:
        return self._finals_map  # type: ignore[attr-defined]

    def transition(self, state: int, symbol: int) -> Transition | None:
        return self._table.get((state, symbol))  # type: ignore[attr-defined]

    def final_label(self, state: int) -> str | None:
        return self._finals_map.get(state)  # type: ignore[attr-defined]

    @property
    def transition_count(self) -> int:
        return len(self.transitions)


def make_machine(
    state_count: int,
    transitions: Mapping[tuple[int, int], Transition] | Iterable[tuple[int, int, int, int, int]],
    finals: Mapping[int, str] | Iterable[tuple[int, str]],
    kind: str = TM,
) -> Machine:
    """Build a Machine from unsorted mapping-style data."""
    if isinstance(transitions, Mapping):
        rows = [(s, sym, *t) for (s, sym), t in transitions.items()]
    else:
        rows = [tuple(r) for r in transitions]
    if isinstance(finals, Mapping):
        fin = list(finals.items())
    else:
        fin = [tuple(f) for f in finals]
    return Machine(
        state_count=state_count,
        transitions=tuple(sorted(rows, key=lambda r: (r[0], r[1]))),
        finals=tuple(sorted(fin)),
        kind=kind,
    )


@dataclass
class Configuration:
    """A single mutable run session: state, sparse tape, head, step count."""

    state: int = 0
    tape: dict[int, int] = field(default_factory=dict)
    head: int = 0
    steps_taken: int = 0

    def read(self) -> int:
        return self.tape.get(self.head, BLANK)

    def tape_word(self) -> Word:
        """Non-blank cells in tape order, blanks stripped."""
        return Word(tuple(self.tape[i] for i in sorted(self.tape)
                          if self.tape[i] != BLANK))

    def window(self, radius: int = 5) -> list[int]:
        return [self.tape.get(i, BLANK)
                for i in range(self.head - radius, self.head + radius + 1)]


@dataclass(frozen=True)
class Halted:
    steps: int
    final_label: str
    tape_word: Word

    @property
    def halted(self) -> bool:
        return True


@dataclass(frozen=True)
class Exhausted:
    budget: int
    snapshot: Configuration

    @property
    def halted(self) -> bool:
        return False


RunOutcome = Halted | Exhausted


def start(m: Machine, input_word: Word) -> Configuration:
    """Initial configuration: input left-justified from cell 0, head at 0."""
    tape = {i: s for i, s in enumerate(input_word)}
    return Configuration(state=0, tape=tape, head=0, steps_taken=0)


def step(m: Machine, conf: Configuration) -> bool:
    """Advance one step in place; returns False when already in a final state."""
    if m.final_label(conf.state) is not None:
        return False
    sym = conf.read()
    t = m.transition(conf.state, sym)
    if t is not None:
        s2, sym2, move = t
        if sym2 == BLANK:
            conf.tape.pop(conf.head, None)
        else:
            conf.tape[conf.head] = sym2
        conf.head += move
        conf.state = s2
    # undefined transition: stay put, same state
    conf.steps_taken += 1
    return True


def run_python(m: Machine, input_word: Word, budget: int) -> RunOutcome:
    """Pure-Python reference run; exact single-step semantics."""
    conf = start(m, input_word)
    for _ in range(budget):
        if m.final_label(conf.state) is not None:
            break
        if not step(m, conf):
            break
    label = m.final_label(conf.state)
    if label is not None:
        return Halted(conf.steps_taken, label, conf.tape_word())
    return Exhausted(budget, conf)


def run(m: Machine, input_word: Word, budget: int, engine: str = "auto") -> RunOutcome:
    """Run m on input_word for at most budget steps.

    Returns Halted at the first arrival in a final state within the budget,
    else Exhausted.  Pure function of (m, input_word, budget).
    """
    if budget < 0:
        raise ValueError("budget must be non-negative")
    if engine == "python":
        return run_python(m, input_word, budget)
    from . import simulator

    return simulator.run_fast(m, input_word, budget)


def breve(s: Machine) -> Machine:
    """STM -> TM: Proved finals become Plain; NotProved finals self-loop."""
    if s.kind != STM:
        raise KindError("breve expects an STM")
    finals = []
    transitions = list(s.transitions)
    for st, lab in s.finals:
        if lab == PROVED:
            finals.append((st, PLAIN))
        else:
            for sym in range(TAPE_SYMBOLS):
                transitions.append((st, sym, st, sym, STAY))
    return Machine(
        state_count=s.state_count,
        transitions=tuple(sorted(transitions, key=lambda r: (r[0], r[1]))),
        finals=tuple(sorted(finals)),
        kind=TM,
    )


def reachable_states(m: Machine) -> set[int]:
    """States reachable from the initial state along transition edges."""
    seen = {0}
    frontier = [0]
    out: dict[int, list[int]] = {}
    for s, _sym, s2, _sym2, _mv in m.transitions:
        out.setdefault(s, []).append(s2)
    while frontier:
        s = frontier.pop()
        for s2 in out.get(s, ()):
            if s2 not in seen:
                seen.add(s2)
                frontier.append(s2)
    return seen
