"""The tmforge-v1 machine file format.

Line-oriented text: a header `tmforge-v1 <kind> <state_count>`, one
`final <state> <label>` line per final and one
`t <state> <sym> <state'> <sym'> <L|R|S>` line per transition, with the
blank symbol written `_`.  Output is canonically sorted, so identical
machines serialize byte-identically.
"""

from __future__ import annotations

from .machine import MOVE_FROM_GLYPH, MOVE_GLYPHS, Machine
from .words import BLANK, BLANK_GLYPH, GLYPHS

HEADER = "tmforge-v1"


class MachineFileError(ValueError):
    pass


def _sym_glyph(sym: int) -> str:
    return BLANK_GLYPH if sym == BLANK else GLYPHS[sym]


def _sym_from_glyph(g: str, line_no: int) -> int:
    if g == BLANK_GLYPH:
        return BLANK
    idx = GLYPHS.find(g)
    if idx < 0 or len(g) != 1:
        raise MachineFileError(f"line {line_no}: unknown symbol glyph {g!r}")
    return idx


def dump_machine(m: Machine) -> str:
    lines = [f"{HEADER} {m.kind} {m.state_count}"]
    for state, label in m.finals:
        lines.append(f"final {state} {label}")
    for s, sym, s2, sym2, move in m.transitions:
        lines.append(
            f"t {s} {_sym_glyph(sym)} {s2} {_sym_glyph(sym2)} {MOVE_GLYPHS[move]}"
        )
    return "\n".join(lines) + "\n"


def load_machine(text: str) -> Machine:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MachineFileError("empty machine file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != HEADER:
        raise MachineFileError(f"unknown machine file header: {lines[0]!r}")
    kind = head[1]
    try:
        state_count = int(head[2])
    except ValueError:
        raise MachineFileError(f"bad state count {head[2]!r}") from None
    finals = []
    transitions = []
    for no, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if parts[0] == "final":
            if len(parts) != 3:
                raise MachineFileError(f"line {no}: malformed final line")
            finals.append((int(parts[1]), parts[2]))
        elif parts[0] == "t":
            if len(parts) != 6:
                raise MachineFileError(f"line {no}: malformed transition line")
            if parts[5] not in MOVE_FROM_GLYPH:
                raise MachineFileError(f"line {no}: bad move {parts[5]!r}")
            transitions.append(
                (
                    int(parts[1]),
                    _sym_from_glyph(parts[2], no),
                    int(parts[3]),
                    _sym_from_glyph(parts[4], no),
                    MOVE_FROM_GLYPH[parts[5]],
                )
            )
        else:
            raise MachineFileError(f"line {no}: unknown directive {parts[0]!r}")
    return Machine(
        state_count=state_count,
        transitions=tuple(sorted(transitions, key=lambda r: (r[0], r[1]))),
        finals=tuple(sorted(finals)),
        kind=kind,
    )


def save(m: Machine, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_machine(m))


def load(path) -> Machine:
    with open(path, "r", encoding="utf-8") as fh:
        return load_machine(fh.read())
