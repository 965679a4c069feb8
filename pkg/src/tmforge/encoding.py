"""Canonical prefix-free machine encoding and the machine enumeration.

Layout (bit words over the two digit symbols only):

    gamma(state_count)
    gamma(final_count + 1)
    finals, sorted by state:       [state: w bits][label: 2 bits]
    gamma(transition_count + 1)
    transitions, sorted by key:    [state: w][symbol: 5][state': w][symbol': 5][move: 2]

where w = bit length of state_count-1 (zero for one-state machines),
labels are 00 Plain / 01 Proved / 10 NotProved and moves 00 L / 01 R / 10 S.
Elias gamma cannot encode zero, so the two counts that may be zero are
shifted by one.  Any out-of-order, duplicate, out-of-range or trailing
content is rejected, which makes encode/decode mutually inverse.
"""

from __future__ import annotations

from .machine import (
    LEFT,
    NOT_PROVED,
    PLAIN,
    PROVED,
    RIGHT,
    STAY,
    STM,
    TM,
    Machine,
)
from .words import TAPE_SYMBOLS, Word

_LABEL_CODE = {PLAIN: 0, PROVED: 1, NOT_PROVED: 2}
_LABEL_FROM_CODE = {v: k for k, v in _LABEL_CODE.items()}
_MOVE_CODE = {LEFT: 0, RIGHT: 1, STAY: 2}
_MOVE_FROM_CODE = {v: k for k, v in _MOVE_CODE.items()}

SYMBOL_FIELD_WIDTH = 5
LABEL_FIELD_WIDTH = 2
MOVE_FIELD_WIDTH = 2


class DecodeError(ValueError):
    """Malformed machine encoding; position is a bit index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at bit {position})")
        self.position = position


def state_field_width(state_count: int) -> int:
    return (state_count - 1).bit_length()


def gamma_bits(n: int) -> list[int]:
    if n < 1:
        raise ValueError("Elias gamma encodes positive integers only")
    payload = [int(c) for c in bin(n)[2:]]
    return [0] * (len(payload) - 1) + payload


def _fixed_bits(value: int, width: int) -> list[int]:
    if value >= (1 << width):
        raise ValueError(f"value {value} does not fit in {width} bits")
    return [(value >> (width - 1 - i)) & 1 for i in range(width)]


class _BitReader:
    def __init__(self, bits: list[int]):
        self.bits = bits
        self.pos = 0

    def gamma(self) -> int:
        z = 0
        while True:
            if self.pos + z >= len(self.bits):
                raise DecodeError("truncated gamma field", len(self.bits))
            if self.bits[self.pos + z] == 1:
                break
            z += 1
        end = self.pos + 2 * z + 1
        if end > len(self.bits):
            raise DecodeError("truncated gamma payload", len(self.bits))
        value = 0
        for b in self.bits[self.pos + z : end]:
            value = (value << 1) | b
        self.pos = end
        return value

    def fixed(self, width: int) -> int:
        end = self.pos + width
        if end > len(self.bits):
            raise DecodeError("truncated fixed-width field", len(self.bits))
        value = 0
        for b in self.bits[self.pos : end]:
            value = (value << 1) | b
        self.pos = end
        return value


def encode_bits(m: Machine) -> list[int]:
    w = state_field_width(m.state_count)
    bits = gamma_bits(m.state_count)
    bits += gamma_bits(len(m.finals) + 1)
    for state, label in m.finals:
        bits += _fixed_bits(state, w)
        bits += _fixed_bits(_LABEL_CODE[label], LABEL_FIELD_WIDTH)
    bits += gamma_bits(len(m.transitions) + 1)
    for s, sym, s2, sym2, move in m.transitions:
        bits += _fixed_bits(s, w)
        bits += _fixed_bits(sym, SYMBOL_FIELD_WIDTH)
        bits += _fixed_bits(s2, w)
        bits += _fixed_bits(sym2, SYMBOL_FIELD_WIDTH)
        bits += _fixed_bits(_MOVE_CODE[move], MOVE_FIELD_WIDTH)
    return bits


def encode(m: Machine) -> Word:
    """Encode a machine as a bit word (an A-word over the digit symbols)."""
    return Word(tuple(encode_bits(m)))


def decode_bits(bits: list[int]) -> Machine:
    r = _BitReader(bits)
    n = r.gamma()
    if n < 1:
        raise DecodeError("state count must be positive", 0)
    w = state_field_width(n)

    final_count = r.gamma() - 1
    if final_count < 0:
        raise DecodeError("bad final count", r.pos)
    finals = []
    prev_state = -1
    labels = set()
    for _ in range(final_count):
        at = r.pos
        state = r.fixed(w)
        label_code = r.fixed(LABEL_FIELD_WIDTH)
        if state >= n:
            raise DecodeError("final state out of range", at)
        if state <= prev_state:
            raise DecodeError("finals not strictly sorted", at)
        prev_state = state
        if label_code not in _LABEL_FROM_CODE:
            raise DecodeError("bad final label", at)
        label = _LABEL_FROM_CODE[label_code]
        labels.add(label)
        finals.append((state, label))
    if labels == {PLAIN} or not labels:
        kind = TM
    elif PLAIN not in labels and {PROVED, NOT_PROVED} <= labels:
        kind = STM
    else:
        raise DecodeError("inconsistent final labels", r.pos)
    finals_set = {s for s, _ in finals}

    transition_count = r.gamma() - 1
    if transition_count < 0:
        raise DecodeError("bad transition count", r.pos)
    transitions = []
    prev_key = (-1, -1)
    for _ in range(transition_count):
        at = r.pos
        s = r.fixed(w)
        sym = r.fixed(SYMBOL_FIELD_WIDTH)
        s2 = r.fixed(w)
        sym2 = r.fixed(SYMBOL_FIELD_WIDTH)
        move_code = r.fixed(MOVE_FIELD_WIDTH)
        if s >= n or s2 >= n:
            raise DecodeError("transition state out of range", at)
        if sym >= TAPE_SYMBOLS or sym2 >= TAPE_SYMBOLS:
            raise DecodeError("transition symbol out of range", at)
        if (s, sym) <= prev_key:
            raise DecodeError("transitions not strictly sorted", at)
        prev_key = (s, sym)
        if move_code not in _MOVE_FROM_CODE:
            raise DecodeError("bad move code", at)
        if s in finals_set:
            raise DecodeError("final state has outgoing transition", at)
        transitions.append((s, sym, s2, sym2, _MOVE_FROM_CODE[move_code]))
    if r.pos != len(bits):
        raise DecodeError("trailing bits after machine encoding", r.pos)
    return Machine(
        state_count=n,
        transitions=tuple(transitions),
        finals=tuple(finals),
        kind=kind,
    )


def decode(w: Word) -> Machine:
    """Inverse of encode; raises DecodeError on malformed input."""
    bits = []
    for i, s in enumerate(w):
        if s not in (0, 1):
            raise DecodeError("non-digit symbol in encoding", i)
        bits.append(s)
    return decode_bits(bits)


def try_decode_bits(bits: list[int]) -> Machine | None:
    try:
        return decode_bits(bits)
    except DecodeError:
        return None


def iter_machines():
    """All machines, in shortlex order of their (digit-only) encodings."""
    length = 1
    while True:
        for value in range(1 << length):
            bits = [(value >> (length - 1 - i)) & 1 for i in range(length)]
            m = try_decode_bits(bits)
            if m is not None:
                yield m
        length += 1


def enumerate_machines(k: int) -> list[Machine]:
    """First k machines in shortlex order of their encodings, gap-free."""
    if k < 0:
        raise ValueError("k must be non-negative")
    out = []
    for m in iter_machines():
        if len(out) >= k:
            break
        out.append(m)
    return out[:k]
