"""tmforge: construct, run and verify self-referential Turing machines."""

from .words import (
    EPSILON,
    FieldCountError,
    Word,
    shortlex_index,
    split_fields,
    theta_join,
    word_at,
    word_from_text,
    word_to_text,
)
from .machine import (
    Configuration,
    Exhausted,
    Halted,
    KindError,
    Machine,
    MachineError,
    breve,
    make_machine,
    run,
    start,
)
from .encoding import DecodeError, decode, encode, enumerate_machines

__all__ = [
    "EPSILON",
    "FieldCountError",
    "Word",
    "shortlex_index",
    "split_fields",
    "theta_join",
    "word_at",
    "word_from_text",
    "word_to_text",
    "Configuration",
    "Exhausted",
    "Halted",
    "KindError",
    "Machine",
    "MachineError",
    "breve",
    "make_machine",
    "run",
    "start",
    "DecodeError",
    "decode",
    "encode",
    "enumerate_machines",
]

__version__ = "0.1.0"
