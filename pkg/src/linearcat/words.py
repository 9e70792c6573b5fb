"""Words over two monoidal structures: grammar, parsing, decomposition.

A word is a finite tree built from the hole ``_``, the sum unit ``0``, the
product unit ``1``, and the binary constructors ``+`` (sum) and ``*``
(product).  The length of a word is its number of holes.  Words of length 1
decompose uniquely into a sequence of unit attachments around a hole; words
of length 2 decompose into such a sequence around a binary core.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError

SUM = "+"
PROD = "*"


class Word:
    __slots__ = ()

    def __str__(self) -> str:
        return render_word(self)


@dataclass(frozen=True, slots=True)
class Hole(Word):
    pass


@dataclass(frozen=True, slots=True)
class UnitZero(Word):
    pass


@dataclass(frozen=True, slots=True)
class UnitOne(Word):
    pass


@dataclass(frozen=True, slots=True)
class Sum(Word):
    left: Word
    right: Word


@dataclass(frozen=True, slots=True)
class Prod(Word):
    left: Word
    right: Word


HOLE = Hole()
ZERO = UnitZero()
ONE = UnitOne()


def node(op: str, left: Word, right: Word) -> Word:
    return Sum(left, right) if op == SUM else Prod(left, right)


def length(w: Word) -> int:
    """Number of hole occurrences in ``w``."""
    if isinstance(w, Hole):
        return 1
    if isinstance(w, (Sum, Prod)):
        return length(w.left) + length(w.right)
    return 0


def unit_count(w: Word) -> int:
    """Number of unit leaves (``0`` or ``1``) in ``w``."""
    if isinstance(w, (UnitZero, UnitOne)):
        return 1
    if isinstance(w, (Sum, Prod)):
        return unit_count(w.left) + unit_count(w.right)
    return 0


def is_unit_free(w: Word) -> bool:
    if isinstance(w, (UnitZero, UnitOne)):
        return False
    if isinstance(w, (Sum, Prod)):
        return is_unit_free(w.left) and is_unit_free(w.right)
    return True


def render_word(w: Word) -> str:
    """Canonical fully parenthesized text; inverse of :func:`parse_word`."""
    if isinstance(w, Hole):
        return "_"
    if isinstance(w, UnitZero):
        return "0"
    if isinstance(w, UnitOne):
        return "1"
    op = SUM if isinstance(w, Sum) else PROD
    return f"({render_word(w.left)}{op}{render_word(w.right)})"


def parse_word(text: str) -> Word:
    """Parse the grammar ``w ::= "_" | "0" | "1" | "(" w "+" w ")" | "(" w "*" w ")"``.

    Whitespace between tokens is ignored.  Raises :class:`ParseError` with
    the offending offset on malformed input.
    """
    pos = 0

    def skip_ws() -> None:
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def parse() -> Word:
        nonlocal pos
        skip_ws()
        if pos >= len(text):
            raise ParseError("unexpected end of input, expected a word", pos)
        ch = text[pos]
        if ch == "_":
            pos += 1
            return HOLE
        if ch == "0":
            pos += 1
            return ZERO
        if ch == "1":
            pos += 1
            return ONE
        if ch == "(":
            pos += 1
            left = parse()
            skip_ws()
            if pos >= len(text) or text[pos] not in (SUM, PROD):
                raise ParseError("expected '+' or '*'", pos)
            op = text[pos]
            pos += 1
            right = parse()
            skip_ws()
            if pos >= len(text) or text[pos] != ")":
                raise ParseError("expected ')'", pos)
            pos += 1
            return node(op, left, right)
        raise ParseError(f"unexpected character {ch!r}", pos)

    result = parse()
    skip_ws()
    if pos != len(text):
        raise ParseError(f"trailing input {text[pos:]!r}", pos)
    return result


@dataclass(frozen=True, slots=True)
class Attachment:
    """One unit-attachment operation: glue ``unit_word`` onto the given side."""

    op: str
    unit_word: Word
    side: str  # "left" | "right"

    def __post_init__(self) -> None:
        if self.op not in (SUM, PROD):
            raise ValueError(f"bad attachment op {self.op!r}")
        if self.side not in ("left", "right"):
            raise ValueError(f"bad attachment side {self.side!r}")
        if length(self.unit_word) != 0:
            raise ValueError("attachment unit word must have length 0")

    def apply(self, w: Word) -> Word:
        if self.side == "left":
            return node(self.op, self.unit_word, w)
        return node(self.op, w, self.unit_word)


@dataclass(frozen=True, slots=True)
class CoreSplit:
    """Decomposition of a length-2 word: attachments around ``w1 op w2``."""

    w1: Word
    op: str
    w2: Word
    attachments: tuple[Attachment, ...]

    def rebuild(self) -> Word:
        w = node(self.op, self.w1, self.w2)
        for att in self.attachments:
            w = att.apply(w)
        return w


def _peel(w: Word, stop_length: int) -> tuple[Word, tuple[Attachment, ...]]:
    """Strip outermost unit attachments until a node of the wanted kind.

    Returns the inner word together with attachments ordered innermost first,
    so that re-applying them in order reproduces ``w``.
    """
    outer: list[Attachment] = []
    cur = w
    while True:
        if stop_length == 1 and isinstance(cur, Hole):
            break
        assert isinstance(cur, (Sum, Prod)), "peel invariant broken"
        op = SUM if isinstance(cur, Sum) else PROD
        llen = length(cur.left)
        if stop_length == 2 and llen == 1 and length(cur.right) == 1:
            break
        if llen == 0:
            outer.append(Attachment(op, cur.left, "left"))
            cur = cur.right
        else:
            outer.append(Attachment(op, cur.right, "right"))
            cur = cur.left
    return cur, tuple(reversed(outer))


def attachment_sequence(w: Word) -> tuple[Attachment, ...]:
    """The unique attachment sequence producing ``w`` from a single hole.

    Only defined for words of length 1.  The sequence is ordered innermost
    first: folding it over a hole reproduces ``w`` exactly.
    """
    if length(w) != 1:
        raise ValueError(f"attachment_sequence needs a length-1 word, got length {length(w)}")
    _, atts = _peel(w, stop_length=1)
    return atts


def core_split(w: Word) -> CoreSplit:
    """The unique core decomposition of a length-2 word."""
    if length(w) != 2:
        raise ValueError(f"core_split needs a length-2 word, got length {length(w)}")
    core, atts = _peel(w, stop_length=2)
    assert isinstance(core, (Sum, Prod))
    op = SUM if isinstance(core, Sum) else PROD
    return CoreSplit(core.left, op, core.right, atts)
