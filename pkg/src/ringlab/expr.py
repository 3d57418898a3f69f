"""Ring-construction expressions.

Grammar (constructor names are case-insensitive, whitespace is ignored)::

    expr  := IDENT '(' [arg (',' arg)*] ')'
    arg   := INT | expr | IDENT | '[' [INT (',' INT)*] ']'

Constructors: ``Z(n)``, ``F(q)``, ``prod(e, ...)``, ``M(n, e)``, ``T(n, e)``,
``TE(e)`` (= T(R, R)), ``TE2(e)`` (= T(R, R+R)), ``GR(e, group)``,
``quot(e, [generators])``, ``corner(e, idempotent)``, ``morita(name)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from . import constructions as C
from .groups import get_group, standard_groups
from .ring import FiniteRing, RingError
from .subsets import ideal_generated_by

FIELD_ORDERS = (2, 3, 4, 5, 7, 8, 9)


class ExprError(ValueError):
    """Base class for errors in ring expressions."""


class ParseError(ExprError):
    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        self.position = position
        self.expected = expected
        hint = f"; expected {' or '.join(expected)}" if expected else ""
        super().__init__(f"syntax error at offset {position}: {message}{hint}")


class UnknownConstructorError(ExprError):
    pass


class ArityError(ExprError):
    pass


Arg = Union[int, "Node", str, tuple]


@dataclass(frozen=True)
class Node:
    ctor: str
    args: tuple

    def __str__(self) -> str:
        return to_text(self)


# canonical name -> argument kinds ("int", "expr", "name", "list", "expr+")
SIGNATURES: dict[str, tuple[str, ...]] = {
    "Z": ("int",),
    "F": ("int",),
    "prod": ("expr+",),
    "M": ("int", "expr"),
    "T": ("int", "expr"),
    "TE": ("expr",),
    "TE2": ("expr",),
    "GR": ("expr", "name"),
    "quot": ("expr", "list"),
    "corner": ("expr", "int"),
    "morita": ("name",),
}
_CANONICAL = {k.lower(): k for k in SIGNATURES}

_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[(),\[\]]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            offset = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[offset]!r}", offset)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str, value: str | None = None, expected=()):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            shown = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise ParseError(f"unexpected {shown}", tok[2], expected or (repr(value) if value else kind,))
        self.i += 1
        return tok

    def expr(self) -> Node:
        kind, value, pos = self.peek()
        if kind != "ident":
            shown = "end of input" if kind == "eof" else repr(value)
            raise ParseError(f"unexpected {shown}", pos, ("constructor name",))
        self.i += 1
        ctor = _CANONICAL.get(value.lower())
        if ctor is None:
            raise UnknownConstructorError(
                f"unknown constructor {value!r} at offset {pos}; known: {', '.join(SIGNATURES)}")
        self.take("punct", "(", ("'('",))
        args: list = []
        if self.peek()[1] != ")":
            args.append(self.arg())
            while self.peek()[1] == ",":
                self.i += 1
                args.append(self.arg())
        self.take("punct", ")", ("','", "')'"))
        node = Node(ctor, tuple(args))
        _check(node, pos)
        return canonical(node, deep=False)

    def arg(self) -> Arg:
        kind, value, pos = self.peek()
        if kind == "int":
            self.i += 1
            return int(value)
        if kind == "punct" and value == "[":
            self.i += 1
            items = []
            if self.peek()[1] != "]":
                items.append(int(self.take("int", expected=("integer",))[1]))
                while self.peek()[1] == ",":
                    self.i += 1
                    items.append(int(self.take("int", expected=("integer",))[1]))
            self.take("punct", "]", ("','", "']'"))
            return tuple(items)
        if kind == "ident":
            if self.tokens[self.i + 1][1] == "(":
                return self.expr()
            self.i += 1
            return value
        shown = "end of input" if kind == "eof" else repr(value)
        raise ParseError(f"unexpected {shown}", pos, ("integer", "expression", "name", "'['"))


def _kind(arg) -> str:
    if isinstance(arg, bool):
        return "?"
    if isinstance(arg, int):
        return "int"
    if isinstance(arg, Node):
        return "expr"
    if isinstance(arg, str):
        return "name"
    if isinstance(arg, tuple):
        return "list"
    return "?"


def _check(node: Node, pos: int = 0) -> None:
    sig = SIGNATURES[node.ctor]
    kinds = tuple(_kind(a) for a in node.args)
    if sig == ("expr+",):
        ok = len(kinds) >= 1 and all(k == "expr" for k in kinds)
    else:
        ok = kinds == sig
    if not ok:
        want = "expr, ..." if sig == ("expr+",) else ", ".join(sig)
        raise ArityError(f"{node.ctor} at offset {pos} takes ({want}), got ({', '.join(kinds)})")
    a = node.args
    if node.ctor == "Z" and a[0] < 1:
        raise ArityError(f"Z(n) needs n >= 1, got {a[0]}")
    if node.ctor == "F" and a[0] not in FIELD_ORDERS:
        raise ArityError(f"F(q) supports q in {FIELD_ORDERS}, got {a[0]}")
    if node.ctor in ("M", "T") and a[0] < 1:
        raise ArityError(f"{node.ctor}(n, e) needs n >= 1, got {a[0]}")
    if node.ctor == "GR":
        try:
            get_group(a[1])
        except ValueError as exc:
            raise ArityError(str(exc)) from None
    if node.ctor == "morita" and a[0].upper() not in C.MORITA_NAMES:
        raise ArityError(f"unknown Morita example {a[0]!r}; known: {', '.join(C.MORITA_NAMES)}")
    if node.ctor == "corner" and a[1] < 0:
        raise ArityError("corner index must be non-negative")
    if node.ctor == "quot" and any(g < 0 for g in a[1]):
        raise ArityError("generator indices must be non-negative")


def parse_expr(text: str) -> Node:
    parser = _Parser(text)
    node = parser.expr()
    parser.take("eof", expected=("end of input",))
    return node


def _canonical_name(node: Node, name: str) -> str:
    if node.ctor == "GR":
        return get_group(name).label
    return name.upper()


def to_text(node: Node) -> str:
    parts = []
    for a in node.args:
        if isinstance(a, Node):
            parts.append(to_text(a))
        elif isinstance(a, tuple):
            parts.append("[" + ", ".join(str(v) for v in a) + "]")
        elif isinstance(a, str):
            parts.append(_canonical_name(node, a))
        else:
            parts.append(str(a))
    return f"{node.ctor}({', '.join(parts)})"


def canonical(node: Node, deep: bool = True) -> Node:
    """Node with group and Morita names normalized, as the parser produces them."""
    args = tuple(canonical(a) if deep and isinstance(a, Node) else
                 _canonical_name(node, a) if isinstance(a, str) else a for a in node.args)
    return Node(node.ctor, args)


def eval_expr(node: Node | str, max_order: int | None = None) -> FiniteRing:
    """Construct the ring an expression denotes."""
    if isinstance(node, str):
        node = parse_expr(node)
    a = node.args
    ctor = node.ctor
    if ctor == "Z":
        ring = C.zmod(a[0], max_order)
        return ring.relabel("0") if a[0] == 1 else ring
    if ctor == "F":
        return C.galois_field(a[0], max_order)
    if ctor == "prod":
        return C.direct_product([eval_expr(x, max_order) for x in a], max_order)
    if ctor == "M":
        return C.matrix_ring(eval_expr(a[1], max_order), a[0], max_order)
    if ctor == "T":
        return C.upper_triangular_ring(eval_expr(a[1], max_order), a[0], max_order)
    if ctor == "TE":
        base = eval_expr(a[0], max_order)
        return C.trivial_extension(base, C.regular_bimodule(base), label=f"TE({base.label})",
                                   max_order=max_order)
    if ctor == "TE2":
        base = eval_expr(a[0], max_order)
        reg = C.regular_bimodule(base)
        module = C.direct_sum_bimodule([reg, reg], label=f"{base.label}^2")
        return C.trivial_extension(base, module, label=f"TE2({base.label})", max_order=max_order)
    if ctor == "GR":
        base = eval_expr(a[0], max_order)
        return C.group_ring(base, get_group(a[1]), max_order)[0]
    if ctor == "quot":
        base = eval_expr(a[0], max_order)
        bad = [g for g in a[1] if g >= base.order]
        if bad:
            raise RingError(f"generator indices {bad} out of range for {base.label}")
        ideal = ideal_generated_by(base, a[1], "two-sided")
        gens = ",".join(str(g) for g in a[1])
        return C.quotient_ring(base, ideal, label=f"{base.label}/<{gens}>")[0]
    if ctor == "corner":
        base = eval_expr(a[0], max_order)
        if a[1] >= base.order:
            raise RingError(f"index {a[1]} out of range for {base.label}")
        return C.corner_ring(base, a[1], label=f"corner({base.label}, {a[1]})")[0]
    if ctor == "morita":
        return C.morita_ring(C.named_morita(a[0]), max_order)
    raise UnknownConstructorError(ctor)  # pragma: no cover - parse_expr rejects these


def group_names() -> tuple[str, ...]:
    return tuple(standard_groups())
