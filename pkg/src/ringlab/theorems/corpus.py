"""The standard corpus of small rings and the corpus file format.

A corpus file has one ``label<TAB>expression`` pair per line; blank lines
and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from ..expr import Node, eval_expr, parse_expr
from ..ring import FiniteRing, validate

STANDARD = (
    ("0", "Z(1)"),
    ("F2", "F(2)"),
    ("F3", "F(3)"),
    ("F4", "F(4)"),
    ("F5", "F(5)"),
    ("F8", "F(8)"),
    ("Z4", "Z(4)"),
    ("Z6", "Z(6)"),
    ("Z8", "Z(8)"),
    ("Z9", "Z(9)"),
    ("Z16", "Z(16)"),
    ("F2xF2", "prod(F(2), F(2))"),
    ("Z2xZ4", "prod(Z(2), Z(4))"),
    ("F2xF3", "prod(F(2), F(3))"),
    ("T2(F2)", "T(2, F(2))"),
    ("T3(F2)", "T(3, F(2))"),
    ("T2(Z4)", "T(2, Z(4))"),
    ("M2(F2)", "M(2, F(2))"),
    ("M2(Z4)", "M(2, Z(4))"),
    ("T(F2,F2)", "TE(F(2))"),
    ("T(Z4,Z4)", "TE(Z(4))"),
    ("T(F2,F2^2)", "TE2(F(2))"),
    ("Z8/<4>", "quot(Z(8), [4])"),
    ("e11.T2(Z4).e11", "corner(T(2, Z(4)), 16)"),
    ("Morita R1", "morita(R1)"),
    ("Morita R2", "morita(R2)"),
    ("Morita R1J", "morita(R1J)"),
    ("Morita R2J", "morita(R2J)"),
    ("Morita T2F2", "morita(T2F2)"),
    ("Morita T2F3", "morita(T2F3)"),
    ("Morita F2F2", "morita(F2F2)"),
    ("Morita FULLZ4", "morita(FULLZ4)"),
    ("Morita SPLITZ4", "morita(SPLITZ4)"),
    ("F2[C2]", "GR(F(2), C2)"),
    ("F2[C4]", "GR(F(2), C4)"),
    ("F2[C2xC2]", "GR(F(2), C2xC2)"),
    ("Z4[C2]", "GR(Z(4), C2)"),
    ("F2[C3]", "GR(F(2), C3)"),
    ("F4[C2]", "GR(F(4), C2)"),
    ("Z4[C3]", "GR(Z(4), C3)"),
    ("F2[S3]", "GR(F(2), S3)"),
    ("F2[D4]", "GR(F(2), D4)"),
    ("F3[C2]", "GR(F(3), C2)"),
    ("F3[C3]", "GR(F(3), C3)"),
    ("F2[C5]", "GR(F(2), C5)"),
    ("T2(F2)[C2]", "GR(T(2, F(2)), C2)"),
)


class CorpusError(ValueError):
    pass


@dataclass(eq=False)
class CorpusEntry:
    label: str
    text: str
    expr: Node
    max_order: int | None = None
    _ring: FiniteRing | None = field(default=None, repr=False)
    _parts: dict = field(default_factory=dict, repr=False)

    @property
    def ring(self) -> FiniteRing:
        if self._ring is None:
            self._ring = eval_expr(self.expr, self.max_order).relabel(self.label)
        return self._ring

    def part(self, node: Node) -> FiniteRing:
        """Evaluate a sub-expression (cached per entry)."""
        key = str(node)
        if key not in self._parts:
            self._parts[key] = eval_expr(node, self.max_order)
        return self._parts[key]

    @property
    def ctor(self) -> str:
        return self.expr.ctor


@dataclass
class Corpus:
    entries: list

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def build(self, validate_axioms: bool = True) -> "Corpus":
        """Construct every ring, validating each exactly once."""
        for entry in self.entries:
            ring = entry.ring
            if validate_axioms and not ring.cache.get("validated"):
                validate(ring)
                ring.cache["validated"] = True
        return self

    def labels(self) -> list[str]:
        return [e.label for e in self.entries]

    def get(self, label: str) -> CorpusEntry:
        for e in self.entries:
            if e.label == label:
                return e
        raise KeyError(label)


def make_corpus(pairs, max_order: int | None = None) -> Corpus:
    entries = []
    seen = set()
    for label, text in pairs:
        if label in seen:
            raise CorpusError(f"duplicate corpus label {label!r}")
        seen.add(label)
        entries.append(CorpusEntry(label, text, parse_expr(text), max_order))
    return Corpus(entries)


_STANDARD_CACHE: dict = {}


def standard_corpus(max_order: int | None = None, fresh: bool = False) -> Corpus:
    """The built-in corpus; shared per ``max_order`` unless ``fresh``."""
    if fresh:
        return make_corpus(STANDARD, max_order)
    if max_order not in _STANDARD_CACHE:
        _STANDARD_CACHE[max_order] = make_corpus(STANDARD, max_order)
    return _STANDARD_CACHE[max_order]


def parse_corpus_text(text: str, max_order: int | None = None) -> Corpus:
    pairs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if "\t" not in line:
            raise CorpusError(f"line {lineno}: expected 'label<TAB>expression'")
        label, expression = line.split("\t", 1)
        pairs.append((label.strip(), expression.strip()))
    return make_corpus(pairs, max_order)


def load_corpus(path: str | Path, max_order: int | None = None) -> Corpus:
    return parse_corpus_text(Path(path).read_text(), max_order)


def dump_corpus(corpus: Corpus) -> str:
    return "".join(f"{e.label}\t{e.text}\n" for e in corpus.entries)
