"""Poset text files, the bundled corpus, and DOT output.

File format::

    # comment
    poset fig1
    elements: 0 a b c d 1
    covers: 0<a 0<b a<c ...      (or)   order: 0<=a a<=c ...

Labels are opaque whitespace-free tokens.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from importlib import resources
from pathlib import Path

from .congruence import ConFamily, format_relation
from .poset import Poset, PosetError, build_poset


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = ""):
        where = f"{source}:{line}: " if line is not None else (f"{source}: " if source else "")
        super().__init__(where + message)
        self.line = line


@dataclass
class PosetDocument:
    name: str
    poset: Poset
    source: str = ""

    @cached_property
    def star(self):
        """Relative pseudocomplement table, or None when one does not exist."""
        from .heyting import star_table

        return star_table(self.poset)

    @cached_property
    def comp(self):
        from .boolean import find_complementation

        return find_complementation(self.poset) if self.poset.bounded else None


def parse_poset_text(text: str, source: str = "<string>") -> PosetDocument:
    name = None
    labels = None
    relation = None
    mode = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if name is None:
            head, _, rest = line.partition(" ")
            if head != "poset" or not rest.strip():
                raise ParseError("expected 'poset <name>'", lineno, source)
            name = rest.strip()
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise ParseError(f"expected 'key: value', got {line!r}", lineno, source)
        if key == "elements":
            if labels is not None:
                raise ParseError("duplicate 'elements' line", lineno, source)
            labels = rest.split()
        elif key in ("covers", "order"):
            if relation is not None:
                raise ParseError("duplicate relation line", lineno, source)
            if labels is None:
                raise ParseError(f"'{key}' before 'elements'", lineno, source)
            sepr = "<" if key == "covers" else "<="
            mode = "covers" if key == "covers" else "full"
            relation = []
            for tok in rest.split():
                a, s, b = tok.partition(sepr)
                if not s or not a or not b or (key == "covers" and b.startswith("=")):
                    raise ParseError(f"bad relation token {tok!r}", lineno, source)
                relation.append((a, b))
            try:
                poset = build_poset(labels, relation, mode=mode, name=name)
            except PosetError as exc:
                raise ParseError(str(exc), lineno, source) from None
        else:
            raise ParseError(f"unknown key {key!r}", lineno, source)
    if name is None:
        raise ParseError("empty file", None, source)
    if labels is None:
        raise ParseError("missing 'elements' line", None, source)
    if relation is None:
        try:
            poset = build_poset(labels, [], name=name)
        except PosetError as exc:
            raise ParseError(str(exc), None, source) from None
    return PosetDocument(name, poset, source)


def parse_poset_file(path: str | Path) -> PosetDocument:
    path = Path(path)
    return parse_poset_text(path.read_text(encoding="utf-8"), str(path))


def format_poset(P: Poset, name: str | None = None) -> str:
    """Canonical text form: the cover relation in index order."""
    covers = " ".join(f"{P.labels[i]}<{P.labels[j]}" for i, j in P.covers)
    return (
        f"poset {name or P.name or 'P'}\n"
        f"elements: {' '.join(P.labels)}\n"
        f"covers: {covers}\n".replace("covers: \n", "covers:\n")
    )


# -- bundled corpus ---------------------------------------------------------------

BUNDLED = (
    "fig1", "fig3", "fig4", "fig6",
    "chain1", "chain2", "chain3", "chain4",
    "antichain2", "antichain3",
    "bool1", "bool2", "bool3",
)


def bundled_names() -> list[str]:
    return list(BUNDLED)


def load_bundled(name: str) -> PosetDocument:
    if name not in BUNDLED:
        raise KeyError(f"no bundled poset named {name!r}")
    ref = resources.files("posetcong") / "data" / f"{name}.poset"
    return parse_poset_text(ref.read_text(encoding="utf-8"), f"{name}.poset")


def load(spec: str | Path) -> PosetDocument:
    """Parse a file path, falling back to the bundled poset named by its stem."""
    path = Path(spec)
    if path.is_file():
        return parse_poset_file(path)
    stem = path.name.removesuffix(".poset")
    if stem in BUNDLED:
        return load_bundled(stem)
    raise FileNotFoundError(f"no such poset file or bundled poset: {spec}")


# -- DOT ------------------------------------------------------------------------------


def _quote(s: str) -> str:
    return '"' + s.replace('"', '\\"') + '"'


def emit_dot(P: Poset, graph_name: str | None = None, node_labels: list[str] | None = None) -> str:
    """Hasse diagram of P as a DOT digraph, edges pointing upward."""
    node_labels = node_labels or list(P.labels)
    lines = [f"digraph {_quote(graph_name or P.name or 'P')} {{", "  rankdir=BT;"]
    for i in range(P.n):
        lines.append(f"  n{i} [label={_quote(node_labels[i])}];")
    for i, j in P.covers:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_con_dot(family: ConFamily, graph_name: str | None = None) -> str:
    """Hasse diagram of a congruence family under inclusion."""
    labels = [
        f"{nm}\\n{format_relation(family.poset, t)}" if nm not in ("delta", "nabla") else nm
        for nm, t in zip(family.names, family.members)
    ]
    return emit_dot(family.as_poset(), graph_name or f"Con {family.poset.name}", labels)
