"""PGSolver text format and JSON result reports."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping

from .game import Game, Owner, build_game, normalize_self_loops


class FormatError(ValueError):
    def __init__(self, message: str, line: int, column: int | None = None):
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.column = column


class PGSyntaxError(FormatError):
    def __init__(self, line: int, column: int, expected: str, found: str):
        super().__init__(f"expected {expected}, found {found}", line, column)
        self.expected = expected


class UnknownOwner(FormatError):
    def __init__(self, value: int, line: int, column: int):
        super().__init__(f"unknown owner {value} (expected 0 or 1)", line, column)
        self.value = value


class DanglingEdge(FormatError):
    def __init__(self, node: int, target: int, line: int):
        super().__init__(f"node {node} has an edge to undefined node {target}", line)
        self.node = node
        self.target = target


class DuplicateNode(FormatError):
    def __init__(self, node: int, line: int):
        super().__init__(f"node {node} is defined twice", line)
        self.node = node


@dataclass
class NamedGame:
    game: Game
    original_ids: tuple[int, ...]
    names: dict[int, str] = field(default_factory=dict)
    synthetic: frozenset[int] = frozenset()
    notes: list[str] = field(default_factory=list, compare=False)

    def external(self, nodes: Iterable[int]) -> list[int]:
        """Sorted external ids of `nodes`, leaving out nodes added by normalization."""
        return sorted(self.original_ids[v] for v in nodes if v not in self.synthetic)

    @classmethod
    def plain(cls, game: Game) -> "NamedGame":
        return cls(game, tuple(game.nodes))


_TOKEN = re.compile(
    r"""(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<int>-?\d+)|(?P<word>[A-Za-z_]\w*)"""
    r"""|(?P<str>"(?:[^"\\\n]|\\.)*")|(?P<punct>[;,])"""
)


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PGSyntaxError(line, pos - line_start + 1, "a token", repr(text[pos]))
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind != "ws":
            toks.append(_Tok(kind, m.group(), line, m.start() - line_start + 1))
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self, kind: str, expected: str, text: str | None = None) -> _Tok:
        tok = self.toks[self.i]
        if tok.kind != kind or (text is not None and tok.text != text):
            found = "end of input" if tok.kind == "eof" else repr(tok.text)
            raise PGSyntaxError(tok.line, tok.col, expected, found)
        self.i += 1
        return tok

    def nat(self, expected: str) -> _Tok:
        tok = self.take("int", expected)
        if tok.text.startswith("-"):
            raise PGSyntaxError(tok.line, tok.col, expected, repr(tok.text))
        return tok


def _unquote(s: str) -> str:
    return re.sub(r"\\(.)", r"\1", s[1:-1])


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def parse_pgsolver(text: str) -> NamedGame:
    """Parse PGSolver text.

    Statements end with ';' and may share or span lines. Accepted: an
    optional `parity <max-id>;` header (advisory), an optional `start <id>;`
    (ignored), then `<id> <priority> <owner> <succ>,...,<succ> ["name"];`.
    Ids may be sparse; dense ids follow ascending external id. Self-loops
    are subdivided and duplicate edges dropped; see `NamedGame.notes`.
    """
    p = _Parser(text)
    if p.peek().kind == "word" and p.peek().text == "parity":
        p.take("word", "'parity'")
        p.nat("maximum node id")
        p.take("punct", "';'", ";")
    if p.peek().kind == "word" and p.peek().text == "start":
        p.take("word", "'start'")
        p.nat("start node id")
        p.take("punct", "';'", ";")

    entries: dict[int, tuple[int, int, list[int], str | None, int]] = {}
    while p.peek().kind != "eof":
        id_tok = p.nat("node id")
        prio = int(p.nat("priority").text)
        owner_tok = p.nat("owner")
        owner = int(owner_tok.text)
        if owner not in (0, 1):
            raise UnknownOwner(owner, owner_tok.line, owner_tok.col)
        succ = [int(p.nat("successor id").text)]
        while p.peek().kind == "punct" and p.peek().text == ",":
            p.take("punct", "','")
            succ.append(int(p.nat("successor id").text))
        name = None
        if p.peek().kind == "str":
            name = _unquote(p.take("str", "node name").text)
        p.take("punct", "';'", ";")
        ext = int(id_tok.text)
        if ext in entries:
            raise DuplicateNode(ext, id_tok.line)
        entries[ext] = (prio, owner, succ, name, id_tok.line)

    ext_ids = sorted(entries)
    dense = {e: i for i, e in enumerate(ext_ids)}
    specs = []
    names = {}
    for i, e in enumerate(ext_ids):
        prio, owner, succ, name, line = entries[e]
        for s in succ:
            if s not in dense:
                raise DanglingEdge(e, s, line)
        specs.append((Owner(owner), prio, [dense[s] for s in succ]))
        if name is not None:
            names[i] = name

    notes: list[str] = []
    specs, _ = normalize_self_loops(specs, notes)
    next_ext = (ext_ids[-1] + 1) if ext_ids else 0
    original = list(ext_ids)
    for k in range(len(ext_ids), len(specs)):
        original.append(next_ext)
        next_ext += 1
    return NamedGame(
        build_game(specs),
        tuple(original),
        names,
        frozenset(range(len(ext_ids), len(specs))),
        notes,
    )


def emit_pgsolver(ng: NamedGame | Game) -> str:
    """Canonical PGSolver text: header, nodes by external id, sorted successors, LF endings."""
    if isinstance(ng, Game):
        ng = NamedGame.plain(ng)
    game, ids = ng.game, ng.original_ids
    lines = [f"parity {max(ids, default=0)};"]
    for v in sorted(game.nodes, key=lambda v: ids[v]):
        succ = ",".join(str(s) for s in sorted(ids[u] for u in game.successors[v]))
        line = f"{ids[v]} {game.priorities[v]} {int(game.owners[v])} {succ}"
        if v in ng.names:
            line += " " + _quote(ng.names[v])
        lines.append(line + ";")
    return "\n".join(lines) + "\n"


def emit_report(results: Mapping[str, Any] | list[Mapping[str, Any]]) -> str:
    """JSON text with sorted keys; a list of bench entries is ordered by input then algorithm."""
    if isinstance(results, list):
        results = sorted(results, key=lambda r: (str(r.get("input", "")), str(r.get("algorithm", ""))))
    return json.dumps(results, indent=2, sort_keys=True) + "\n"


def load_regions(text: str) -> tuple[list[int], list[int]]:
    """Read win_even / win_odd (external ids) from a report document."""
    doc = json.loads(text)
    if isinstance(doc, list):
        if len(doc) != 1:
            raise ValueError("regions file must describe a single game")
        doc = doc[0]
    return [int(v) for v in doc["win_even"]], [int(v) for v in doc["win_odd"]]
