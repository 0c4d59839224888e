"""Text formats.

Group::

    order n
    <n lines of n indices>
    name <label>            (optional)

A homomorphism is one line of indices. A reflexive graph (or cat^1-group) is
a group block followed by ``s: ...`` and ``t: ...``. A crossed module is two
group blocks (``T`` then ``G``), a ``d: ...`` line and ``|G|`` lines giving
the permutation of ``T`` by which each element of ``G`` acts.

Blank lines and ``#`` comments are ignored when reading; writers emit the
canonical form so that ``write(read(text)) == text`` for canonical text.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Union

import numpy as np

from .errors import ParseError
from .groups import Action, FiniteGroup, GroupHom

PathLike = Union[str, Path]


def _lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _ints(line: str, where: str) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"{where}: expected integers, got {line!r}") from None


def _fmt(values: Iterable[int]) -> str:
    return " ".join(str(int(v)) for v in values)


class _Cursor:
    def __init__(self, lines: list[str]):
        self.lines = lines
        self.i = 0

    def peek(self) -> str | None:
        return self.lines[self.i] if self.i < len(self.lines) else None

    def take(self, what: str) -> str:
        line = self.peek()
        if line is None:
            raise ParseError(f"unexpected end of input, expected {what}")
        self.i += 1
        return line


def _parse_group(cur: _Cursor) -> FiniteGroup:
    head = cur.take("'order n'").split()
    if len(head) != 2 or head[0] != "order":
        raise ParseError(f"expected 'order n', got {' '.join(head)!r}")
    n = int(head[1])
    if n < 1:
        raise ParseError("order must be positive")
    rows = []
    for r in range(n):
        row = _ints(cur.take(f"table row {r}"), f"row {r}")
        if len(row) != n:
            raise ParseError(f"row {r} has {len(row)} entries, expected {n}")
        rows.append(row)
    name = None
    nxt = cur.peek()
    if nxt is not None and nxt.startswith("name"):
        name = cur.take("name").split(None, 1)[1] if len(nxt.split()) > 1 else None
    return FiniteGroup(np.array(rows, dtype=np.int64), name)


def _format_group(G: FiniteGroup) -> str:
    out = [f"order {G.order}"]
    out.extend(_fmt(row) for row in G.rows)
    if G.name:
        out.append(f"name {G.name}")
    return "\n".join(out) + "\n"


def _tagged(cur: _Cursor, tag: str, n: int) -> list[int]:
    line = cur.take(f"'{tag}:' line")
    if not line.startswith(tag + ":"):
        raise ParseError(f"expected '{tag}:' line, got {line!r}")
    vals = _ints(line[len(tag) + 1 :], tag)
    if len(vals) != n:
        raise ParseError(f"'{tag}:' has {len(vals)} entries, expected {n}")
    return vals


def _done(cur: _Cursor) -> None:
    if cur.peek() is not None:
        raise ParseError(f"trailing content: {cur.peek()!r}")


def parse_group(text: str) -> FiniteGroup:
    cur = _Cursor(_lines(text))
    G = _parse_group(cur)
    _done(cur)
    return G


def format_group(G: FiniteGroup) -> str:
    return _format_group(G)


def read_group(path: PathLike) -> FiniteGroup:
    return parse_group(Path(path).read_text())


def write_group(G: FiniteGroup, path: PathLike) -> None:
    Path(path).write_text(format_group(G))


def parse_hom(text: str, domain: FiniteGroup, codomain: FiniteGroup) -> GroupHom:
    lines = _lines(text)
    if len(lines) != 1:
        raise ParseError("a homomorphism file holds exactly one line")
    return GroupHom(domain, codomain, _ints(lines[0], "hom"))


def format_hom(h: GroupHom) -> str:
    return _fmt(h.images) + "\n"


def parse_rg(text: str):
    from .rgraph import ReflexiveGraph

    cur = _Cursor(_lines(text))
    G = _parse_group(cur)
    s = GroupHom(G, G, _tagged(cur, "s", G.order))
    t = GroupHom(G, G, _tagged(cur, "t", G.order))
    _done(cur)
    return ReflexiveGraph(G, s, t)


def format_rg(R) -> str:
    return _format_group(R.carrier) + f"s: {_fmt(R.s.images)}\nt: {_fmt(R.t.images)}\n"


def read_rg(path: PathLike):
    return parse_rg(Path(path).read_text())


def write_rg(R, path: PathLike) -> None:
    Path(path).write_text(format_rg(R))


def parse_xmod(text: str):
    from .groupoid import CrossedModule

    cur = _Cursor(_lines(text))
    T = _parse_group(cur)
    G = _parse_group(cur)
    d = GroupHom(T, G, _tagged(cur, "d", T.order))
    perms = []
    for g in range(G.order):
        row = _ints(cur.take(f"action line {g}"), f"action {g}")
        if len(row) != T.order:
            raise ParseError(f"action line {g} has {len(row)} entries, expected {T.order}")
        perms.append(row)
    _done(cur)
    return CrossedModule(T, G, d, Action(G, T, np.array(perms, dtype=np.int64)))


def format_xmod(M) -> str:
    body = _format_group(M.T) + _format_group(M.G) + f"d: {_fmt(M.d.images)}\n"
    return body + "".join(_fmt(row) + "\n" for row in M.act.perms.tolist())


def read_xmod(path: PathLike):
    return parse_xmod(Path(path).read_text())


def write_xmod(M, path: PathLike) -> None:
    Path(path).write_text(format_xmod(M))


def format_action(phi: Action) -> str:
    return "".join(_fmt(row) + "\n" for row in phi.perms.tolist())


def detect_kind(text: str) -> str:
    """``'group'``, ``'rg'`` or ``'xmod'`` from the shape of the file."""
    lines = _lines(text)
    if sum(1 for l in lines if l.split()[0] == "order") >= 2:
        return "xmod"
    if any(l.startswith("s:") for l in lines):
        return "rg"
    return "group"


def parse_any(text: str):
    kind = detect_kind(text)
    return kind, {"group": parse_group, "rg": parse_rg, "xmod": parse_xmod}[kind](text)
