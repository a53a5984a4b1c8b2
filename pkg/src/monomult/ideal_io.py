"""Parsing and printing of monomial-ideal descriptions.

Grammar of the text form::

    ideal      := generator (',' generator)*
    generator  := '1' | factor ('*'? factor)*
    factor     := variable ('^' integer)?

Variables are either declared explicitly or inferred: indexed names
``x1 .. xd`` or the letters ``x, y, z, w`` (taken in that order, up to the
last one used).  Exponent vectors such as ``(2,1), (1,2)`` are accepted as
well.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ParseError

LETTERS = ("x", "y", "z", "w")
_INDEXED = re.compile(r"x(\d+)")
_INT = re.compile(r"-?\d+")
_VECTOR = re.compile(r"[(\[]([^()\[\]]*)[)\]]")


@dataclass(frozen=True)
class IdealSpec:
    variables: tuple
    generators: tuple
    cone: Optional[tuple] = None

    @property
    def dim(self) -> int:
        return len(self.variables)

    def to_dict(self) -> dict:
        out = {"vars": list(self.variables), "gens": [list(g) for g in self.generators]}
        if self.cone is not None:
            out["cone"] = [list(r) for r in self.cone]
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "IdealSpec":
        if "ideal" in data and isinstance(data["ideal"], dict):
            data = data["ideal"]
        try:
            gens = tuple(tuple(int(x) for x in g) for g in data["gens"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"JSON ideal needs an integer 'gens' list: {exc}") from None
        if not gens:
            raise ParseError("empty generator list", 0)
        d = len(gens[0])
        if any(len(g) != d for g in gens):
            raise ParseError("generators of mixed length")
        variables = tuple(data.get("vars") or default_variables(d))
        if len(variables) != d:
            raise ParseError("number of variables does not match generator length")
        cone = data.get("cone")
        if cone is not None:
            cone = tuple(tuple(int(x) for x in r) for r in cone)
        return cls(variables, gens, cone)


def default_variables(d: int) -> tuple:
    if d <= len(LETTERS):
        return LETTERS[:d]
    return tuple(f"x{i}" for i in range(1, d + 1))


class _Lexer:
    def __init__(self, text: str, variables: Optional[Sequence[str]]):
        self.text = text
        self.pos = 0
        self.declared = sorted(variables, key=len, reverse=True) if variables else None

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t\r":
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def variable(self):
        """Return ``(name, start)`` or None if no variable starts here."""
        self.skip()
        start = self.pos
        if self.declared is not None:
            for name in self.declared:
                if self.text.startswith(name, start):
                    self.pos += len(name)
                    return name, start
            return None
        m = _INDEXED.match(self.text, start)
        if m:
            self.pos = m.end()
            return m.group(0), start
        if start < len(self.text) and self.text[start] in LETTERS:
            self.pos += 1
            return self.text[start], start
        return None

    def exponent(self) -> int:
        self.skip()
        start = self.pos
        m = _INT.match(self.text, start)
        if not m:
            raise ParseError("expected an integer exponent", start)
        value = int(m.group(0))
        if value < 0:
            raise ParseError("negative exponent", start)
        self.pos = m.end()
        return value


def _parse_products(text: str, variables):
    lex = _Lexer(text, variables)
    gens = []  # list of dict name -> exponent
    used = {}
    while True:
        term: dict = {}
        if lex.peek() == "":
            raise ParseError("empty generator", lex.pos)
        if lex.peek() == "1" and not lex.text[lex.pos + 1:lex.pos + 2].isdigit():
            lex.pos += 1
        else:
            first = True
            while True:
                if not first and lex.peek() == "*":
                    lex.pos += 1
                got = lex.variable()
                if got is None:
                    if first or lex.peek() not in ("", ",", "\n"):
                        ch = lex.peek()
                        raise ParseError(f"unknown symbol {ch!r}" if ch else "unexpected end of input", lex.pos)
                    break
                name, start = got
                used.setdefault(name, start)
                exp = 1
                if lex.peek() == "^":
                    lex.pos += 1
                    exp = lex.exponent()
                term[name] = term.get(name, 0) + exp
                first = False
        gens.append(term)
        ch = lex.peek()
        if ch == "":
            break
        if ch in ",\n":
            lex.pos += 1
            while lex.peek() == "\n":
                lex.pos += 1
            if lex.peek() == "":
                break
            continue
        raise ParseError(f"unknown symbol {ch!r}", lex.pos)
    return gens, used


def _infer_variables(used: dict) -> tuple:
    if not used:
        return ("x",)
    indexed = {n for n in used if _INDEXED.fullmatch(n)}
    letters = set(used) - indexed
    if indexed and letters:
        name = min(letters, key=used.get)
        raise ParseError(f"cannot mix indexed and letter variables ({name!r})", used[name])
    if indexed:
        top = max(int(n[1:]) for n in indexed)
        if any(int(n[1:]) == 0 for n in indexed):
            raise ParseError("variable indices start at 1", used["x0"])
        return tuple(f"x{i}" for i in range(1, top + 1))
    top = max(LETTERS.index(n) for n in letters)
    return LETTERS[: top + 1]


def parse_ideal(text: str, variables: Optional[Sequence[str]] = None) -> IdealSpec:
    """Parse an ideal given as monomials, exponent vectors, or JSON."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty generator list", 0)
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
        return IdealSpec.from_dict(data)
    if stripped[0] in "([":
        return _parse_vectors(stripped, variables)

    gens, used = _parse_products(stripped, variables)
    names = tuple(variables) if variables else _infer_variables(used)
    vectors = tuple(tuple(term.get(n, 0) for n in names) for term in gens)
    return IdealSpec(names, vectors)


def _parse_vectors(text: str, variables) -> IdealSpec:
    if text.startswith("[["):
        try:
            rows = json.loads(text)
            gens = tuple(tuple(int(x) for x in r) for r in rows)
        except (json.JSONDecodeError, TypeError, ValueError) as exc:
            raise ParseError(f"invalid exponent vector list: {exc}", 0) from None
    else:
        gens = []
        pos = 0
        for m in _VECTOR.finditer(text):
            gap = text[pos:m.start()].strip().strip(",").strip()
            if gap:
                raise ParseError(f"unexpected {gap!r}", pos)
            try:
                gens.append(tuple(int(x) for x in m.group(1).split(",")))
            except ValueError:
                raise ParseError("exponent vectors hold integers", m.start()) from None
            pos = m.end()
        if text[pos:].strip():
            raise ParseError(f"unexpected {text[pos:].strip()!r}", pos)
        gens = tuple(gens)
    if not gens:
        raise ParseError("empty generator list", 0)
    d = len(gens[0])
    if any(len(g) != d for g in gens):
        raise ParseError("exponent vectors of mixed length")
    names = tuple(variables) if variables else default_variables(d)
    if len(names) != d:
        raise ParseError("number of variables does not match vector length")
    return IdealSpec(names, gens)


def format_monomial(exps: Sequence[int], variables: Sequence[str]) -> str:
    parts = []
    for name, e in zip(variables, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def format_ideal(spec: IdealSpec) -> str:
    return ", ".join(format_monomial(g, spec.variables) for g in spec.generators)


def parse_rays(text: str) -> tuple:
    """Ray matrix as ``"1,0;1,2"`` or a JSON list of lists."""
    text = text.strip()
    try:
        if text.startswith("["):
            rows = json.loads(text)
        else:
            rows = [[int(x) for x in r.split(",")] for r in text.split(";") if r.strip()]
        return tuple(tuple(int(x) for x in r) for r in rows)
    except (ValueError, TypeError, json.JSONDecodeError):
        raise ParseError(f"cannot read ray matrix {text!r}", 0) from None


def parse_edges(text: str) -> list:
    """Edges like ``"1-2,2-3,3-1"``."""
    edges = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        m = re.fullmatch(r"(\d+)\s*-\s*(\d+)", chunk)
        if not m:
            raise ParseError(f"bad edge {chunk!r}", text.find(chunk))
        edges.append((int(m.group(1)), int(m.group(2))))
    if not edges:
        raise ParseError("no edges given", 0)
    return edges
