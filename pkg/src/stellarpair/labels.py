"""Interned vertex labels.

Original vertices are opaque strings.  Vertices created by subdivision
rounds are barycenter labels "b{l1,l2,...}@r": the sorted labels of the
subdivided face plus a round counter, so repeated subdivisions can never
collide.  Labels are interned process-wide, which makes equality an
identity check and gives every label a stable total order (by token).
"""

from __future__ import annotations

import threading
from typing import Iterable

from .errors import MalformedInputError

ORIGINAL = "original"
BARYCENTER = "barycenter"

_INTERN: dict[str, "VertexLabel"] = {}
_INTERN_LOCK = threading.Lock()


def _parse_barycenter(token: str) -> tuple[tuple[str, ...], int] | None:
    """Return (constituents, round) if token is a canonical barycenter label."""
    if not token.startswith("b{"):
        return None
    at = token.rfind("}@")
    if at < 2:
        return None
    round_part = token[at + 2 :]
    if not round_part.isdigit():
        return None
    inner = token[2:at]
    parts: list[str] = []
    depth = 0
    cur: list[str] = []
    for ch in inner:
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
            continue
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth < 0:
                return None
        cur.append(ch)
    if depth != 0:
        return None
    parts.append("".join(cur))
    if any(p == "" for p in parts):
        return None
    rnd = int(round_part)
    # Only the canonical spelling counts; anything else stays an opaque token.
    if _barycenter_token(parts, rnd) != token:
        return None
    return tuple(parts), rnd


def _barycenter_token(constituents: Iterable[str], rnd: int) -> str:
    return "b{" + ",".join(sorted(constituents)) + "}@" + str(rnd)


class VertexLabel:
    """An interned vertex label. Use :func:`vlabel` or :meth:`barycenter` to obtain one."""

    __slots__ = ("token", "kind", "face", "round", "_hash")

    token: str
    kind: str
    face: tuple[str, ...] | None
    round: int | None

    def __init__(self, token: str, kind: str, face, rnd):
        self.token = token
        self.kind = kind
        self.face = face
        self.round = rnd
        self._hash = hash(token)

    @classmethod
    def of(cls, token) -> "VertexLabel":
        if isinstance(token, VertexLabel):
            return token
        if isinstance(token, int):
            token = str(token)
        if not isinstance(token, str) or token == "":
            raise MalformedInputError(f"vertex label must be a nonempty string, got {token!r}")
        lbl = _INTERN.get(token)
        if lbl is not None:
            return lbl
        with _INTERN_LOCK:
            lbl = _INTERN.get(token)
            if lbl is None:
                parsed = _parse_barycenter(token)
                if parsed is None:
                    lbl = cls(token, ORIGINAL, None, None)
                else:
                    lbl = cls(token, BARYCENTER, parsed[0], parsed[1])
                _INTERN[token] = lbl
        return lbl

    @classmethod
    def barycenter(cls, constituents: Iterable[str], rnd: int) -> "VertexLabel":
        if rnd < 0:
            raise MalformedInputError("subdivision round must be nonnegative")
        return cls.of(_barycenter_token(constituents, rnd))

    def __eq__(self, other):
        if self is other:
            return True
        if isinstance(other, VertexLabel):
            return self.token == other.token
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "VertexLabel"):
        return self.token < other.token

    def __le__(self, other: "VertexLabel"):
        return self.token <= other.token

    def __gt__(self, other: "VertexLabel"):
        return self.token > other.token

    def __ge__(self, other: "VertexLabel"):
        return self.token >= other.token

    def __str__(self):
        return self.token

    def __repr__(self):
        return f"VertexLabel({self.token!r})"


def vlabel(token) -> VertexLabel:
    """Intern `token` (str, int, or an existing label) as a vertex label."""
    return VertexLabel.of(token)


def next_round(labels: Iterable[VertexLabel]) -> int:
    """Smallest round number fresh for every barycenter label among `labels`."""
    best = -1
    for lbl in labels:
        if lbl.kind == BARYCENTER and lbl.round > best:
            best = lbl.round
    return best + 1
