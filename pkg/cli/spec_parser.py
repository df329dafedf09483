"""
Group spec strings

    spec := kind (":" args)?
    z:d | cyclic:N | free:k | lamplighter:m | heisenberg | bs:p,q
    grigorchuk:prefix(period)* | matrix:path

Syntax errors carry the character position; out-of-range values raise
SpecValueError.
"""
import re

from shared.errors import SpecParseError, SpecValueError
from shared.schemas import GroupSpec

_INTEGER = re.compile(r"[+-]?\d+")
_OMEGA = re.compile(r"([012]*)\(([012]+)\)\*")

KINDS = ("z", "cyclic", "free", "lamplighter", "heisenberg", "bs", "grigorchuk", "matrix")


def _integer(text: str, position: int, what: str) -> int:
    if not _INTEGER.fullmatch(text):
        raise SpecParseError(f"expected an integer {what}, got '{text}'", position)
    return int(text)


def _omega_error_position(text: str) -> int:
    """First character where text stops matching prefix(period)*."""
    i = 0
    while i < len(text) and text[i] in "012":
        i += 1
    if i == len(text) or text[i] != "(":
        return i
    i += 1
    start = i
    while i < len(text) and text[i] in "012":
        i += 1
    if i == start or i == len(text) or text[i] != ")":
        return i
    return i + 1


def parse_spec(text: str) -> GroupSpec:
    raw = text
    text = text.strip()
    offset = len(raw) - len(raw.lstrip())
    if not text:
        raise SpecParseError("empty group spec", offset)

    kind, sep, args = text.partition(":")
    at = offset + len(kind) + 1  # position of the first argument character

    if kind not in KINDS:
        raise SpecParseError(f"unknown group kind '{kind}' (expected one of {', '.join(KINDS)})", offset)

    if kind == "heisenberg":
        if sep:
            raise SpecParseError("heisenberg takes no arguments", offset + len(kind))
        return GroupSpec(kind="heisenberg")

    if not sep or not args:
        raise SpecParseError(f"{kind} needs an argument", offset + len(kind))

    if kind == "z":
        d = _integer(args, at, "dimension")
        if d < 1:
            raise SpecValueError(f"z:d needs d >= 1, got {d}")
        return GroupSpec(kind="zn", dimension=d)

    if kind == "cyclic":
        n = _integer(args, at, "order")
        if n < 1:
            raise SpecValueError(f"cyclic:N needs N >= 1, got {n}")
        return GroupSpec(kind="cyclic", order=n)

    if kind == "free":
        k = _integer(args, at, "rank")
        if k < 1:
            raise SpecValueError(f"free:k needs k >= 1, got {k}")
        return GroupSpec(kind="free", rank=k)

    if kind == "lamplighter":
        m = _integer(args, at, "modulus")
        if m < 2:
            raise SpecValueError(f"lamplighter:m needs m >= 2, got {m}")
        return GroupSpec(kind="lamplighter", modulus=m)

    if kind == "bs":
        p_text, comma, q_text = args.partition(",")
        if not comma:
            raise SpecParseError("bs needs two integers p,q", at + len(args))
        p = _integer(p_text, at, "p")
        q = _integer(q_text, at + len(p_text) + 1, "q")
        if p != 1 or abs(q) < 2:
            raise SpecValueError(f"only bs:1,q with |q| >= 2 is realized, got bs:{p},{q}")
        return GroupSpec(kind="bs", bs_p=p, bs_q=q)

    if kind == "grigorchuk":
        match = _OMEGA.fullmatch(args)
        if not match:
            raise SpecParseError("expected prefix(period)* over {0,1,2}", at + _omega_error_position(args))
        return GroupSpec(kind="grigorchuk", prefix=match.group(1), period=match.group(2))

    return GroupSpec(kind="matrix", path=args)


def render_spec(spec: GroupSpec) -> str:
    return spec.render()
