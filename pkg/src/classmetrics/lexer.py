"""Tokenizer for Java source text.

Produces a flat token stream plus the skipped trivia (whitespace and
comments) so that the original file can be reconstructed byte for byte.
Generic angle brackets are emitted as plain operators; disambiguation is
the parser's job.
"""

import re
from dataclasses import dataclass

# Reserved words (JLS set plus assert/enum); true/false/null are reserved
# literals and are classified as keywords here for simplicity.
KEYWORDS = frozenset(
    """
    abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package
    private protected public return short static strictfp super switch
    synchronized this throw throws transient try void volatile while
    true false null
    """.split()
)

PRIMITIVE_TYPES = frozenset(
    ["boolean", "byte", "char", "short", "int", "long", "float", "double"]
)

# Longest match first.
_OPERATORS = sorted(
    [
        ">>>=", "<<=", ">>=", ">>>", "<<", ">>", "==", "!=", "<=", ">=",
        "&&", "||", "++", "--", "+=", "-=", "*=", "/=", "&=", "|=", "^=",
        "%=", "->", "::", "+", "-", "*", "/", "%", "=", "<", ">", "!", "~",
        "&", "|", "^", "?", ":",
    ],
    key=len,
    reverse=True,
)

_PUNCTUATION = "{}()[];,.@"

_RE_IDENT = re.compile(r"[A-Za-z_$][A-Za-z0-9_$]*")
_RE_HEX = re.compile(r"0[xX][0-9a-fA-F]+[lL]?")
_RE_BIN = re.compile(r"0[bB][01]+[lL]?")
_RE_FLOAT = re.compile(
    r"(?:\d+\.\d*|\.\d+)(?:[eE][+-]?\d+)?[fFdD]?"
    r"|\d+[eE][+-]?\d+[fFdD]?"
    r"|\d+[fFdD]"
)
_RE_INT = re.compile(r"\d+[lL]?")
_RE_SPACE = re.compile(r"[ \t\r\n\f]+")


@dataclass(frozen=True)
class Token:
    kind: str  # keyword | identifier | punctuation | operator | *-literal
    text: str
    line: int
    column: int


@dataclass(frozen=True)
class Trivia:
    """Whitespace or comment run, kept only for position bookkeeping."""

    text: str
    line: int
    column: int


class LexError(Exception):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


def tokenize(source: str) -> list[Token]:
    """Tokenize Java source, dropping whitespace and comments."""
    return scan(source)[0]


def scan(source: str) -> tuple[list[Token], list[Trivia]]:
    """Tokenize and also return the trivia runs in source order."""
    tokens: list[Token] = []
    trivia: list[Trivia] = []
    pos = 0
    line = 1
    col = 1
    n = len(source)

    while pos < n:
        ch = source[pos]

        m = _RE_SPACE.match(source, pos)
        if m:
            text = m.group()
            trivia.append(Trivia(text, line, col))
            pos, line, col = _advance(pos, line, col, text)
            continue

        if ch == "/" and pos + 1 < n and source[pos + 1] == "/":
            end = source.find("\n", pos)
            text = source[pos:] if end == -1 else source[pos:end]
            trivia.append(Trivia(text, line, col))
            pos, line, col = _advance(pos, line, col, text)
            continue

        if ch == "/" and pos + 1 < n and source[pos + 1] == "*":
            end = source.find("*/", pos + 2)
            if end == -1:
                raise LexError("unterminated block comment", line, col)
            text = source[pos:end + 2]
            trivia.append(Trivia(text, line, col))
            pos, line, col = _advance(pos, line, col, text)
            continue

        if ch == '"' or ch == "'":
            text = _match_quoted(source, pos, ch, line, col)
            kind = "string-literal" if ch == '"' else "char-literal"
            tokens.append(Token(kind, text, line, col))
            pos, line, col = _advance(pos, line, col, text)
            continue

        if ch.isdigit() or (ch == "." and pos + 1 < n and source[pos + 1].isdigit()):
            for regex, kind in (
                (_RE_HEX, "integer-literal"),
                (_RE_BIN, "integer-literal"),
                (_RE_FLOAT, "float-literal"),
                (_RE_INT, "integer-literal"),
            ):
                m = regex.match(source, pos)
                if m:
                    text = m.group()
                    tokens.append(Token(kind, text, line, col))
                    pos, line, col = _advance(pos, line, col, text)
                    break
            continue

        m = _RE_IDENT.match(source, pos)
        if m:
            text = m.group()
            kind = "keyword" if text in KEYWORDS else "identifier"
            tokens.append(Token(kind, text, line, col))
            pos, line, col = _advance(pos, line, col, text)
            continue

        if ch in _PUNCTUATION:
            tokens.append(Token("punctuation", ch, line, col))
            pos, line, col = _advance(pos, line, col, ch)
            continue

        for op in _OPERATORS:
            if source.startswith(op, pos):
                tokens.append(Token("operator", op, line, col))
                pos, line, col = _advance(pos, line, col, op)
                break
        else:
            # Outside the Java lexical grammar; tolerate as punctuation so
            # the byte round-trip still holds.
            tokens.append(Token("punctuation", ch, line, col))
            pos, line, col = _advance(pos, line, col, ch)

    return tokens, trivia


def reconstruct(tokens: list[Token], trivia: list[Trivia]) -> str:
    """Rebuild the exact source text from a scan() result."""
    pieces = sorted(tokens + trivia, key=lambda t: (t.line, t.column))
    return "".join(p.text for p in pieces)


def _match_quoted(source: str, pos: int, quote: str, line: int, col: int) -> str:
    what = "string" if quote == '"' else "char"
    i = pos + 1
    n = len(source)
    while i < n:
        c = source[i]
        if c == "\\":
            i += 2
            continue
        if c == quote:
            return source[pos:i + 1]
        if c == "\n":
            break
        i += 1
    raise LexError(f"unterminated {what} literal", line, col)


def _advance(pos: int, line: int, col: int, text: str) -> tuple[int, int, int]:
    newlines = text.count("\n")
    if newlines:
        line += newlines
        col = len(text) - text.rfind("\n")
    else:
        col += len(text)
    return pos + len(text), line, col
