"""
Lexer for the `.fm` feature model language
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence

from featuremodel.model import RESERVED_WORDS, SourceSpan


class TokenKind(Enum):
    """Token categories"""

    KEYWORD = "keyword"
    IDENT = "identifier"
    STRING = "string"
    SEMI = ";"
    COMMA = ","
    COLON = ":"
    LPAREN = "("
    RPAREN = ")"
    EQUALS = "="
    EOF = "end of input"


KEYWORDS = RESERVED_WORDS

PUNCTUATION = {
    ";": TokenKind.SEMI,
    ",": TokenKind.COMMA,
    ":": TokenKind.COLON,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
    "=": TokenKind.EQUALS,
}

_ESCAPES = {'"': '"', "\\": "\\", "n": "\n", "t": "\t"}


@dataclass(frozen=True)
class Token:
    """A lexeme with its kind and location; `value` is the lowercased keyword or the text"""

    kind: TokenKind
    value: str
    text: str
    span: SourceSpan

    def describe(self) -> str:
        if self.kind is TokenKind.EOF:
            return "end of input"
        if self.kind is TokenKind.KEYWORD:
            return f"keyword '{self.value}'"
        if self.kind is TokenKind.IDENT:
            return f"identifier '{self.text}'"
        if self.kind is TokenKind.STRING:
            return f"string {self.text}"
        return f"'{self.text}'"

    def is_keyword(self, *words: str) -> bool:
        return self.kind is TokenKind.KEYWORD and self.value in words


class ParseError(Exception):
    """A syntax error at a known location"""

    def __init__(self, span: SourceSpan, expected: Sequence[str], found: str, message: str = ""):
        self.span = span
        self.expected: List[str] = list(expected) or ["valid input"]
        self.found = found
        self.message = message or f"expected {_join(self.expected)}, found {found}"
        super().__init__(f"{span.line}:{span.column}: {self.message}")

    def format(self, source: str = "<input>") -> str:
        return f"{source}:{self.span.line}:{self.span.column}: error: {self.message}"


def _join(items: Sequence[str]) -> str:
    if len(items) == 1:
        return items[0]
    return ", ".join(items[:-1]) + " or " + items[-1]


def _is_ident_char(char: str) -> bool:
    return char.isascii() and (char.isalnum() or char in "-_")


class Lexer:
    """Single-pass scanner that records errors and keeps going"""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.column = 1
        self.errors: List[ParseError] = []

    def _advance(self, count: int = 1):
        for _ in range(count):
            if self.text[self.pos] == "\n":
                self.line += 1
                self.column = 1
            else:
                self.column += 1
            self.pos += 1

    def _peek(self, offset: int = 0) -> Optional[str]:
        index = self.pos + offset
        return self.text[index] if index < len(self.text) else None

    def tokens(self) -> List[Token]:
        result: List[Token] = []
        while True:
            token = self._next()
            if token is None:
                continue
            result.append(token)
            if token.kind is TokenKind.EOF:
                return result

    def _next(self) -> Optional[Token]:
        self._skip_trivia()
        line, column, start = self.line, self.column, self.pos
        char = self._peek()

        if char is None:
            return Token(TokenKind.EOF, "", "", SourceSpan(line, column, 0))

        if char in PUNCTUATION:
            self._advance()
            return Token(PUNCTUATION[char], char, char, SourceSpan(line, column, 1))

        if char.isascii() and char.isalpha():
            while self._peek() is not None and _is_ident_char(self._peek()):
                self._advance()
            text = self.text[start : self.pos]
            span = SourceSpan(line, column, self.pos - start)
            lowered = text.lower()
            if lowered in KEYWORDS:
                return Token(TokenKind.KEYWORD, lowered, text, span)
            return Token(TokenKind.IDENT, text, text, span)

        if char == '"':
            return self._string(line, column, start)

        self._advance()
        self.errors.append(
            ParseError(
                SourceSpan(line, column, 1),
                ["identifier", "keyword", "string", "punctuation"],
                f"character {char!r}",
                f"unexpected character {char!r}",
            )
        )
        return None

    def _string(self, line: int, column: int, start: int) -> Optional[Token]:
        self._advance()
        chars: List[str] = []
        while True:
            char = self._peek()
            if char is None or char == "\n":
                self.errors.append(
                    ParseError(
                        SourceSpan(line, column, self.pos - start),
                        ['closing \'"\''],
                        "end of line" if char else "end of input",
                        "unterminated string",
                    )
                )
                return None
            self._advance()
            if char == '"':
                break
            if char == "\\":
                escaped = self._peek()
                if escaped in _ESCAPES:
                    self._advance()
                    chars.append(_ESCAPES[escaped])
                    continue
            chars.append(char)
        text = self.text[start : self.pos]
        return Token(TokenKind.STRING, "".join(chars), text, SourceSpan(line, column, len(text)))

    def _skip_trivia(self):
        while True:
            char = self._peek()
            if char is None:
                return
            if char in " \t\r\n\f\v":
                self._advance()
            elif char == "/" and self._peek(1) == "/":
                while self._peek() is not None and self._peek() != "\n":
                    self._advance()
            else:
                return


def tokenize(text: str) -> List[Token]:
    """Tokens of `text` without the trailing EOF; raises the first ParseError"""
    lexer = Lexer(text)
    tokens = lexer.tokens()
    if lexer.errors:
        raise lexer.errors[0]
    return tokens[:-1]
