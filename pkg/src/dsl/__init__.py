"""
The `.fm` feature model language: lexer, parser and canonical printer
"""

from .lexer import Lexer, ParseError, Token, TokenKind, tokenize
from .parser import Parser, parse, parse_file
from .printer import print_canonical, render_constraint, render_decomposition

__all__ = [
    "Lexer",
    "ParseError",
    "Token",
    "TokenKind",
    "tokenize",
    "Parser",
    "parse",
    "parse_file",
    "print_canonical",
    "render_constraint",
    "render_decomposition",
]
