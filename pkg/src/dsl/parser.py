"""
Recursive-descent parser for the `.fm` feature model language

Grammar (keywords case-insensitive, identifiers case-sensitive):

    model   := "feature" "model" IDENT ";" feature* "end" "fm" IDENT ";"
    feature := "feature" IDENT ";" ["attributes" attr ("," attr)* ";"]
               ["relations" clause+] "end" "feature" ";"
    attr    := KEY ":" value ("," value)*
    clause  := decomp ";" | constr ";" | incl ";"
    decomp  := "decomposition" ( OP "(" IDENT ("," IDENT)* ")"
                               | "select" IDENT "(" "variation" "=" IDENT
                                     ("," "variation" "=" IDENT)* ")"
                               | "default" IDENT )
    constr  := "constraints" ("imply" | "exclude" | "reject") "(" IDENT ")"
    incl    := "included" "in" IDENT ("," IDENT)*

Infix decompositions (`a and b and c`, `owner and (a and b)`) are accepted and
normalized to the prefix form. The parser resynchronizes at `;` so a single
run reports every syntax error.
"""

from pathlib import Path
from typing import Callable, List, Optional, Tuple, Union

from dsl.lexer import Lexer, ParseError, Token, TokenKind
from featuremodel.errors import ModelParseError
from featuremodel.model import (
    Attribute,
    Constraint,
    ConstraintKind,
    Decomposition,
    DecompositionKind,
    Feature,
    FeatureModel,
    SourceSpan,
)
from utils.logger import get_logger

logger = get_logger(__name__)

GROUP_OPERATORS = ("and", "xor", "or")
CONSTRAINT_KEYWORDS = ("imply", "exclude", "reject")
CLAUSE_KEYWORDS = ("decomposition", "constraints", "included")


class Parser:
    """Parser over a token list produced by the Lexer"""

    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.pos = 0
        self.errors: List[ParseError] = []

    # token helpers

    @property
    def current(self) -> Token:
        return self.tokens[min(self.pos, len(self.tokens) - 1)]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.current
        if token.kind is not TokenKind.EOF:
            self.pos += 1
        return token

    def fail(self, *expected: str) -> ParseError:
        return ParseError(self.current.span, expected, self.current.describe())

    def expect(self, kind: TokenKind) -> Token:
        if self.current.kind is not kind:
            raise self.fail(kind.value)
        return self.advance()

    def expect_keyword(self, *words: str) -> Token:
        if not self.current.is_keyword(*words):
            raise self.fail(*(f"'{w}'" for w in words))
        return self.advance()

    def expect_ident(self) -> Token:
        if self.current.kind is not TokenKind.IDENT:
            raise self.fail("identifier")
        return self.advance()

    def accept(self, kind: TokenKind) -> bool:
        if self.current.kind is kind:
            self.advance()
            return True
        return False

    def synchronize(self):
        """Skip past the next `;` (or to end of input)"""
        while self.current.kind is not TokenKind.EOF:
            if self.advance().kind is TokenKind.SEMI:
                return

    def guarded(self, rule: Callable[[], None]) -> bool:
        try:
            rule()
            return True
        except ParseError as error:
            self.errors.append(error)
            self.synchronize()
            return False

    # grammar rules

    def parse_model(self) -> Optional[FeatureModel]:
        header: List[Token] = []

        def model_header():
            self.expect_keyword("feature")
            self.expect_keyword("model")
            header.append(self.expect_ident())
            self.expect(TokenKind.SEMI)

        self.guarded(model_header)

        features: List[Feature] = []
        while True:
            token = self.current
            if token.is_keyword("feature"):
                feature = self.parse_feature()
                if feature is not None:
                    features.append(feature)
            elif token.is_keyword("end") or token.kind is TokenKind.EOF:
                break
            else:
                self.errors.append(self.fail("'feature'", "'end'"))
                self.synchronize()

        def model_footer():
            self.expect_keyword("end")
            self.expect_keyword("fm")
            closing = self.expect_ident()
            if header and closing.value != header[0].value:
                self.errors.append(
                    ParseError(
                        closing.span,
                        [f"identifier '{header[0].value}'"],
                        closing.describe(),
                        f"end name {closing.value} does not match {header[0].value}",
                    )
                )
            self.expect(TokenKind.SEMI)
            if self.current.kind is not TokenKind.EOF:
                raise self.fail("end of input")

        self.guarded(model_footer)

        if not header:
            return None
        return FeatureModel(name=header[0].value, features=tuple(features))

    def parse_feature(self) -> Optional[Feature]:
        header: List[Token] = []
        attributes: List[Attribute] = []
        decompositions: List[Decomposition] = []
        constraints: List[Constraint] = []
        included_in: List[str] = []

        def feature_header():
            self.expect_keyword("feature")
            header.append(self.expect_ident())
            self.expect(TokenKind.SEMI)

        self.guarded(feature_header)
        owner = header[0].value if header else None

        if self.current.is_keyword("attributes"):
            self.guarded(lambda: self.parse_attributes(attributes))

        if self.current.is_keyword("relations"):
            self.advance()
            if not self.current.is_keyword(*CLAUSE_KEYWORDS):
                self.errors.append(self.fail("'decomposition'", "'constraints'", "'included'"))
            while self.current.is_keyword(*CLAUSE_KEYWORDS):
                self.guarded(
                    lambda: self.parse_clause(owner, decompositions, constraints, included_in)
                )

        def feature_footer():
            self.expect_keyword("end")
            self.expect_keyword("feature")
            self.expect(TokenKind.SEMI)

        self.guarded(feature_footer)

        if not header:
            return None
        return Feature(
            name=header[0].value,
            attributes=tuple(attributes),
            decompositions=tuple(decompositions),
            constraints=tuple(constraints),
            included_in=tuple(included_in),
            span=header[0].span,
        )

    def parse_attributes(self, attributes: List[Attribute]):
        self.expect_keyword("attributes")
        attributes.append(self.parse_attribute())
        while self.accept(TokenKind.COMMA):
            attributes.append(self.parse_attribute())
        self.expect(TokenKind.SEMI)

    def parse_attribute(self) -> Attribute:
        if self.current.kind not in (TokenKind.IDENT, TokenKind.KEYWORD):
            raise self.fail("attribute name")
        key = self.advance().text
        self.expect(TokenKind.COLON)
        values = [self.parse_value()]
        # `,` continues the value list unless a new `key:` follows
        while self.current.kind is TokenKind.COMMA and not self._attribute_starts(1):
            self.advance()
            values.append(self.parse_value())
        return Attribute(key=key, values=tuple(values))

    def _attribute_starts(self, offset: int) -> bool:
        return (
            self.peek(offset).kind in (TokenKind.IDENT, TokenKind.KEYWORD)
            and self.peek(offset + 1).kind is TokenKind.COLON
        )

    def parse_value(self) -> str:
        if self.current.kind in (TokenKind.IDENT, TokenKind.STRING):
            return self.advance().value
        raise self.fail("identifier", "string")

    def parse_clause(
        self,
        owner: Optional[str],
        decompositions: List[Decomposition],
        constraints: List[Constraint],
        included_in: List[str],
    ):
        keyword = self.expect_keyword(*CLAUSE_KEYWORDS)
        if keyword.value == "decomposition":
            decompositions.append(self.parse_decomposition(owner))
        elif keyword.value == "constraints":
            constraints.append(self.parse_constraint(owner))
        else:
            self.expect_keyword("in")
            included_in.append(self.expect_ident().value)
            while self.accept(TokenKind.COMMA):
                included_in.append(self.expect_ident().value)
        self.expect(TokenKind.SEMI)

    def parse_decomposition(self, owner: Optional[str]) -> Decomposition:
        token = self.current
        if token.is_keyword(*GROUP_OPERATORS):
            operator = self.advance().value
            return Decomposition.group(
                DecompositionKind(operator), self.parse_group_list(operator)
            )
        if token.is_keyword("select"):
            self.advance()
            base = self.expect_ident().value
            self.expect(TokenKind.LPAREN)
            variations = [self.parse_variation()]
            while self.accept(TokenKind.COMMA):
                variations.append(self.parse_variation())
            self.expect(TokenKind.RPAREN)
            return Decomposition.select(base, variations)
        if token.is_keyword("default"):
            self.advance()
            return Decomposition.default(self.expect_ident().value)
        if token.kind is TokenKind.IDENT and self.peek().is_keyword(*GROUP_OPERATORS):
            return self.parse_infix(owner)
        raise self.fail("'and'", "'xor'", "'or'", "'select'", "'default'")

    def parse_group_list(self, operator: str) -> List[str]:
        """`( a, b, ... )`, also accepting the operator itself as separator"""
        self.expect(TokenKind.LPAREN)
        children = [self.expect_ident().value]
        while self.accept(TokenKind.COMMA) or self._accept_operator(operator):
            children.append(self.expect_ident().value)
        self.expect(TokenKind.RPAREN)
        return children

    def _accept_operator(self, operator: str) -> bool:
        if self.current.is_keyword(operator):
            self.advance()
            return True
        if self.current.is_keyword(*GROUP_OPERATORS):
            raise ParseError(
                self.current.span,
                [f"'{operator}'"],
                self.current.describe(),
                f"mixed operators '{operator}' and '{self.current.value}' in one decomposition",
            )
        return False

    def parse_infix(self, owner: Optional[str]) -> Decomposition:
        first = self.expect_ident()
        operator = self.current.value
        if first.value == owner and self.peek().kind is TokenKind.LPAREN:
            # owner and (a and b and c)
            self.advance()
            return Decomposition.group(DecompositionKind(operator), self.parse_group_list(operator))

        children = [first.value]
        while self._accept_operator(operator):
            children.append(self.expect_ident().value)
        return Decomposition.group(DecompositionKind(operator), children)

    def parse_variation(self) -> str:
        self.expect_keyword("variation")
        self.expect(TokenKind.EQUALS)
        return self.expect_ident().value

    def parse_constraint(self, owner: Optional[str]) -> Constraint:
        if (
            self.current.kind is TokenKind.IDENT
            and self.current.value == owner
            and self.peek().is_keyword(*CONSTRAINT_KEYWORDS)
        ):
            self.advance()
        kind = ConstraintKind(self.expect_keyword(*CONSTRAINT_KEYWORDS).value)
        if self.accept(TokenKind.LPAREN):
            target = self.expect_ident().value
            self.expect(TokenKind.RPAREN)
        else:
            target = self.expect_ident().value
        return Constraint(kind=kind, target=target)


def _position(error: ParseError) -> Tuple[int, int]:
    return error.span.line, error.span.column


def parse(text: str) -> FeatureModel:
    """Parse `.fm` text into a FeatureModel or raise ModelParseError with every error"""
    lexer = Lexer(text)
    tokens = lexer.tokens()
    parser = Parser(tokens)
    model = parser.parse_model()

    errors = sorted(lexer.errors + parser.errors, key=_position)
    if errors or model is None:
        raise ModelParseError(errors or [parser.fail("'feature'")])

    logger.debug(f"Parsed model {model.name} with {len(model.features)} feature(s)")
    return model


def parse_file(path: Union[str, Path]) -> FeatureModel:
    """Parse a `.fm` file (UTF-8, LF or CRLF)"""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Model file not found: {path}")
    return parse(path.read_text(encoding="utf-8"))
