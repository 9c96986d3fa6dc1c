"""
Tests for the .fm lexer, parser and canonical printer
"""

import pytest

from dsl.lexer import ParseError, TokenKind, tokenize
from dsl.parser import parse, parse_file
from dsl.printer import print_canonical, quote_value, render_decomposition
from featuremodel.errors import ModelParseError
from featuremodel.model import (
    Attribute,
    Constraint,
    ConstraintKind,
    Decomposition,
    DecompositionKind,
    Feature,
    FeatureModel,
)
from model_factory import fm_source


def single_feature(text: str) -> Feature:
    return parse(fm_source(text)).features[0]


class TestLexer:
    """Test tokenization"""

    def test_feature_header(self):
        """Test keywords, identifiers and punctuation"""
        tokens = tokenize("feature St-Queue;")
        assert [t.kind for t in tokens] == [TokenKind.KEYWORD, TokenKind.IDENT, TokenKind.SEMI]
        assert tokens[1].value == "St-Queue"
        assert tokens[1].span.column == 9

    def test_empty_input(self):
        """Test that empty text has no tokens"""
        assert tokenize("") == []

    def test_identifier_cannot_start_with_digit(self):
        """Test the error position of a digit-led name"""
        with pytest.raises(ParseError) as exc_info:
            tokenize("feature 9x;")
        assert exc_info.value.span.line == 1
        assert exc_info.value.span.column == 9

    def test_keywords_case_insensitive(self):
        """Test that keywords are lowercased while identifiers are kept"""
        tokens = tokenize("End FM Queue")
        assert [t.value for t in tokens] == ["end", "fm", "Queue"]
        assert tokens[0].text == "End"
        assert tokens[2].kind is TokenKind.IDENT

    def test_comments_skipped(self):
        """Test that line comments vanish"""
        tokens = tokenize("// heading\nfeature A; // trailing\n")
        assert [t.text for t in tokens] == ["feature", "A", ";"]
        assert tokens[0].span.line == 2

    def test_string_escapes(self):
        """Test quoted strings with escapes"""
        (token,) = tokenize(r'"say \"hi\"\n"')
        assert token.kind is TokenKind.STRING
        assert token.value == 'say "hi"\n'

    def test_unterminated_string(self):
        """Test that a string must close on its line"""
        with pytest.raises(ParseError) as exc_info:
            tokenize('"open\nfeature')
        assert "unterminated string" in str(exc_info.value)

    def test_crlf(self):
        """Test that CRLF line endings count lines correctly"""
        tokens = tokenize("feature\r\nA;")
        assert tokens[1].span.line == 2
        assert tokens[1].span.column == 1


class TestParser:
    """Test the recursive-descent parser"""

    def test_smallest_model(self):
        """Test a model with no features"""
        model = parse("feature model M; end fm M;")
        assert model == FeatureModel("M")

    def test_corpus(self, corpus):
        """Test the List product line"""
        assert corpus.name == "List"
        assert len(corpus) == 10
        queue = corpus.feature("static_queue")
        assert queue.constraints == (Constraint(ConstraintKind.EXCLUDE, "static-stack"),)
        assert queue.included_in == ("St-Queue",)
        assert queue.attribute("variation").values == ("str", "st-beh", "st-methods")

    def test_select_clause(self, corpus):
        """Test select with variation bindings"""
        (select,) = corpus.feature("St-Queue").decompositions
        assert select == Decomposition.select("List", ["static-list", "static_queue"])

    def test_footer_name_mismatch(self):
        """Test that the closing name must match the header"""
        with pytest.raises(ModelParseError) as exc_info:
            parse("feature model M; end fm N;")
        assert "end name N does not match M" in str(exc_info.value)

    def test_keywords_any_case(self):
        """Test upper-case keywords"""
        model = parse("FEATURE MODEL M;\nFeature A;\nEnd Feature;\nEND FM M;")
        assert model.names == ("A",)

    def test_crlf_source(self):
        """Test that CRLF files parse like LF files"""
        text = fm_source("feature A;\n  attributes kind: x;\nend feature;")
        assert parse(text.replace("\n", "\r\n")) == parse(text)

    def test_infix_decomposition(self):
        """Test `a and b and c` normalization"""
        feature = single_feature(
            "feature A; relations decomposition B and C and D; end feature;"
        )
        assert feature.decompositions == (
            Decomposition.group(DecompositionKind.AND, ["B", "C", "D"]),
        )

    def test_owner_infix_decomposition(self):
        """Test `owner and (a and b)` normalization"""
        feature = single_feature(
            "feature static_queue; relations "
            "decomposition static_queue and (str and st-beh and st-methods); end feature;"
        )
        assert feature.decompositions == (
            Decomposition.group(DecompositionKind.AND, ["str", "st-beh", "st-methods"]),
        )

    def test_prefix_with_operator_separator(self):
        """Test `xor(a xor b)` inside parentheses"""
        feature = single_feature("feature A; relations decomposition xor(B xor C); end feature;")
        assert feature.group == Decomposition.group(DecompositionKind.XOR, ["B", "C"])

    def test_single_child_group(self):
        """Test that a group may hold a single child"""
        feature = single_feature("feature A; relations decomposition or(B); end feature;")
        assert feature.group.children == ("B",)

    def test_mixed_operators(self):
        """Test that `a and b or c` is rejected"""
        with pytest.raises(ModelParseError) as exc_info:
            parse(fm_source("feature A; relations decomposition B and C or D; end feature;"))
        assert "mixed operators" in str(exc_info.value)

    def test_constraint_forms(self):
        """Test call and prose constraint forms"""
        feature = single_feature(
            "feature Q; relations constraints exclude(S); "
            "constraints Q imply T; constraints reject U; end feature;"
        )
        assert feature.constraints == (
            Constraint(ConstraintKind.EXCLUDE, "S"),
            Constraint(ConstraintKind.IMPLY, "T"),
            Constraint(ConstraintKind.REJECT, "U"),
        )

    def test_default_and_included_in(self):
        """Test default targets and container lists"""
        feature = single_feature(
            "feature A; relations decomposition default B; included in C, D; end feature;"
        )
        assert feature.decompositions == (Decomposition.default("B"),)
        assert feature.included_in == ("C", "D")

    def test_attribute_lists(self):
        """Test several attributes with several values"""
        feature = single_feature(
            'feature A; attributes kind: structure, variation: a, b, note: "two words"; '
            "end feature;"
        )
        assert feature.attributes == (
            Attribute("kind", ("structure",)),
            Attribute("variation", ("a", "b")),
            Attribute("note", ("two words",)),
        )

    def test_feature_span(self, corpus):
        """Test that features remember where they were declared"""
        span = corpus.feature("List").span
        assert (span.line, span.column) == (6, 9)

    def test_reports_every_error(self):
        """Test recovery at `;` boundaries"""
        text = fm_source(
            "feature A; relations decomposition and(; end feature;",
            "feature B; relations constraints imply(); end feature;",
        )
        with pytest.raises(ModelParseError) as exc_info:
            parse(text)
        errors = exc_info.value.errors
        assert len(errors) >= 2
        assert [e.span.line for e in errors] == sorted(e.span.line for e in errors)
        assert exc_info.value.code == "PARSE_ERROR"

    def test_error_message_names_expectation(self):
        """Test the expected/found wording"""
        with pytest.raises(ModelParseError) as exc_info:
            parse("feature model M feature")
        error = exc_info.value.errors[0]
        assert error.expected == [";"]
        assert error.format("m.fm").startswith("m.fm:1:17: error: expected ;")

    def test_lexer_errors_are_collected(self):
        """Test that bad characters surface as parse errors"""
        with pytest.raises(ModelParseError) as exc_info:
            parse("feature model M; # end fm M;")
        assert "unexpected character '#'" in str(exc_info.value)

    def test_parse_file(self, corpus_path, corpus):
        """Test reading a model from disk"""
        assert parse_file(corpus_path) == corpus

    def test_parse_file_missing(self, tmp_path):
        """Test a missing model file"""
        with pytest.raises(FileNotFoundError):
            parse_file(tmp_path / "missing.fm")


class TestPrinter:
    """Test the canonical printer"""

    def test_empty_model(self):
        """Test the two-line canonical form"""
        assert print_canonical(FeatureModel("M")) == "feature model M;\nend fm M;\n"

    def test_feature_layout(self, corpus):
        """Test indentation and clause order"""
        text = print_canonical(corpus.restrict({"static_queue", "str", "St-Queue", "static-stack"}))
        assert (
            "feature static_queue;\n"
            "  attributes variation: str, st-beh, st-methods;\n"
            "  relations\n"
            "    decomposition and(str);\n"
            "    constraints exclude(static-stack);\n"
            "    included in St-Queue;\n"
            "end feature;\n"
        ) in text

    def test_round_trip_corpus(self, corpus):
        """Test that parsing printed text gives the same model"""
        assert parse(print_canonical(corpus)) == corpus

    def test_idempotent(self, corpus):
        """Test that printing is a fixed point"""
        once = print_canonical(corpus)
        assert print_canonical(parse(once)) == once

    def test_quote_value(self):
        """Test which attribute values need quotes"""
        assert quote_value("static") == "static"
        assert quote_value("two words") == '"two words"'
        assert quote_value("and") == '"and"'
        assert quote_value('say "hi"') == '"say \\"hi\\""'

    def test_quoted_values_round_trip(self):
        """Test awkward attribute values"""
        values = ("two words", "and", "42", "tab\there", "back\\slash", "été")
        model = FeatureModel("M", (Feature("A", attributes=(Attribute("note", values),)),))
        assert parse(print_canonical(model)) == model

    def test_render_decomposition(self):
        """Test prefix rendering of every clause kind"""
        assert render_decomposition(Decomposition.group(DecompositionKind.OR, "ab")) == "or(a, b)"
        assert (
            render_decomposition(Decomposition.select("List", ["x", "y"]))
            == "select List (variation = x, variation = y)"
        )
        assert render_decomposition(Decomposition.default("T")) == "default T"
