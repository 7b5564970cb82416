"""Tests for the `.ra` text format."""

import pytest

from rautomata.core import FormatError, InvalidAutomatonError
from rautomata.engine import Symbol
from rautomata.infrastructure import format_ra, parse_ra

MINIMAL = """\
name: tiny
background: a b f
input: a
initial: b
final: f
r1: a b | - | f
"""


def without_comments(text):
    return "".join(line for line in text.splitlines(keepends=True) if not line.startswith("#"))


class TestParseRa:
    """Parsing definitions."""

    def test_minimal(self):
        automaton = parse_ra(MINIMAL)
        assert automaton.name == "tiny"
        assert automaton.input_alphabet == frozenset({Symbol("a")})
        assert automaton.final == Symbol("f")
        (r,) = automaton.reactions
        assert r.label == "r1"
        assert str(r) == "r1: a b | - | f"

    def test_comments_and_blank_lines(self):
        text = "# header\n\n" + MINIMAL.replace("r1: a b | - | f", "r1: a b | - | f  # fires once")
        assert parse_ra(text).reactions == parse_ra(MINIMAL).reactions

    def test_counts_and_hats(self):
        text = MINIMAL.replace("background: a b f", "background: a a^ b f").replace(
            "r1: a b | - | f", "r1: a^2 b | a^ | f^3"
        )
        automaton = parse_ra(text, validate=False)
        r = automaton.reactions[0]
        assert r.reactant[Symbol("a")] == 2
        assert r.inhibitor == frozenset({Symbol("a", True)})
        assert r.product[Symbol("f")] == 3

    @pytest.mark.parametrize(
        "line, column",
        [
            ("r1: a^^ | - | f", 5),
            ("r1: a b | - ", 4),
            ("r1: a b | - | f^0", 15),
        ],
    )
    def test_errors_carry_line_and_column(self, line, column):
        with pytest.raises(FormatError) as exc_info:
            parse_ra(MINIMAL.replace("r1: a b | - | f", line))
        assert exc_info.value.line == 6
        assert exc_info.value.column == column

    def test_missing_header(self):
        with pytest.raises(FormatError, match="missing 'final:'"):
            parse_ra(MINIMAL.replace("final: f\n", ""))

    def test_duplicate_header(self):
        with pytest.raises(FormatError, match="duplicate 'input:'"):
            parse_ra(MINIMAL + "input: b\n")

    def test_unknown_declaration(self):
        with pytest.raises(FormatError) as exc_info:
            parse_ra(MINIMAL + "colour: red\n")
        assert exc_info.value.line == 7

    def test_line_without_colon(self):
        with pytest.raises(FormatError, match="expected 'key: value'"):
            parse_ra(MINIMAL + "oops\n")

    def test_two_final_symbols(self):
        with pytest.raises(FormatError, match="exactly one final symbol"):
            parse_ra(MINIMAL.replace("final: f", "final: f b"))

    def test_validation_can_be_deferred(self):
        text = MINIMAL.replace("r1: a b | - | f", "r1: a b | b | f")
        with pytest.raises(InvalidAutomatonError):
            parse_ra(text)
        assert parse_ra(text, validate=False).validate()[0].code == "reactant-intersects-inhibitor"


class TestFormatRa:
    """Canonical output."""

    def test_minimal_is_canonical(self):
        assert format_ra(parse_ra(MINIMAL)) == MINIMAL

    @pytest.mark.parametrize(
        "name",
        ["ab_star", "ex1_reactions", "ex2_pow2", "ex3_anbncn", "ex4_ambmcndn", "fig1_anbn", "odd_a"],
    )
    def test_fixtures_are_canonical(self, fixtures_dir, name):
        text = (fixtures_dir / f"{name}.ra").read_text(encoding="utf-8")
        assert format_ra(parse_ra(text)) == without_comments(text)

    def test_empty_parts_use_dash(self, ex1):
        text = format_ra(ex1)
        assert "input: -\n" in text
        assert "initial: -\n" in text
        assert "b: c^2 | - | b\n" in text
