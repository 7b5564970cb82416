"""Tests for the `.sm` text format."""

import pytest

from rautomata.core import FormatError
from rautomata.engine import Symbol
from rautomata.infrastructure import format_sm, parse_sm

ONE_STACK = """\
name: flip
states: p q
input: a
stack1: X Z
initial: p Z
final: q
r1: p, a, Z -> p, X Z
r2: p, λ, X -> q, λ
"""


class TestParseSm:
    """Parsing machine definitions."""

    def test_one_stack(self):
        machine = parse_sm(ONE_STACK)
        assert machine.k == 1
        assert machine.bottoms == (Symbol("Z"),)
        r1, r2 = machine.rules
        assert r1.symbol == Symbol("a")
        assert r1.replacements == ((Symbol("X"), Symbol("Z")),)
        assert r2.is_lambda
        assert r2.replacements == ((),)

    def test_fixture(self, anbn_machine):
        assert anbn_machine.k == 2
        assert anbn_machine.initial_state == "p0"
        assert anbn_machine.final_state == "f"
        assert len(anbn_machine.rules) == 19
        assert str(anbn_machine.rule("r5")) == "r5: pb, λ, X0, B2 -> pt, B1 X0, λ"
        assert str(anbn_machine.rule("r14")) == "r14: p0, b, X0, Y0 -> pd, X0, Y0"

    def test_dash_is_lambda(self):
        text = ONE_STACK.replace("r2: p, λ, X -> q, λ", "r2: p, -, X -> q, -")
        assert parse_sm(text).rules == parse_sm(ONE_STACK).rules

    def test_wrong_arity(self):
        with pytest.raises(FormatError, match="left side needs"):
            parse_sm(ONE_STACK.replace("r1: p, a, Z -> p, X Z", "r1: p, a -> p, X Z"))
        with pytest.raises(FormatError, match="right side needs"):
            parse_sm(ONE_STACK.replace("r1: p, a, Z -> p, X Z", "r1: p, a, Z -> p"))

    def test_stacks_must_be_numbered_from_one(self):
        with pytest.raises(FormatError, match="stack1, stack2"):
            parse_sm(ONE_STACK.replace("stack1:", "stack2:"))

    def test_initial_needs_every_bottom(self):
        with pytest.raises(FormatError, match="bottom symbols"):
            parse_sm(ONE_STACK.replace("initial: p Z", "initial: p"))

    def test_hats_are_refused(self):
        with pytest.raises(FormatError, match="hatted"):
            parse_sm(ONE_STACK.replace("r1: p, a, Z -> p, X Z", "r1: p, a, Z -> p, X^ Z"))

    def test_unknown_declaration(self):
        with pytest.raises(FormatError, match="unknown declaration 'colour'"):
            parse_sm(ONE_STACK + "colour: red\n")


class TestFormatSm:
    """Canonical output."""

    def test_one_stack_is_canonical(self):
        assert format_sm(parse_sm(ONE_STACK)) == ONE_STACK

    def test_fixture_parses_back(self, anbn_machine):
        again = parse_sm(format_sm(anbn_machine))
        assert again.rules == anbn_machine.rules
        assert again.stack_alphabets == anbn_machine.stack_alphabets
