"""Tests for restricted two-stack machines."""

from dataclasses import replace

import pytest

from rautomata.core import InputSymbolError, Outcome, RestrictionViolation
from rautomata.engine import Symbol
from rautomata.infrastructure import parse_word as word
from rautomata.machines import Halt, MachineRule, run, step, validate_restricted
from rautomata.machines.stackmachine import RunMonitor


def s(*names):
    return tuple(Symbol(n) for n in names)


class TestRun:
    """Runs of the a^n b^n machine."""

    def test_accepting_run(self, anbn_machine):
        result = run(anbn_machine, word("ab"))

        assert result.outcome is Outcome.ACCEPTED
        assert [r.label for r in result.rules] == ["r1", "r3", "r5", "r7", "r9", "r11", "r13"]
        assert [str(c) for c in result.configs] == [
            "(p0, ab, X0 | Y0)",
            "(pa, b, C X0 | A2 Y0)",
            "(pb, λ, X0 | B2 A2 Y0)",
            "(pt, λ, B1 X0 | A2 Y0)",
            "(pt, λ, A1 B1 X0 | Y0)",
            "(pv, λ, B1 X0 | A2 Y0)",
            "(pw, λ, X0 | Y0)",
            "(f, λ, X0 | Y0)",
        ]
        assert result.steps == 7

    def test_longer_accepting_run(self, anbn_machine):
        assert run(anbn_machine, word("aabb")).outcome is Outcome.ACCEPTED

    @pytest.mark.parametrize("text", ["", "a", "b", "ba", "aab", "abb", "aba"])
    def test_rejected_words(self, anbn_machine, text):
        assert run(anbn_machine, word(text)).outcome is Outcome.REJECTED

    def test_step_bound(self, anbn_machine):
        result = run(anbn_machine, word("aabb"), max_steps=3)
        assert result.outcome is Outcome.UNDECIDED
        assert result.steps == 3

    def test_unknown_input(self, anbn_machine):
        with pytest.raises(InputSymbolError):
            run(anbn_machine, word("abc"))

    def test_final_state_halts(self, anbn_machine):
        config = run(anbn_machine, word("ab")).configs[-1]
        assert step(anbn_machine, config) is Halt.ACCEPT

    def test_missing_rule_rejects(self, anbn_machine):
        config = replace(anbn_machine.initial_config(()), state="pd")
        assert step(anbn_machine, config) is Halt.REJECT

    @pytest.mark.parametrize("text", ["b", "ba", "baab", "bbaa", "aabab"])
    def test_misshapen_words_are_read_to_the_end(self, anbn_machine, text):
        result = run(anbn_machine, word(text))
        assert result.outcome is Outcome.REJECTED
        assert result.configs[-1].state == "pd"
        assert result.configs[-1].remaining == ()


class TestValidateRestricted:
    """Syntactic restrictions on the rule table."""

    def test_fixture_is_restricted(self, anbn_machine):
        assert validate_restricted(anbn_machine) == []

    def test_bottom_must_stay(self, anbn_machine):
        bad = MachineRule("rx", "p0", Symbol("b"), s("X0", "Y0"), "pa", (s("C"), s("Y0")))
        machine = replace(anbn_machine, rules=anbn_machine.rules + (bad,))
        codes = {d.code for d in validate_restricted(machine)}
        assert "bottom-rewritten" in codes

    def test_bottom_cannot_be_pushed(self, anbn_machine):
        bad = MachineRule("rx", "pa", Symbol("b"), s("C", "A2"), "pb", (s("X0"), s("A2")))
        machine = replace(anbn_machine, rules=anbn_machine.rules + (bad,))
        codes = {d.code for d in validate_restricted(machine)}
        assert "bottom-pushed" in codes

    def test_lambda_and_input_choice(self, anbn_machine):
        bad = MachineRule("rx", "pa", None, s("C", "A2"), "pb", (s("C"), s("A2")))
        machine = replace(anbn_machine, rules=anbn_machine.rules + (bad,))
        problems = validate_restricted(machine)
        assert [d.code for d in problems] == ["lambda-input-choice"]
        assert problems[0].subject == "rx"

    def test_duplicate_left_side(self, anbn_machine):
        clash = replace(anbn_machine.rule("r2"), label="r2b", target="pb")
        machine = replace(anbn_machine, rules=anbn_machine.rules + (clash,))
        codes = [d.code for d in validate_restricted(machine)]
        assert codes == ["nondeterministic"]

    def test_shared_stack_alphabets(self, anbn_machine):
        alphabets = (anbn_machine.stack_alphabets[0] | {Symbol("A2")}, anbn_machine.stack_alphabets[1])
        machine = replace(anbn_machine, stack_alphabets=alphabets)
        codes = {d.code for d in validate_restricted(machine)}
        assert "stack-alphabets-overlap" in codes

    def test_reading_configuration_without_a_move(self, anbn_machine):
        machine = replace(anbn_machine, rules=tuple(r for r in anbn_machine.rules if r.label != "r14"))
        problems = validate_restricted(machine)
        assert [d.code for d in problems] == ["input-incomplete"]
        assert problems[0].subject == "r1"
        assert problems[0].message == "no move on b in p0 X0 Y0"

    def test_lambda_configurations_need_no_input_moves(self, anbn_machine):
        machine = replace(anbn_machine, input_alphabet=anbn_machine.input_alphabet | {Symbol("c")})
        subjects = sorted(d.subject for d in validate_restricted(machine))
        assert subjects == ["r1", "r16", "r18", "r2", "r4"]

    def test_rules_leaving_the_final_state(self, anbn_machine):
        bad = MachineRule("rx", "f", None, s("X0", "Y0"), "p0", (s("X0"), s("Y0")))
        machine = replace(anbn_machine, rules=anbn_machine.rules + (bad,))
        codes = {d.code for d in validate_restricted(machine)}
        assert "final-not-halting" in codes


class TestRunMonitor:
    """Run-time restrictions."""

    def test_input_after_lambda(self, anbn_machine):
        monitor = RunMonitor(anbn_machine)
        r1, r5 = anbn_machine.rule("r1"), anbn_machine.rule("r5")
        config = anbn_machine.initial_config(word("a"))
        monitor.check(config, r5, config)
        with pytest.raises(RestrictionViolation) as exc_info:
            monitor.check(config, r1, config)
        assert exc_info.value.condition == "ii"

    def test_emptied_stack(self, anbn_machine):
        monitor = RunMonitor(anbn_machine)
        config = anbn_machine.initial_config(())
        emptied = replace(config, stacks=((), config.stacks[1]))
        with pytest.raises(RestrictionViolation) as exc_info:
            monitor.check(config, anbn_machine.rule("r13"), emptied)
        assert exc_info.value.condition == "iii"
