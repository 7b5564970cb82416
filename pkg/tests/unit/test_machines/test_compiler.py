"""Tests for compiling restricted two-stack machines into reaction automata."""

from collections import Counter
from dataclasses import replace

import pytest

from rautomata.core import CompilationError
from rautomata.engine import Multiset, Symbol, accepts, parse_multiset
from rautomata.infrastructure import parse_word as word
from rautomata.machines import (
    Category,
    ViewKind,
    compile_deterministic,
    compile_machine,
    explain_config,
    looks_compiled,
    run,
)


@pytest.fixture(scope="module")
def compiled(anbn_machine):
    return compile_machine(anbn_machine)


@pytest.fixture(scope="module")
def compiled_det(anbn_machine):
    return compile_deterministic(anbn_machine)


class TestCompileMachine:
    """Shape of the compiled automaton."""

    def test_reaction_families(self, compiled):
        sizes = Counter(compiled.category_index.values())
        assert sizes == {
            Category.INITIAL: 38,
            Category.INPUT: 190,
            Category.INPUT_HAT: 190,
            Category.LAMBDA: 171,
            Category.LAMBDA_HAT: 171,
            Category.DOUBLE_X: 76,
            Category.DOUBLE_X_HAT: 76,
            Category.DOUBLE_Y: 57,
            Category.DOUBLE_Y_HAT: 57,
            Category.FINAL: 1,
            Category.FINAL_HAT: 1,
        }
        assert len(compiled.automaton.reactions) == 1028

    def test_background_and_initial(self, compiled, compiled_det):
        assert len(compiled.automaton.background) == 52
        assert len(compiled_det.automaton.background) == 71
        assert str(compiled.automaton.initial) == "X0 Y0 p0"
        assert compiled.automaton.final == Symbol("f'")
        assert compiled.automaton.input_alphabet == frozenset(word("ab"))

    def test_output_is_valid(self, compiled):
        assert compiled.automaton.validate() == []
        assert looks_compiled(compiled.automaton)

    def test_determinism(self, compiled, compiled_det):
        assert not compiled.automaton.is_deterministic()
        assert compiled_det.automaton.is_deterministic()
        assert compiled_det.automaton.name == "anbn-det"

    def test_initial_reaction(self, compiled):
        r = compiled.automaton.reaction("A0/r1/r3")
        assert str(r.reactant) == "X0 Y0 a p0"
        assert str(r.product) == "A2^ C^ X0^^2 Y0^^2 pa^ r3"

    def test_doubling_multiplies_by_the_pushed_length(self, compiled):
        r = compiled.automaton.reaction("AX/X0/r1")
        assert r.reactant == Multiset({Symbol("X0"): 2})
        assert r.product == Multiset({Symbol("X0", True): 4})
        r = compiled.automaton.reaction("AY^/Y0/r11")
        assert r.product == Multiset({Symbol("Y0"): 1})

    def test_side_table(self, compiled):
        lines = compiled.side_table().splitlines()
        assert len(lines) == 1028
        assert lines[0] == "A0/r1/r1\tA_0"
        assert lines[-1] == "Af^\tA_f^"

    def test_name_collisions_are_renamed(self, anbn_machine):
        machine = replace(
            anbn_machine,
            states=(anbn_machine.states - {"pa"}) | {"a"},
            rules=tuple(
                replace(
                    r,
                    state="a" if r.state == "pa" else r.state,
                    target="a" if r.target == "pa" else r.target,
                )
                for r in anbn_machine.rules
            ),
        )
        out = compile_machine(machine)
        assert out.symbol_table[("state", "a")] == Symbol("a_1")
        assert out.entity(Symbol("a_1", True)) == ("state", "a")
        assert out.entity(Symbol("a")) == ("input", "a")

    def test_three_stacks_are_refused(self, anbn_machine):
        machine = replace(
            anbn_machine,
            stack_alphabets=anbn_machine.stack_alphabets + (frozenset({Symbol("Z0")}),),
            bottoms=anbn_machine.bottoms + (Symbol("Z0"),),
        )
        with pytest.raises(CompilationError):
            compile_machine(machine)

    def test_unrestricted_machines_are_refused(self, anbn_machine):
        clash = replace(anbn_machine.rule("r2"), label="r2b", target="pb")
        with pytest.raises(CompilationError):
            compile_machine(replace(anbn_machine, rules=anbn_machine.rules + (clash,)))


class TestCompiledBehaviour:
    """The compiled automaton simulates the machine step for step."""

    def test_witness_follows_the_machine(self, anbn_machine, compiled):
        w = word("ab")
        machine_run = run(anbn_machine, w)
        verdict = accepts(compiled.automaton, w)
        assert verdict.accepted

        views = [explain_config(compiled, c) for c in verdict.witness.configs]
        assert len(views) == 9
        assert [v.kind for v in views[:-1]] == [ViewKind.MACHINE] * 8
        assert views[-1].kind is ViewKind.ACCEPTING
        assert [(v.state, v.stacks) for v in views[:-1]] == [
            (c.state, c.stacks) for c in machine_run.configs
        ]
        assert [v.parity for v in views[:-1]] == ["even", "odd"] * 4
        assert Symbol("f'") in verdict.witness.last

    @pytest.mark.parametrize("text", ["ba", "baab", "bbaa", "aba"])
    def test_rejected_word(self, compiled, text):
        assert not accepts(compiled.automaton, word(text)).accepted

    def test_deterministic_variant_accepts_too(self, compiled_det):
        assert accepts(compiled_det.automaton, word("ab")).accepted


class TestExplainConfig:
    """Reading configurations back."""

    def test_initial_configuration(self, compiled):
        view = explain_config(compiled, compiled.automaton.initial)
        assert view.kind is ViewKind.MACHINE
        assert view.state == "p0"
        assert view.stacks == ((Symbol("X0"),), (Symbol("Y0"),))
        assert view.label is None
        assert str(view) == "even: state p0, stacks X0 | Y0, next -"

    def test_pending_input_and_label(self, compiled):
        view = explain_config(compiled, parse_multiset("pa^ C^ X0^^2 A2^ Y0^^2 r3 b"))
        assert view.state == "pa"
        assert view.label == "r3"
        assert view.parity == "odd"
        assert view.pending_input == (Symbol("b"),)
        assert view.stacks == ((Symbol("C"), Symbol("X0")), (Symbol("A2"), Symbol("Y0")))

    @pytest.mark.parametrize(
        "text, reason",
        [
            ("p0 X0^ Y0", "both plain and hatted symbols present"),
            ("X0 Y0", "no single state symbol"),
            ("p0 X0 Y0 r1 r2", "more than one pending label"),
            ("p0 X0^2 Y0", "stack1 is not an stm encoding"),
            ("p0 Y0", "stack1 is empty"),
            ("p0 X0 Y0 zz", "unknown symbol zz"),
        ],
    )
    def test_traps(self, compiled, text, reason):
        view = explain_config(compiled, parse_multiset(text))
        assert view.kind is ViewKind.TRAP
        assert view.reason == reason

    def test_label_decoration_in_the_deterministic_variant(self, compiled_det):
        view = explain_config(compiled_det, parse_multiset("p0 X0 Y0 r1^"))
        assert view.kind is ViewKind.TRAP

    def test_final_marker_wins(self, compiled):
        view = explain_config(compiled, parse_multiset("f' X0^ Y0^"))
        assert view.kind is ViewKind.ACCEPTING
