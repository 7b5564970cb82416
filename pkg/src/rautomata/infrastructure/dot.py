"""Graphviz emission for reaction diagrams and k-bounded finite automata."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from ..complexity.nfa import NFA, NfaState
from ..core.errors import BudgetExceededError
from ..engine.multiset import Multiset, Symbol
from ..engine.process import Move, SearchBudget, explore
from ..engine.reactions import ReactionAutomaton

logger = logging.getLogger(__name__)

SINK = "sink"


def _gvquote(s: str) -> str:
    return '"{}"'.format(s.replace("\\", "\\\\").replace('"', r"\""))


@dataclass(frozen=True, slots=True)
class DiagramSpec:
    automaton: ReactionAutomaton
    words: Tuple[Tuple[Symbol, ...], ...] = ()
    show_bags: bool = True
    collapse_sink: bool = True


@dataclass(slots=True)
class _Diagram:
    ids: Dict[Multiset, str] = field(default_factory=dict)
    edges: Dict[Tuple[str, str, str], None] = field(default_factory=dict)
    accepting: Set[Multiset] = field(default_factory=set)
    dead: Set[Multiset] = field(default_factory=set)
    active: Set[Multiset] = field(default_factory=set)

    def node(self, config: Multiset) -> str:
        if config not in self.ids:
            self.ids[config] = f"n{len(self.ids)}"
        return self.ids[config]


def _edge_label(move: Move, show_bags: bool) -> str:
    parts = []
    if move.symbol is not None:
        parts.append(str(move.symbol))
    if move.bag is not None and show_bags:
        parts.append(str(move.bag))
    return " / ".join(parts)


def emit_diagram(request: DiagramSpec, budget: Optional[SearchBudget] = None) -> str:
    """Reaction diagram for the processes of every word requested, as DOT text.

    Nodes are configurations shared across words; edges carry the fed symbol and
    the applied reaction bag. Converged configurations without the final symbol
    are merged into one sink node when collapse_sink is set.
    """
    budget = budget or SearchBudget()
    automaton = request.automaton
    diagram = _Diagram()
    root = diagram.node(automaton.initial)
    moves: List[Tuple[Multiset, Move]] = []
    for word in request.words:
        graph = explore(automaton, word, budget)
        if graph.truncated is not None:
            limit = getattr(budget, graph.truncated.replace(" ", "_"), 0)
            raise BudgetExceededError(graph.truncated, int(limit))
        for state, out in graph.moves.items():
            diagram.node(state.config)
            if out:
                diagram.active.add(state.config)
            for move in out:
                moves.append((state.config, move))
                diagram.node(move.target.config)
        diagram.accepting |= {s.config for s in graph.accepting}
        diagram.dead |= {s.config for s in graph.dead_ends}

    collapsed = set()
    if request.collapse_sink:
        collapsed = diagram.dead - diagram.active - diagram.accepting
    for source, move in moves:
        target = move.target.config
        target_id = SINK if target in collapsed else diagram.ids[target]
        diagram.edges[(diagram.ids[source], target_id, _edge_label(move, request.show_bags))] = None
    logger.debug("diagram with %d node(s), %d edge(s)", len(diagram.ids), len(diagram.edges))
    return "".join(_render(automaton.name or "reactions", diagram, root, collapsed))


def _render(name: str, diagram: _Diagram, root: str, collapsed: Set[Multiset]) -> Iterator[str]:
    yield f"digraph {_gvquote(name)} {{\n"
    yield "  rankdir=LR;\n"
    yield "  start [shape=point];\n"
    for config, node_id in diagram.ids.items():
        if config in collapsed:
            continue
        shape = "doublecircle" if config in diagram.accepting else "circle"
        yield f"  {node_id} [label={_gvquote(str(config))}, shape={shape}];\n"
    if collapsed:
        yield f"  {SINK} [label={_gvquote('converged')}, shape=box, style=dashed];\n"
    yield f"  start -> {root};\n"
    for source, target, label in diagram.edges:
        yield f"  {source} -> {target} [label={_gvquote(label)}];\n"
    yield "}\n"


def nfa_to_dot(nfa: NFA, name: str = "nfa") -> str:
    return "".join(_render_nfa(nfa, name))


def _render_nfa(nfa: NFA, name: str) -> Iterator[str]:
    ordered: Sequence[NfaState] = sorted(
        nfa.states, key=lambda s: (s.draining, s.config.weight, s.config.sort_key())
    )
    ids = {state: f"q{index}" for index, state in enumerate(ordered)}
    yield f"digraph {_gvquote(name)} {{\n"
    yield "  rankdir=LR;\n"
    yield "  start [shape=point];\n"
    for state in ordered:
        shape = "doublecircle" if state in nfa.finals else "circle"
        yield f"  {ids[state]} [label={_gvquote(str(state))}, shape={shape}];\n"
    yield f"  start -> {ids[nfa.initial]};\n"
    edges = sorted(
        (ids[s], ids[t], "λ" if a is None else str(a)) for s, a, t in nfa.edges()
    )
    for source, target, label in edges:
        yield f"  {source} -> {target} [label={_gvquote(label)}];\n"
    yield "}\n"
