"""Tests for workspace measurement and boundedness profiles."""

import json

import pytest

from rautomata.complexity import CSV_HEADER, format_word, profile_boundedness, workspace, workspace_of_trace
from rautomata.core import AutomatonError
from rautomata.engine import Symbol, Trace, accepts, parse_multiset
from rautomata.infrastructure import parse_word as word


class TestWorkspaceOfTrace:
    """Peak weight along one accepting trace."""

    def test_power_of_two(self, ex2):
        trace = accepts(ex2, word("aaaaaaaa")).witness
        assert workspace_of_trace(trace, ex2) == 5
        assert workspace_of_trace(trace, include_fed=True) == 6

    def test_fed_configurations_of_odd_length(self, odd_a):
        trace = accepts(odd_a, word("aaa")).witness
        assert workspace_of_trace(trace) == 1
        assert workspace_of_trace(trace, include_fed=True) == 2

    def test_rejecting_trace(self, ex2):
        with pytest.raises(AutomatonError):
            workspace_of_trace(Trace(parse_multiset("d")), ex2)


class TestWorkspace:
    """Smallest weight bound under which a word is accepted."""

    def test_minimal_bound(self, ex2, fig1, odd_a):
        assert workspace(ex2, word("aaaaaaaa"), cap=64) == 5
        assert workspace(fig1, word("ab"), cap=64) == 2
        assert workspace(odd_a, word("a"), cap=64) == 1

    def test_rejected_word_has_no_workspace(self, ex2):
        assert workspace(ex2, word("aaa"), cap=64) is None

    def test_cap_below_the_need(self, ex2):
        assert workspace(ex2, word("aaaaaaaa"), cap=4) is None


class TestProfile:
    """Reports over several strings."""

    @pytest.fixture
    def report(self, fig1):
        return profile_boundedness(fig1, [word("ab"), word("aabb"), word("ba"), word("aaabbb")], cap=64)

    def test_records(self, report):
        assert [(r.text, r.ws, r.trace_id) for r in report.records] == [
            ("ab", 2, "t1"),
            ("aabb", 3, "t2"),
            ("ba", None, None),
            ("aaabbb", 4, "t4"),
        ]
        assert len(report.accepted) == 3

    def test_summary(self, report):
        assert report.monotone
        assert report.max_ratio == pytest.approx(1.0)
        assert report.growth_hint == "linear"

    def test_csv(self, report):
        lines = report.to_csv().splitlines()
        assert lines[0] == ",".join(CSV_HEADER)
        assert lines[1] == "ab,2,2,t1"
        assert lines[3] == "ba,2,,"

    def test_json_shape(self, report):
        data = json.loads(json.dumps(report.to_dict()))
        assert data["records"][0] == {"string": "ab", "length": 2, "ws": 2, "trace_id": "t1"}
        assert data["growth_hint"] == "linear"

    def test_constant_growth(self, odd_a):
        report = profile_boundedness(odd_a, [word("a"), word("aaa"), word("aaaaa")], cap=8)
        assert report.growth_hint == "constant"
        assert [r.ws for r in report.records] == [1, 1, 1]

    def test_nothing_accepted(self, odd_a):
        report = profile_boundedness(odd_a, [word("aa")], cap=8)
        assert report.growth_hint == "no accepted strings"
        assert report.max_ratio is None


def test_format_word():
    assert format_word(word("ab")) == "ab"
    assert format_word((Symbol("a'"), Symbol("b"))) == "a' b"
    assert format_word(()) == ""
