from __future__ import annotations

import sys
from pathlib import Path

import pytest

# Ensure `src` is on sys.path for test imports when running in isolated envs
root = Path(__file__).resolve().parents[1]
src_dir = root / "src"
if str(src_dir) not in sys.path:
    sys.path.insert(0, str(src_dir))

from rautomata.infrastructure import FsDocumentRepository, bundled_fixtures_dir  # noqa: E402


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return bundled_fixtures_dir()


@pytest.fixture(scope="session")
def repo() -> FsDocumentRepository:
    return FsDocumentRepository()


@pytest.fixture(scope="session")
def fig1(repo):
    return repo.load_automaton("fig1_anbn")


@pytest.fixture(scope="session")
def ex1(repo):
    return repo.load_automaton("ex1_reactions")


@pytest.fixture(scope="session")
def ex2(repo):
    return repo.load_automaton("ex2_pow2")


@pytest.fixture(scope="session")
def ex3(repo):
    return repo.load_automaton("ex3_anbncn")


@pytest.fixture(scope="session")
def ex4(repo):
    return repo.load_automaton("ex4_ambmcndn")


@pytest.fixture(scope="session")
def odd_a(repo):
    return repo.load_automaton("odd_a")


@pytest.fixture(scope="session")
def ab_star(repo):
    return repo.load_automaton("ab_star")


@pytest.fixture(scope="session")
def anbn_machine(repo):
    return repo.load_machine("anbn")
