from __future__ import annotations

import socket
from pathlib import Path

import pytest

from conceptscope import (
    LookupCache,
    NGramModel,
    PipelineConfig,
    analyze_document,
    load_document,
    load_ontology,
    load_similarity_taxonomy,
    train_ngram_model,
)
from conceptscope.server import build_workspace, bundled_taxonomy_text

FIXTURES = Path(__file__).parent / "fixtures"

_LOOPBACK = {"127.0.0.1", "::1", "localhost"}


@pytest.fixture(autouse=True, scope="session")
def forbid_external_network():
    """The suite must pass with no network; loopback stays open for uvicorn."""
    real_connect = socket.socket.connect

    def guarded(self, address, *args, **kwargs):
        if isinstance(address, tuple) and address and isinstance(address[0], str):
            if address[0] not in _LOOPBACK:
                raise RuntimeError(f"external network access attempted: {address!r}")
        return real_connect(self, address, *args, **kwargs)

    socket.socket.connect = guarded
    try:
        yield
    finally:
        socket.socket.connect = real_connect


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def store():
    return load_ontology(FIXTURES / "ontology.csv")


@pytest.fixture(scope="session")
def taxonomy():
    return load_similarity_taxonomy(bundled_taxonomy_text())


@pytest.fixture(scope="session")
def lookup_cache():
    return LookupCache.load(FIXTURES / "lookup_cache.json")


@pytest.fixture(scope="session")
def default_config():
    return PipelineConfig()


@pytest.fixture(scope="session")
def analyzed():
    """Analyzed fixture document plus its trained collocation model, by stem."""
    memo: dict[str, tuple] = {}

    def build(name: str) -> tuple:
        if name not in memo:
            raw = (FIXTURES / f"{name}.txt").read_bytes()
            doc = analyze_document(load_document(raw, title=name))
            model: NGramModel = train_ngram_model(doc.sentences)
            memo[name] = (doc, model)
        return memo[name]

    return build


@pytest.fixture(scope="session")
def corpus_workspace():
    return build_workspace(
        [FIXTURES / "tensent.txt", FIXTURES / "abstract.txt", FIXTURES / "fuzzy.txt"],
        FIXTURES / "ontology.csv",
        cache_path=FIXTURES / "lookup_cache.json",
    )


@pytest.fixture(scope="session")
def cmp_workspace():
    return build_workspace(
        [FIXTURES / "cmp_a.txt", FIXTURES / "cmp_b.txt", FIXTURES / "cmp_c.txt"],
        FIXTURES / "ontology.csv",
        cache_path=FIXTURES / "lookup_cache.json",
    )


_ACCEPTANCE: dict[str, str] = {}
_RANK = {"PASS": 0, "SKIP": 1, "FAIL": 2}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance(name): ties a test to one acceptance criterion"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    name = marker.args[0]
    if report.when == "call":
        status = "PASS" if report.passed else "FAIL"
    elif report.skipped:
        status = "SKIP"
    elif report.failed:
        status = "FAIL"
    else:
        return
    prior = _ACCEPTANCE.get(name, "PASS")
    if _RANK[status] >= _RANK[prior]:
        _ACCEPTANCE[name] = status


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"{_ACCEPTANCE[name]:4s} {name}")
