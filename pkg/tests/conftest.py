import pathlib

import pytest

from quadalg.parser import parse

CORPUS = pathlib.Path(__file__).resolve().parent.parent / "corpus"

CORPUS_NAMES = sorted(p.stem for p in CORPUS.glob("*.qa"))


def load(name: str):
    """Parsed corpus presentation by file stem."""
    _, A = parse((CORPUS / f"{name}.qa").read_text())
    return A


@pytest.fixture(scope="session")
def corpus():
    return {name: load(name) for name in CORPUS_NAMES}
