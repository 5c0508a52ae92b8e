import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lifter import bundled_corpus_dir, load_case_file, load_stdlib


@pytest.fixture(scope="session")
def itrev_case():
    return load_case_file(bundled_corpus_dir() / "itrev.case")


@pytest.fixture(scope="session")
def exec_case():
    return load_case_file(bundled_corpus_dir() / "exec.case")


@pytest.fixture(scope="session")
def small_steps_case():
    return load_case_file(bundled_corpus_dir() / "small_steps.case")


@pytest.fixture(scope="session")
def stdlib_set():
    return load_stdlib()


@pytest.fixture(scope="session")
def corpus_pairs(itrev_case, exec_case, small_steps_case):
    """Every (case, args_id, args) combination the corpus ships."""
    pairs = []
    for case in (itrev_case, exec_case, small_steps_case):
        for args_id, args in case.arg_sets.items():
            pairs.append((case, args_id, args))
    return pairs
