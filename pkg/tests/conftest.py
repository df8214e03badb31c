import pytest

from ringlab import checks, compile_text, compute_bundle


@pytest.fixture(scope="session")
def suite_report():
    """One full run of the default corpus, shared by the suite-level tests."""
    return checks.run_suite()


@pytest.fixture(scope="session")
def corpus_bundles():
    """(text, ring, bundle) for every default-corpus ring."""
    out = []
    for text in checks.default_corpus():
        ring = compile_text(text)
        out.append((text, ring, compute_bundle(ring)))
    return out


def results_for(report, check_id):
    for entry in report.checks:
        if entry["id"] == check_id:
            return entry["results"]
    raise KeyError(check_id)
