import pytest

from doccluster.text_pipeline import Document

ENTERTAINMENT = (
    "Salaam Bombay is a 1988 Hindi film directed by Mira Nair, and screen written by her "
    "longtime creative collaborator, Sooni Taraporevala. The film chronicles the day-to-day "
    "life of children living on the streets of Mumbai. It won the National Film Award for "
    "Best Feature Film in Hindi, the National Board of Review Award for Top Foreign Film, the "
    "Golden Camera and Audience Awards at the Cannes Film Festival, and three awards at the "
    "Montréal World Film Festival. The film was India's second film submission to be "
    "nominated for the Academy Award for Best Foreign Language Film."
)

SPORT = (
    "Badminton is a racquet sport played by either two opposing players (singles) or two "
    "opposing pairs (doubles), who take positions on opposite halves of a rectangular court "
    "that is divided by a net. Players score points by striking a shuttlecock with their "
    "racquet so that it passes over the net and lands in their opponents' half of the court."
)


@pytest.fixture
def sport_text():
    return SPORT


@pytest.fixture
def entertainment_text():
    return ENTERTAINMENT


def make_docs(*count_maps, labels=None):
    """Documents straight from term-count dicts (bypassing the text pipeline)."""
    docs = []
    for i, counts in enumerate(count_maps):
        label = labels[i] if labels else None
        docs.append(Document(f"d{i}", "", label, dict(counts), sum(counts.values())))
    return docs


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (status, elapsed) in mod.RESULTS.items():
        terminalreporter.write_line(f"{status}  {name[5:]:<40} {elapsed:6.2f}s")
