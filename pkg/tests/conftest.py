import hypothesis.strategies as st
import pytest

from c2framed.grading import FramingGrade
from c2framed.manifolds import LEGAL_KINDS, FramedComponent, FramedManifold

R = FramingGrade.TRIVIAL_R
SIGMA = FramingGrade.SIGN_SIGMA

twists = st.integers(min_value=-50, max_value=50)


def components(grade):
    return st.builds(FramedComponent, st.sampled_from(sorted(LEGAL_KINDS[grade])), twists)


def manifolds(grade, max_size=8):
    return st.lists(components(grade), max_size=max_size).map(
        lambda cs: FramedManifold(grade, tuple(cs))
    )


grades = st.sampled_from([R, SIGMA])


@st.composite
def manifold_pairs(draw, n=2):
    grade = draw(grades)
    return tuple(draw(manifolds(grade)) for _ in range(n))


_acceptance_results = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _acceptance_results


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for line in _acceptance_results:
        terminalreporter.write_line(line)
