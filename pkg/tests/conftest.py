import sys
from fractions import Fraction
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from cliffkahler import Multivector, Signature  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"


@st.composite
def signatures(draw, max_n=5, min_n=1):
    n = draw(st.integers(min_n, max_n))
    p = draw(st.integers(0, n))
    return Signature(p, n - p)


def fractions(max_den=8):
    return st.builds(Fraction, st.integers(-9, 9), st.integers(1, max_den))


@st.composite
def multivectors(draw, sig, max_terms=6):
    size = 1 << sig.n
    keys = draw(st.lists(st.integers(0, size - 1), max_size=max_terms))
    return Multivector(sig, {b: draw(fractions()) for b in keys})


@st.composite
def sig_and_mvs(draw, count=3, max_n=5):
    sig = draw(signatures(max_n))
    return (sig,) + tuple(draw(multivectors(sig)) for _ in range(count))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
