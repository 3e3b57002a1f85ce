from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from sepr.exactnum import CQExt, QExt
from sepr.matrix import validate_hermitian

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

RADICANDS = (0, 2, 3, 5)

small_fractions = st.fractions(min_value=-6, max_value=6, max_denominator=5)


def qexts(d):
    return st.builds(lambda a, b: QExt(a, b, d), small_fractions, small_fractions)


@st.composite
def qext_triples(draw):
    d = draw(st.sampled_from(RADICANDS))
    q = qexts(d)
    return draw(q), draw(q), draw(q)


@st.composite
def hermitian_matrices(draw, min_n=1, max_n=4, real=False, radicands=(0, 2, 3)):
    n = draw(st.integers(min_n, max_n))
    d = draw(st.sampled_from(radicands))
    comp = st.integers(-3, 3).map(Fraction) | st.fractions(-3, 3, max_denominator=3)
    q = st.builds(lambda a, b: QExt(a, b if d > 1 else 0, d), comp, comp | st.just(Fraction(0)))
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            re = draw(q)
            im = QExt(0, 0, d) if (i == j or real) else draw(q)
            z = CQExt(re, im)
            rows[i][j] = z
            rows[j][i] = z.conj()
    return validate_hermitian(rows, d)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
