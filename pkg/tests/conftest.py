from itertools import product

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from monolab.complexes import SimplicialComplex
from monolab.core import Monomial, MonomialIdeal
from monolab.io import parse_ideal

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def ideal(text: str) -> MonomialIdeal:
    """``ideal("n=3; x1*x2; x3")`` with ``;`` standing for newlines."""
    return parse_ideal(text.replace(";", "\n"))


def mono(n: int, *exps: int) -> Monomial:
    return Monomial(tuple(exps) + (0,) * (n - len(exps)))


@st.composite
def monomials(draw, n: int = 4, max_exp: int = 3, squarefree: bool = False):
    top = 1 if squarefree else max_exp
    return Monomial(tuple(draw(st.integers(0, top)) for _ in range(n)))


@st.composite
def ideals(draw, n_max: int = 4, max_exp: int = 3, max_gens: int = 5, squarefree: bool = False,
           nonzero: bool = True):
    n = draw(st.integers(1, n_max))
    gens = draw(st.lists(monomials(n, max_exp, squarefree).filter(lambda m: m.degree > 0),
                         min_size=1 if nonzero else 0, max_size=max_gens))
    return MonomialIdeal(n, gens)


@st.composite
def complexes(draw, n_max: int = 5, max_facets: int = 5):
    n = draw(st.integers(1, n_max))
    facets = draw(st.lists(st.frozensets(st.integers(1, n), max_size=n), min_size=1,
                           max_size=max_facets))
    return SimplicialComplex(n, facets)


def all_monomials(n: int, max_deg: int):
    for e in product(range(max_deg + 1), repeat=n):
        if sum(e) <= max_deg:
            yield Monomial(e)


@pytest.fixture
def four_gens():
    return ideal("n=4; a^2*b; a*b*c; b*c*d; c*d^2")


@pytest.fixture
def seven_gens():
    return ideal("n=4; b*c; a*b*d^2; b^3*d^2; c*d; a*c; c^2; a^2*b*d")


ACCEPTANCE: dict[int, list[tuple[str, bool]]] = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    ACCEPTANCE.setdefault(marker.args[0], []).append((item.name, call.excinfo is None))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[k]
        ok = all(p for _, p in parts)
        failed = [name for name, p in parts if not p]
        line = f"criterion {k}: {'PASS' if ok else 'FAIL'} ({len(parts) - len(failed)}/{len(parts)} checks)"
        if failed:
            line += " failing: " + ", ".join(failed)
        terminalreporter.write_line(line)
