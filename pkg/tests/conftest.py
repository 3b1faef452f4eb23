import pytest
from hypothesis import settings, strategies as st

from rearep.rmatrix import catalog_standard_hecke, catalog_uq_sl2, validate
from rearep.scalar import LaurentRational

settings.register_profile("repo", max_examples=60, deadline=None)
settings.load_profile("repo")

_acceptance_lines: list[str] = []


@pytest.fixture(scope="session")
def sl2():
    return validate(catalog_uq_sl2())


@pytest.fixture(scope="session")
def hecke3():
    return validate(catalog_standard_hecke(3))


@pytest.fixture(scope="session", params=["sl2", "hecke3"])
def profile(request):
    return request.getfixturevalue(request.param)


@pytest.fixture(scope="session")
def verdict():
    """Records one summary line per acceptance criterion."""
    def record(label: str, ok: bool) -> bool:
        line = f"{'PASS' if ok else 'FAIL'}  {label}"
        print(line)
        _acceptance_lines.append(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


laurent_polys = st.dictionaries(
    st.integers(-4, 4), st.integers(-5, 5).filter(bool), min_size=1, max_size=4
).map(LaurentRational.laurent)

nonzero_polys = laurent_polys.filter(bool)

scalars = st.builds(lambda a, b: a / b, laurent_polys, nonzero_polys)
nonzero_scalars = scalars.filter(bool)
