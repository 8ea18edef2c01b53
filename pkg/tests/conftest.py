import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

from gmdcodes import make_field, nested_cartesian_set, projective_space  # noqa: E402
from gmdcodes.poly import MonomialOrder  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def gf4():
    return make_field(2, 2)


@pytest.fixture(scope="session")
def ex71(gf4):
    """{0,1} x {0,1} x GF(4) in P^2 with lex t3 > t2 > t1."""
    X = nested_cartesian_set(gf4, [[0, 1], [0, 1], "all"])
    return X, MonomialOrder("lex", (2, 1, 0))


@pytest.fixture(scope="session")
def ex74():
    return projective_space(make_field(2), 3), MonomialOrder("grevlex", (0, 1, 2))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[n])
