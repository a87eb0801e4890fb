from fractions import Fraction

import pytest

from qhsa.algebra import TensorElement
from qhsa.fixtures import build_structure


@pytest.fixture(scope="session")
def trivial():
    return build_structure("trivial")


@pytest.fixture(scope="session")
def ext():
    return build_structure("ext")


@pytest.fixture(scope="session")
def h2():
    return build_structure("h2")


@pytest.fixture(scope="session")
def h2r():
    return build_structure("h2r")


@pytest.fixture(scope="session")
def h2ext():
    return build_structure("h2ext")


def elem(H, arity, terms):
    """Expected-value helper: words -> int/Fraction coefficients."""
    field = H.algebra.field
    return TensorElement(
        H.algebra,
        arity,
        {tuple(w): field.from_fraction(Fraction(c)) for w, c in terms.items()},
    )


def structures_equal(A, B):
    return (
        A.algebra == B.algebra
        and A.delta == B.delta
        and A.epsilon == B.epsilon
        and A.antipode == B.antipode
        and A.phi == B.phi
        and A.alpha == B.alpha
        and A.beta == B.beta
        and A.r_matrix == B.r_matrix
    )


def pytest_terminal_summary(terminalreporter):
    """One pass/fail line per acceptance criterion at the end of the run."""
    rows = []
    for key in ("passed", "failed"):
        for rep in terminalreporter.stats.get(key, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance" in nodeid and getattr(rep, "when", None) == "call":
                rows.append((nodeid.split("::")[-1], key == "passed"))
    if rows:
        terminalreporter.write_sep("-", "acceptance criteria")
        for name, ok in sorted(rows):
            terminalreporter.write_line(f"{name}: {'PASS' if ok else 'FAIL'}")
