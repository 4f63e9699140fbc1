import numpy as np
import pytest

from canonical_arcs.mobius import RootTriple
from canonical_arcs.sphere import INF

# marked points of the three oracle geometries; the complex one has all four
# points finite so the normalizing inversion is exercised
GEOMETRIES = {
    "real": (INF, 1.0, -0.3, -0.7),
    "lemniscatic": (INF, 1.0, 0.0, -1.0),
    "complex": (0.3 + 0.2j, 2 - 1j, -1 + 0.5j, 1j),
}
ORACLE_CLASSES = [(1, 0), (0, 1), (1, 1), (1, 2), (3, 2)]


def random_root_triples(n, seed=20240611, min_sep=0.05):
    """Unit-scaled centred root triples with a floor on the root separation."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        e1, e2 = rng.normal(size=2) + 1j * rng.normal(size=2)
        e = np.array([e1, e2, -e1 - e2])
        e = e / np.abs(e).max()
        t = RootTriple(*map(complex, e))
        if t.min_separation() >= min_sep:
            out.append(t)
    return out


def stock_root_triples():
    w = np.exp(2j * np.pi / 3)
    return {
        "real": RootTriple(1 + 0j, -0.3 + 0j, -0.7 + 0j),
        "lemniscatic": RootTriple(1 + 0j, 0j, -1 + 0j),
        "equianharmonic": RootTriple(1 + 0j, complex(w), complex(w * w)),
    }


@pytest.fixture(scope="session")
def oracle_configs():
    """Configurations of the oracle geometry x class grid, built once."""
    from canonical_arcs.solver import build_configuration

    return {
        (g, cls): build_configuration(pts, cls)
        for g, pts in GEOMETRIES.items()
        for cls in ORACLE_CLASSES
    }


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES = {}


def record_criterion(n, ok, detail):
    line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES[n] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
