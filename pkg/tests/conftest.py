from __future__ import annotations

from functools import lru_cache

from skein_tori.amatrix import p_matrices
from skein_tori.center import reduced_torus_data, torus_data
from skein_tori.surface import build_surface, builtin

ZOO = ([f"polygon:{k}" for k in range(3, 7)]
       + [f"annulus:{a},{b}" for a in range(1, 4) for b in range(1, 4)]
       + ["genus:1,1", "genus:1,2"])

# the same surfaces as (genus, punctures) for the ear triangulation
ZOO_SURFACES = ([(0, (k,)) for k in range(3, 7)]
                + [(0, (a, b)) for a in range(1, 4) for b in range(1, 4)]
                + [(1, (1,)), (1, (2,))])

NS = (2, 3, 4)
ORDERS = tuple(range(2, 13))


@lru_cache(maxsize=None)
def tri(name: str):
    return builtin(name)


@lru_cache(maxsize=None)
def amats(name: str, n: int):
    return p_matrices(tri(name), n)


@lru_cache(maxsize=None)
def data(name: str, n: int):
    return torus_data(tri(name), n, amats(name, n))


@lru_cache(maxsize=None)
def reduced_data(g: int, punctures: tuple, n: int):
    return reduced_torus_data(build_surface(g, punctures), n)


# criterion number -> (passed, detail), filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def report(number: int, title: str, passed: bool, detail: str) -> None:
    line = f"criterion {number} {'PASS' if passed else 'FAIL'}: {title} ({detail})"
    ACCEPTANCE[number] = (passed, line)
    print(line, flush=True)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[number][1])
