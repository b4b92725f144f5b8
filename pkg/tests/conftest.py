"""Shared fixtures plus the acceptance-criteria summary hook.

Acceptance tests register one line per criterion through ``record_criterion``;
after the run, pytest prints them as a block so the overall gate is readable
at a glance.
"""

from __future__ import annotations

import random
from contextlib import contextmanager
from fractions import Fraction

import pytest

from spintile import Spinor

_CRITERION_LINES: dict[int, str] = {}


def record_criterion(number: int, description: str, passed: bool) -> None:
    status = "PASS" if passed else "FAIL"
    _CRITERION_LINES[number] = f"criterion {number}: {status} - {description}"


@pytest.fixture
def criterion():
    """Context manager recording one acceptance-criterion line.

    The enclosed assertions decide the verdict; any escaping exception
    marks the criterion FAIL and still fails the test normally.
    """

    @contextmanager
    def _criterion(number: int, description: str):
        try:
            yield
        except BaseException:
            record_criterion(number, description, False)
            raise
        record_criterion(number, description, True)

    return _criterion


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERION_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERION_LINES):
        terminalreporter.write_line(_CRITERION_LINES[number])


def random_int_spinor(rng: random.Random, bound: int) -> Spinor:
    while True:
        u = Spinor(rng.randint(-bound, bound), rng.randint(-bound, bound))
        if not u.is_zero():
            return u


def random_rational_spinor(rng: random.Random, max_num: int = 1000, max_den: int = 1000) -> Spinor:
    def component() -> Fraction:
        return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))

    return Spinor(component(), component())


def random_spinor_pair(rng: random.Random, bound: int) -> tuple[Spinor, Spinor]:
    """A nonzero, nonparallel integer pair (the generic tessellation input)."""
    from spintile import cross

    while True:
        a = random_int_spinor(rng, bound)
        b = random_int_spinor(rng, bound)
        if cross(a, b) != 0:
            return a, b


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC1DE)
