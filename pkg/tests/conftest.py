"""Shared fixtures: cached pipelines so tests do not rebuild log tables."""

from functools import lru_cache

import pytest

from jacobicodes import (
    FieldSpec,
    build_code,
    build_congruence_system,
    build_log_table,
    jacobi_sum,
    select_solution,
    solve_dickson,
    solve_gauss,
    subfield_residue,
)
from jacobicodes.fields import is_prime


@lru_cache(maxsize=None)
def make_pipeline(p: int, l: int, alpha: int = 1):
    """Everything the canonical generator of F_(p^alpha) determines."""
    spec = FieldSpec(p=p, l=l, alpha=alpha)
    table = build_log_table(spec)
    J = jacobi_sum(table)
    b = subfield_residue(table.generator ** ((spec.q - 1) // l))
    solutions = (
        solve_gauss(spec.q, p) if l == 3 else solve_dickson(spec.q, p)
    )
    selection = select_solution(solutions, spec, table.generator)
    system = build_congruence_system(J.value, p, b)
    code = build_code(system, spec)
    return {
        "spec": spec,
        "table": table,
        "J": J,
        "b": b,
        "solutions": solutions,
        "selection": selection,
        "system": system,
        "code": code,
    }


def primes_1_mod(l: int, lo: int, hi: int) -> list[int]:
    return [p for p in range(lo, hi) if p % l == 1 and is_prime(p)]


@pytest.fixture(scope="session")
def p61():
    return make_pipeline(61, 5)


@pytest.fixture(scope="session")
def p7():
    return make_pipeline(7, 3)


@pytest.fixture(scope="session")
def p11():
    return make_pipeline(11, 5)
