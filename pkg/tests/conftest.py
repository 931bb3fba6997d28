"""Shared fixtures; the exhaustive cycle scan is expensive, so it runs once."""

import itertools

import pytest

from orbitinv import CycleGraph, EdgeLabel, validate_graph


@pytest.fixture(scope="session")
def exhaustive_cycles_8():
    """Every label word of length 2..8 accepted by validate_graph as a cycle."""
    labels = list(EdgeLabel)
    accepted = []
    for length in range(2, 9):
        for word in itertools.product(labels, repeat=length):
            if validate_graph(CycleGraph((word,))).ok:
                accepted.append(word)
    return accepted
