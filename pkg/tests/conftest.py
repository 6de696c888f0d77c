import json
from importlib import resources

import pytest

from moore57 import blocks, constraints, drg, solver


@pytest.fixture(scope="session")
def pnums():
    return drg.intersection_numbers(drg.MOORE57_ARRAY)


@pytest.fixture(scope="session")
def fixtures():
    with resources.files("moore57.data").joinpath("fixtures.json").open() as fh:
        return {label: tuple(vec) for label, vec in json.load(fh).items()}


@pytest.fixture(scope="session")
def expected_solutions():
    with resources.files("moore57.data").joinpath("expected_solutions.json").open() as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def all_results(pnums):
    """Enumerations of all 8 canonical blocks, computed once."""
    return {
        blocks.block_label(b): solver.enumerate_block(b, pnums)
        for b in blocks.canonical_blocks()
    }


@pytest.fixture(scope="session")
def systems(pnums):
    return {
        blocks.block_label(b): blocks.build_system(b, pnums)
        for b in blocks.canonical_blocks()
    }


@pytest.fixture(scope="session")
def consets():
    return {
        blocks.block_label(b): constraints.assemble(b)
        for b in blocks.canonical_blocks()
    }
