import os

import pytest

from cdc5 import parse_graph6, petersen_graph

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


def read_graph6_lines(name: str) -> list[str]:
    with open(os.path.join(DATA_DIR, name), "r", encoding="ascii") as handle:
        return [line.strip() for line in handle if line.strip()]


@pytest.fixture(scope="session")
def data_dir() -> str:
    return DATA_DIR


@pytest.fixture(scope="session")
def catalog_lines() -> list[str]:
    return read_graph6_lines("cubic_bridgeless_connected_n4_10.g6")


@pytest.fixture(scope="session")
def catalog(catalog_lines):
    return [parse_graph6(line) for line in catalog_lines]


@pytest.fixture(scope="session")
def snark_lines() -> list[str]:
    return read_graph6_lines("snarks.g6")


@pytest.fixture(scope="session")
def snarks(snark_lines):
    return [parse_graph6(line) for line in snark_lines]


@pytest.fixture()
def petersen():
    return petersen_graph()
