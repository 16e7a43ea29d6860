import random

import pytest

from eulerZeta.config import Settings, load_settings
from eulerZeta.coxeter import CoxeterSystem, right_angled_triangle

SEED = 20240501


@pytest.fixture(scope="session")
def a1() -> CoxeterSystem:
    return CoxeterSystem.finite("A", 1)


@pytest.fixture(scope="session")
def a2() -> CoxeterSystem:
    return CoxeterSystem.finite("A", 2)


@pytest.fixture(scope="session")
def a3() -> CoxeterSystem:
    return CoxeterSystem.finite("A", 3)


@pytest.fixture(scope="session")
def b3() -> CoxeterSystem:
    return CoxeterSystem.finite("B", 3)


@pytest.fixture(scope="session")
def i25() -> CoxeterSystem:
    return CoxeterSystem.finite("I", 2, 5)


@pytest.fixture(scope="session")
def affine_a1() -> CoxeterSystem:
    return CoxeterSystem.affine("A", 1)


@pytest.fixture(scope="session")
def affine_a2() -> CoxeterSystem:
    return CoxeterSystem.affine("A", 2)


@pytest.fixture(scope="session")
def triangle() -> CoxeterSystem:
    return right_angled_triangle()


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)


@pytest.fixture(scope="session")
def settings() -> Settings:
    return load_settings()


@pytest.fixture(scope="session")
def quick_settings(settings: Settings) -> Settings:
    """Smaller bounds and sample counts so whole suites run quickly."""
    return settings.model_copy(update={"max_len": 8, "random_samples": 20, "graph_samples": 15})


@pytest.fixture
def write(tmp_path):
    def _write(name: str, text: str):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write
