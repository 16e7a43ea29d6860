"""Coxeter systems used by the verification suites."""

from .system import INF, CoxeterSystem


def right_angled_triangle() -> CoxeterSystem:
    """Three generators with every product of infinite order."""
    return CoxeterSystem.from_edges(3, {(0, 1): INF, (0, 2): INF, (1, 2): INF}, name="Tinf")


def shipped_systems() -> dict[str, CoxeterSystem]:
    return {
        "A1": CoxeterSystem.finite("A", 1),
        "A2": CoxeterSystem.finite("A", 2),
        "A3": CoxeterSystem.finite("A", 3),
        "I2(5)": CoxeterSystem.finite("I", 2, 5),
        "A1xA1": CoxeterSystem.product(CoxeterSystem.finite("A", 1), CoxeterSystem.finite("A", 1)),
        "~A1": CoxeterSystem.affine("A", 1),
        "~A2": CoxeterSystem.affine("A", 2),
        "Tinf": right_angled_triangle(),
    }
