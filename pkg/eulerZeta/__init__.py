"""Euler-Poincaré characteristics and zeta functions of totally disconnected groups."""

import importlib.metadata
import subprocess

from .algebra import Polynomial, RationalFunction
from .coxeter import CoxeterSystem
from .euler import euler_building, euler_chevalley, euler_graph_of_groups
from .exceptions import EulerZetaError
from .hecke import HeckeAlgebra
from .measures import HaarMeasure, SubgroupContext


def get_version():
    try:
        output = subprocess.check_output(["git", "describe", "--tags", "--abbrev=0"], stderr=subprocess.DEVNULL)
        return output.decode().strip().replace("v", "")
    except (subprocess.CalledProcessError, OSError):
        return "unknown"


try:
    __version__ = importlib.metadata.version(__package__)
except importlib.metadata.PackageNotFoundError:
    __version__ = get_version()

__all__ = [
    "CoxeterSystem",
    "EulerZetaError",
    "HaarMeasure",
    "HeckeAlgebra",
    "Polynomial",
    "RationalFunction",
    "SubgroupContext",
    "euler_building",
    "euler_chevalley",
    "euler_graph_of_groups",
]
