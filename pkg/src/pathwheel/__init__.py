"""Exact Ramsey numbers R(P_n, W_m) of paths versus wheels, with witness
graphs, executable lemma checks and exhaustive small-case confirmation."""

from .formula import ramsey_path_wheel, t_large, t_min_char
from .graphcore import Graph

__all__ = ["Graph", "ramsey_path_wheel", "t_large", "t_min_char"]
__version__ = "0.1.0"
