"""Exact computation of local cohomology classes, Lyubeznik numbers and related data
for generic determinantal rings."""

from .exactpoly import BiPoly, LaurentPoly
from .grothendieck import GammaElem, ModuleExpr, NotEffective, change_basis
from .loccoh import h_class_D, h_class_Q, h_class_S, iterate_loccoh, start_expr
from .lyubeznik import lyub_gf, lyub_table
from .shapes import Partition, Weight, qbinom

__all__ = [
    "BiPoly",
    "GammaElem",
    "LaurentPoly",
    "ModuleExpr",
    "NotEffective",
    "Partition",
    "Weight",
    "change_basis",
    "h_class_D",
    "h_class_Q",
    "h_class_S",
    "iterate_loccoh",
    "lyub_gf",
    "lyub_table",
    "qbinom",
    "start_expr",
]
