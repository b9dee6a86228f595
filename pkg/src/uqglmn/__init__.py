"""PBW normal forms for the quantum superalgebra U_q(gl(M|N))."""

from .qcoeff import QRat, q, qnum, eval_at
from .rootdata import Superdim, Branch, classify, positive_roots
from .pbw import Algebra, Element, E, F, QK
from .render import render_text, render_latex
from .expr import parse, parse_element

__all__ = [
    "QRat",
    "q",
    "qnum",
    "eval_at",
    "Superdim",
    "Branch",
    "classify",
    "positive_roots",
    "Algebra",
    "Element",
    "E",
    "F",
    "QK",
    "render_text",
    "render_latex",
    "parse",
    "parse_element",
]
