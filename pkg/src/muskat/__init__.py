"""Exact two-phase Hele-Shaw (Muskat) interface dynamics.

Closed-form evolution of a circle, an ellipse, a Neumann oval, and a Cassini
oval driven by sink/source distributions with disjoint supports on both sides
of the interface, plus the numerical machinery that certifies the solutions.
"""

from ._backend import BACKEND as kernel_backend
from .curves import (
    CassiniOval,
    Circle,
    Ellipse,
    Mobility,
    NeumannOval,
    Shape,
    ShapeRates,
)

__all__ = [
    "CassiniOval",
    "Circle",
    "Ellipse",
    "Mobility",
    "NeumannOval",
    "Shape",
    "ShapeRates",
    "kernel_backend",
]

__version__ = "0.1.0"
