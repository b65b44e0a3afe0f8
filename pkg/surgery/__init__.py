"""Algebra and geometry of topological surgery: knot groups, framed surgery
quotients and the Morse-theoretic picture of the surgery process."""

__version__ = "0.1.0"
