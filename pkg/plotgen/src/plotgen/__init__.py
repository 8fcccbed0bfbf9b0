"""Figure rendering for covering-bound curve CSVs.

Consumes only the CSV contract (header `rho,f,lower,naive_upper,main_upper`)
and never recomputes any mathematics, so it stays independently testable from
whatever produced the curve.
"""

from .render import CurvePoint, MalformedCurve, PlotSpec, load_curve, render

__all__ = ["CurvePoint", "MalformedCurve", "PlotSpec", "load_curve", "render"]

__version__ = "0.1.0"
