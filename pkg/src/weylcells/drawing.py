"""Rank-2 pictures of arrangements, alcoves and cells.

Renders the hyperplanes of an arrangement together with the alcoves of
a ball, optionally coloured by stable cell class, into an SVG file.
The projection is the orthonormal embedding of the plane spanned by
the two fundamental coweights, with the base alcove at the centre of a
fixed 1000 x 1000 view box.  Output is deterministic byte for byte:
the figure carries no fonts, no date stamp and a fixed hash salt.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from matplotlib import rc_context
from matplotlib.backends.backend_svg import FigureCanvasSVG
from matplotlib.figure import Figure
from matplotlib.patches import Polygon

from .arrangement import ArrangementSpec
from .alcoves import Ball
from .geometry import alcove_vertices, apply_map, barycenter, word_map
from .kl import CellDecomposition
from .rootsystem import RootSystem

# 20 well separated fill colours, fixed here so pictures never depend
# on matplotlib's default cycle.
_PALETTE = [
    "#1f77b4", "#aec7e8", "#ff7f0e", "#ffbb78", "#2ca02c",
    "#98df8a", "#d62728", "#ff9896", "#9467bd", "#c5b0d5",
    "#8c564b", "#c49c94", "#e377c2", "#f7b6d2", "#7f7f7f",
    "#c7c7c7", "#bcbd22", "#dbdb8d", "#17becf", "#9edae5",
]


@dataclass(frozen=True)
class FigureSummary:
    """What went into a rendered picture."""

    lines_drawn: int
    alcoves_drawn: int
    coloured_alcoves: int
    out_path: str


def _embedding(rs: RootSystem) -> Tuple[Tuple[float, float], Tuple[float, float]]:
    """Rows of E such that x = E v is an orthonormal picture of v.

    v lives in fundamental coweight coordinates, whose Gram matrix is
    the inverse of the simple-root Gram matrix; E is its Cholesky
    factor transposed, so that E^T E reproduces the Gram matrix.
    """
    g = rs.simple_gram
    det = g[0][0] * g[1][1] - g[0][1] * g[1][0]
    w00 = g[1][1] / det
    w01 = -g[0][1] / det
    w11 = g[0][0] / det
    l00 = math.sqrt(float(w00))
    l10 = float(w01) / l00
    l11 = math.sqrt(float(w11) - l10 * l10)
    # W = L L^T with L lower triangular; x = L^T v.
    return ((l00, l10), (0.0, l11))


def _embed(e, v: Sequence[Fraction]) -> Tuple[float, float]:
    x, y = float(v[0]), float(v[1])
    return (e[0][0] * x + e[0][1] * y, e[1][0] * x + e[1][1] * y)


def _line_normal(e, coeffs: Sequence[int]) -> Tuple[float, float]:
    """Euclidean normal of the line <coeffs, v> = k.

    The pairing is coeffs . v in coweight coordinates, so the normal
    in picture coordinates is the solve of L n = coeffs.
    """
    c0, c1 = float(coeffs[0]), float(coeffs[1])
    l00, l10, l11 = e[0][0], e[0][1], e[1][1]
    n0 = c0 / l00
    n1 = (c1 - l10 * n0) / l11
    return (n0, n1)


def draw_arrangement(
    spec: ArrangementSpec,
    ball: Ball,
    out_path: str,
    decomposition: Optional[CellDecomposition] = None,
) -> FigureSummary:
    """Render the arrangement with the ball's alcoves into an SVG file.

    Every hyperplane of the arrangement is one line; alcoves are drawn
    as outlined triangles, and when a decomposition with stability
    verdicts is given, alcoves of stable classes are filled with one
    colour per class.  Rank must be 2.
    """
    rs = spec.root_system
    if rs.rank != 2:
        raise ValueError("pictures are only supported for rank 2")
    e = _embedding(rs)
    center = _embed(e, barycenter(rs))

    verts0 = alcove_vertices(rs)
    polys: List[List[Tuple[float, float]]] = []
    for elem in ball.elements:
        m = word_map(rs, elem.word)
        polys.append([_embed(e, apply_map(m, v)) for v in verts0])

    extent = 1.0
    for poly in polys:
        for (x, y) in poly:
            extent = max(extent, abs(x - center[0]), abs(y - center[1]))
    for p, coeffs in enumerate(rs.root_coeffs):
        n = _line_normal(e, coeffs)
        nn = math.hypot(*n)
        extent = max(extent, (spec.nu[p] + 1.5) / nn)
    extent *= 1.05

    fills: List[Optional[str]] = [None] * len(ball)
    if decomposition is not None and decomposition.stable is not None:
        stable_classes = [
            c for c in range(len(decomposition.classes)) if decomposition.stable[c]
        ]
        colour_of = {c: _PALETTE[i % len(_PALETTE)] for i, c in enumerate(stable_classes)}
        for i in range(min(len(ball), decomposition.n)):
            c = decomposition.labels[i]
            if c in colour_of:
                fills[i] = colour_of[c]

    with rc_context(
        {"svg.hashsalt": "weylcells", "svg.fonttype": "none", "path.simplify": False}
    ):
        fig = Figure(figsize=(1000 / 72, 1000 / 72), dpi=72)
        FigureCanvasSVG(fig)
        ax = fig.add_axes((0.0, 0.0, 1.0, 1.0))
        ax.set_axis_off()
        ax.set_xlim(center[0] - extent, center[0] + extent)
        ax.set_ylim(center[1] - extent, center[1] + extent)

        coloured = 0
        for poly, fill in zip(polys, fills):
            xs = [p[0] for p in poly]
            ys = [p[1] for p in poly]
            if fill is not None:
                ax.fill(xs, ys, facecolor=fill, edgecolor="none", zorder=1)
                coloured += 1
        for poly in polys:
            xs = [p[0] for p in poly] + [poly[0][0]]
            ys = [p[1] for p in poly] + [poly[0][1]]
            ax.add_patch(
                Polygon(
                    list(zip(xs, ys)),
                    closed=True,
                    facecolor="none",
                    edgecolor="#bbbbbb",
                    linewidth=0.4,
                    zorder=2,
                )
            )

        lines = 0
        reach = 4.0 * (abs(center[0]) + abs(center[1]) + extent)
        for p, coeffs in enumerate(rs.root_coeffs):
            n = _line_normal(e, coeffs)
            nn2 = n[0] * n[0] + n[1] * n[1]
            d = (-n[1], n[0])
            for k in range(-spec.nu[p], spec.nu[p] + 2):
                base = (k * n[0] / nn2, k * n[1] / nn2)
                ax.plot(
                    [base[0] - reach * d[0], base[0] + reach * d[0]],
                    [base[1] - reach * d[1], base[1] + reach * d[1]],
                    color="#222222",
                    linewidth=0.9,
                    zorder=3,
                    solid_capstyle="butt",
                )
                lines += 1

        fig.savefig(out_path, format="svg", metadata={"Date": None})

    return FigureSummary(
        lines_drawn=lines,
        alcoves_drawn=len(polys),
        coloured_alcoves=coloured,
        out_path=out_path,
    )
