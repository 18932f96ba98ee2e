"""Uniform structured grid over the parameter rectangle and its difference operators.

Fields live on nodes as arrays of shape ``(n1, n2)`` indexed ``[i, j]`` with
``i`` along xi1 and ``j`` along xi2.  Axes are independently periodic or
bounded; on bounded axes the nodes include both endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

# Second-order central stencils used by the interior assembly.  Each entry is
# a list of ((di, dj), weight-exponent-tag) pairs; weights are filled per grid.
_STENCIL_OFFSETS = {
    "I": [(0, 0)],
    "D1": [(1, 0), (-1, 0)],
    "D2": [(0, 1), (0, -1)],
    "D11": [(1, 0), (0, 0), (-1, 0)],
    "D22": [(0, 1), (0, 0), (0, -1)],
    "D12": [(1, 1), (1, -1), (-1, 1), (-1, -1)],
}


@dataclass(frozen=True)
class Grid2D:
    """Uniform tensor grid on D = [a1, b1] x [a2, b2]."""

    domain: tuple
    n1: int
    n2: int
    periodic: tuple = (False, False)
    xi1: np.ndarray = field(init=False, repr=False)
    xi2: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        (a1, b1), (a2, b2) = self.domain
        if self.n1 < 4 or self.n2 < 4:
            raise ValueError("grid must be at least 4x4")
        if self.periodic[0]:
            x1 = a1 + (b1 - a1) * np.arange(self.n1) / self.n1
        else:
            x1 = np.linspace(a1, b1, self.n1)
        if self.periodic[1]:
            x2 = a2 + (b2 - a2) * np.arange(self.n2) / self.n2
        else:
            x2 = np.linspace(a2, b2, self.n2)
        object.__setattr__(self, "xi1", x1)
        object.__setattr__(self, "xi2", x2)

    @property
    def d1(self):
        (a1, b1), _ = self.domain
        return (b1 - a1) / (self.n1 if self.periodic[0] else self.n1 - 1)

    @property
    def d2(self):
        _, (a2, b2) = self.domain
        return (b2 - a2) / (self.n2 if self.periodic[1] else self.n2 - 1)

    @property
    def shape(self):
        return (self.n1, self.n2)

    @property
    def size(self):
        return self.n1 * self.n2

    def meshgrid(self):
        return np.meshgrid(self.xi1, self.xi2, indexing="ij")

    def interior_mask(self):
        """True at nodes that carry PDE rows (everything except Dirichlet edges)."""
        m = np.ones(self.shape, dtype=bool)
        if not self.periodic[0]:
            m[0, :] = False
            m[-1, :] = False
        if not self.periodic[1]:
            m[:, 0] = False
            m[:, -1] = False
        return m

    def boundary_mask(self):
        return ~self.interior_mask()

    def node_index(self):
        return np.arange(self.size).reshape(self.shape)

    def shifted_index(self, di, dj):
        """Flat node index of the (di, dj) neighbour of every node.

        On periodic axes the shift wraps; on bounded axes it clamps, which is
        only valid for rows restricted to the interior (the clamped entries
        are never referenced there for |di|,|dj| <= 1).
        """
        i = np.arange(self.n1)[:, None] + di
        j = np.arange(self.n2)[None, :] + dj
        if self.periodic[0]:
            i = i % self.n1
        else:
            i = np.clip(i, 0, self.n1 - 1)
        if self.periodic[1]:
            j = j % self.n2
        else:
            j = np.clip(j, 0, self.n2 - 1)
        return (i * self.n2 + j).reshape(self.shape)

    def stencil(self, op):
        """Return [(offset, weight), ...] for a named second-order operator."""
        d1, d2 = self.d1, self.d2
        if op == "I":
            return [((0, 0), 1.0)]
        if op == "D1":
            return [((1, 0), 0.5 / d1), ((-1, 0), -0.5 / d1)]
        if op == "D2":
            return [((0, 1), 0.5 / d2), ((0, -1), -0.5 / d2)]
        if op == "D11":
            w = 1.0 / d1**2
            return [((1, 0), w), ((0, 0), -2.0 * w), ((-1, 0), w)]
        if op == "D22":
            w = 1.0 / d2**2
            return [((0, 1), w), ((0, 0), -2.0 * w), ((0, -1), w)]
        if op == "D12":
            w = 0.25 / (d1 * d2)
            return [((1, 1), w), ((1, -1), -w), ((-1, 1), -w), ((-1, -1), w)]
        raise ValueError(f"unknown operator {op!r}")

    # -- pointwise application (used by residual evaluation and diagnostics) --

    def _shift(self, f, di, dj):
        g = f
        if di:
            if self.periodic[0]:
                g = np.roll(g, -di, axis=0)
            else:
                g = np.empty_like(g)
                if di > 0:
                    g[:-di, :] = f[di:, :]
                    g[-di:, :] = f[-1:, :]
                else:
                    g[-di:, :] = f[:di, :]
                    g[:-di, :] = f[:1, :]
        if dj:
            h = g
            if self.periodic[1]:
                g = np.roll(h, -dj, axis=1)
            else:
                g = np.empty_like(h)
                if dj > 0:
                    g[:, :-dj] = h[:, dj:]
                    g[:, -dj:] = h[:, -1:]
                else:
                    g[:, -dj:] = h[:, :dj]
                    g[:, :-dj] = h[:, :1]
        return g

    def apply(self, op, f):
        """Apply a named operator to a nodal field (second-order central).

        On bounded axes the result is only meaningful away from the edge
        nodes; callers evaluating residuals restrict to the interior mask.
        """
        out = np.zeros_like(f)
        for (di, dj), w in self.stencil(op):
            out += w * self._shift(f, di, dj)
        return out

    def apply4(self, op, f):
        """Fourth-order central version of a named operator (periodic axes only)."""
        if op == "I":
            return f.copy()
        if not (self.periodic[0] and self.periodic[1]):
            raise ValueError("fourth-order operators require a fully periodic grid")

        def d_axis(g, axis, d):
            return (-np.roll(g, -2, axis) + 8 * np.roll(g, -1, axis)
                    - 8 * np.roll(g, 1, axis) + np.roll(g, 2, axis)) / (12 * d)

        def dd_axis(g, axis, d):
            return (-np.roll(g, -2, axis) + 16 * np.roll(g, -1, axis) - 30 * g
                    + 16 * np.roll(g, 1, axis) - np.roll(g, 2, axis)) / (12 * d**2)

        if op == "D1":
            return d_axis(f, 0, self.d1)
        if op == "D2":
            return d_axis(f, 1, self.d2)
        if op == "D11":
            return dd_axis(f, 0, self.d1)
        if op == "D22":
            return dd_axis(f, 1, self.d2)
        if op == "D12":
            return d_axis(d_axis(f, 0, self.d1), 1, self.d2)
        raise ValueError(f"unknown operator {op!r}")
