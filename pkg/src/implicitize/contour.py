"""Marching-squares extraction of an implicit curve's zero set."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .implicit import eval_implicit

__all__ = ["ContourMesh", "marching_squares", "padded_bbox"]

# corner order: 0 = (i, j), 1 = (i+1, j), 2 = (i+1, j+1), 3 = (i, j+1)
# edge e joins corners e and (e + 1) % 4
_SEGMENTS = {
    0b0001: [(3, 0)],
    0b0010: [(0, 1)],
    0b0011: [(3, 1)],
    0b0100: [(1, 2)],
    0b0110: [(0, 2)],
    0b0111: [(3, 2)],
    0b1000: [(2, 3)],
    0b1001: [(2, 0)],
    0b1011: [(2, 1)],
    0b1100: [(1, 3)],
    0b1101: [(1, 0)],
    0b1110: [(0, 3)],
}
# saddles: split by the sign at the cell center
_SADDLE = {
    0b0101: {True: [(3, 2), (1, 0)], False: [(3, 0), (1, 2)]},
    0b1010: {True: [(0, 3), (2, 1)], False: [(0, 1), (2, 3)]},
}


def padded_bbox(points, pad: float = 0.1):
    """Bounding box of ``points`` grown by ``pad`` times its size on every side."""
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    size = hi - lo
    size = np.where(size > 0, size, max(float(size.max()), 1.0))
    return tuple(lo - pad * size) + tuple(hi + pad * size)


@dataclass(frozen=True)
class ContourMesh:
    resolution: int
    bbox: tuple
    segments: np.ndarray  # (S, 2, 2)
    edge_keys: tuple = ()  # per segment, the grid edges its endpoints lie on

    @property
    def cell_diagonal(self) -> float:
        x0, y0, x1, y1 = self.bbox
        return float(np.hypot((x1 - x0) / self.resolution, (y1 - y0) / self.resolution))

    def polylines(self) -> list:
        """Chain segments sharing an edge crossing into polylines (one per component piece)."""
        adj = {}
        for s, (ka, kb) in enumerate(self.edge_keys):
            adj.setdefault(ka, []).append((s, 0))
            adj.setdefault(kb, []).append((s, 1))
        used = np.zeros(len(self.edge_keys), dtype=bool)

        def walk(s, end):
            # follow from segment s leaving through endpoint `end`
            chain = []
            while True:
                key = self.edge_keys[s][end]
                chain.append(self.segments[s, end])
                nxt = [(t, e) for t, e in adj[key] if not used[t]]
                if not nxt:
                    return chain
                s, e = nxt[0]
                used[s] = True
                end = 1 - e

        lines = []
        # open chains first start at dangling ends, so each comes out whole
        order = sorted(range(len(self.edge_keys)), key=lambda s: min(len(adj[k]) for k in self.edge_keys[s]))
        for s in order:
            if used[s]:
                continue
            used[s] = True
            forward = walk(s, 1)
            backward = walk(s, 0)
            pts = backward[::-1] + forward
            lines.append(np.array(pts))
        return lines


def marching_squares(curve, bbox, resolution: int = 400) -> ContourMesh:
    """Zero set of ``curve`` on a ``resolution x resolution`` cell grid over ``bbox``.

    ``bbox`` is ``(xmin, ymin, xmax, ymax)``.  Crossings are placed by linear
    interpolation on the cell edges; saddle cells use the sign at the center.
    """
    if int(resolution) != resolution or resolution < 2:
        raise ValueError(f"resolution must be an integer >= 2, got {resolution!r}")
    x0, y0, x1, y1 = (float(v) for v in bbox)
    if not (x1 > x0 and y1 > y0):
        raise ValueError(f"degenerate bounding box {bbox!r}")
    r = int(resolution)
    xs = np.linspace(x0, x1, r + 1)
    ys = np.linspace(y0, y1, r + 1)
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    F = eval_implicit(curve, X, Y)
    pos = F > 0

    corner = np.array([(0, 0), (1, 0), (1, 1), (0, 1)])
    code = (
        pos[:-1, :-1].astype(int)
        | pos[1:, :-1].astype(int) << 1
        | pos[1:, 1:].astype(int) << 2
        | pos[:-1, 1:].astype(int) << 3
    )

    def crossing(i, j, edge):
        (ai, aj), (bi, bj) = corner[edge] + (i, j), corner[(edge + 1) % 4] + (i, j)
        fa, fb = F[ai, aj], F[bi, bj]
        t = fa / (fa - fb)
        point = (1 - t) * np.array([xs[ai], ys[aj]]) + t * np.array([xs[bi], ys[bj]])
        key = (min(ai, bi), min(aj, bj), "h" if aj == bj else "v")
        return point, key

    segs, keys = [], []
    ii, jj = np.nonzero((code != 0) & (code != 15))
    for i, j in zip(ii, jj):
        c = int(code[i, j])
        if c in _SADDLE:
            center = eval_implicit(curve, 0.5 * (xs[i] + xs[i + 1]), 0.5 * (ys[j] + ys[j + 1]))
            pairs = _SADDLE[c][bool(center > 0)]
        else:
            pairs = _SEGMENTS[c]
        for ea, eb in pairs:
            pa, ka = crossing(i, j, ea)
            pb, kb = crossing(i, j, eb)
            segs.append((pa, pb))
            keys.append((ka, kb))
    segments = np.array(segs, dtype=float).reshape(-1, 2, 2)
    return ContourMesh(r, (x0, y0, x1, y1), segments, tuple(keys))
