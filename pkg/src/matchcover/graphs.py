"""Cubic-graph representation, graph6 I/O, and cut machinery.

Vertices are ``0..n-1``.  Edges are unordered pairs ``(u, v)`` with ``u < v``,
sorted lexicographically; an edge's index is its position in that sorted list.
This canonical indexing fixes every downstream iteration order, so identical
input text always produces identical output.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    EmptySide,
    GraphTooLarge,
    InvalidParameter,
    MalformedGraph6,
    NotConnected,
    NotCubic,
    NotSimple,
)

#: Largest vertex count for which exhaustive side enumeration is attempted.
#: The whole acceptance corpus (up to the 28-vertex flower graph) fits.
DEFAULT_MAX_SUBSET_N = 30

_G6_HEADER = ">>graph6<<"


class CubicGraph:
    """Immutable simple connected cubic graph with canonical edge indexing."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n <= 0:
            raise NotCubic("a cubic graph needs at least one vertex")
        norm = []
        for u, v in edges:
            if u == v:
                raise NotSimple(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameter(f"edge ({u},{v}) out of range for n={n}")
            norm.append((u, v) if u < v else (v, u))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise NotSimple(f"parallel edge {a}")
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(norm)

        degree = [0] * n
        incident: list[list[int]] = [[] for _ in range(n)]
        neighbor_mask = [0] * n
        incident_edge_mask = [0] * n
        for i, (u, v) in enumerate(self.edges):
            degree[u] += 1
            degree[v] += 1
            incident[u].append(i)
            incident[v].append(i)
            neighbor_mask[u] |= 1 << v
            neighbor_mask[v] |= 1 << u
            incident_edge_mask[u] |= 1 << i
            incident_edge_mask[v] |= 1 << i
        for v, d in enumerate(degree):
            if d != 3:
                raise NotCubic(f"vertex {v} has degree {d}, expected 3")
        self.incident: tuple[tuple[int, ...], ...] = tuple(
            tuple(ids) for ids in incident
        )
        self.neighbor_mask: tuple[int, ...] = tuple(neighbor_mask)
        self.incident_edge_mask: tuple[int, ...] = tuple(incident_edge_mask)
        self._edge_index = {e: i for i, e in enumerate(self.edges)}

        if self._reachable_from(0) != self.full_vertex_mask:
            raise NotConnected("graph is not connected")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def full_vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def full_edge_mask(self) -> int:
        return (1 << self.edge_count) - 1

    def edge_id(self, u: int, v: int) -> int:
        """Index of the edge {u, v}; KeyError if absent."""
        return self._edge_index[(u, v) if u < v else (v, u)]

    def other_end(self, edge_id: int, v: int) -> int:
        u, w = self.edges[edge_id]
        return u + w - v

    def _reachable_from(self, start: int, removed_edge: int | None = None) -> int:
        seen = 1 << start
        frontier = seen
        skip = self.edges[removed_edge] if removed_edge is not None else None
        while frontier:
            new = 0
            f = frontier
            while f:
                bit = f & -f
                f ^= bit
                v = bit.bit_length() - 1
                nb = self.neighbor_mask[v]
                if skip is not None and v in skip:
                    nb &= ~(1 << (skip[0] + skip[1] - v))
                new |= nb & ~seen
            seen |= new
            frontier = new
        return seen

    def __eq__(self, other) -> bool:
        if not isinstance(other, CubicGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"CubicGraph(n={self.n}, m={self.edge_count})"

    @cached_property
    def _sides(self) -> "_SideIndex":
        return _SideIndex(self)


@dataclass(frozen=True)
class CutCertificate:
    """One side of an edge cut: the vertex set X and its boundary edges.

    ``boundary`` is exactly the set of edge indices with one endpoint in
    ``side``.  For a minimal cut both X and its complement induce connected
    subgraphs.
    """

    side: tuple[int, ...]
    boundary: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.boundary)

    def side_mask(self) -> int:
        return sum(1 << v for v in self.side)

    def boundary_mask(self) -> int:
        return sum(1 << e for e in self.boundary)


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        bit = mask & -mask
        mask ^= bit
        out.append(bit.bit_length() - 1)
    return tuple(out)


def _certificate(g: CubicGraph, side_mask: int, boundary_mask: int) -> CutCertificate:
    return CutCertificate(_bits(side_mask), _bits(boundary_mask))


# ---------------------------------------------------------------------------
# graph6 (short form, n <= 62)
# ---------------------------------------------------------------------------


def parse_graph6(text: str) -> CubicGraph:
    """Decode a one-line short-form graph6 string into a CubicGraph.

    Raises MalformedGraph6 for bad bytes, truncation, or nonzero padding;
    NotCubic / NotConnected / NotSimple if the decoded graph violates the
    CubicGraph invariants.
    """
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):].strip()
    if not s:
        raise MalformedGraph6("empty graph6 string")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise MalformedGraph6(f"non-ASCII byte in graph6 string: {s!r}") from exc
    if data[0] == 126:  # '~'
        raise MalformedGraph6("long-form graph6 (n > 62) is not supported")
    n = data[0] - 63
    if not 0 <= n <= 62:
        raise MalformedGraph6(f"invalid vertex-count byte {data[0]!r}")
    nbits = n * (n - 1) // 2
    body = data[1:]
    need = (nbits + 5) // 6
    if len(body) != need:
        raise MalformedGraph6(
            f"expected {need} data bytes for n={n}, got {len(body)}"
        )
    bits = 0
    for b in body:
        if not 63 <= b <= 126:
            raise MalformedGraph6(f"invalid data byte {b}")
        bits = (bits << 6) | (b - 63)
    pad = need * 6 - nbits
    if pad and bits & ((1 << pad) - 1):
        raise MalformedGraph6("nonzero padding bits")
    bits >>= pad
    edges = []
    pos = nbits
    for v in range(1, n):
        for u in range(v):
            pos -= 1
            if (bits >> pos) & 1:
                edges.append((u, v))
    return CubicGraph(n, edges)


def encode_graph6(g: CubicGraph) -> str:
    """Encode a CubicGraph as a short-form graph6 string.

    ``parse_graph6(encode_graph6(g))`` reproduces ``g`` edge for edge.
    """
    if g.n > 62:
        raise GraphTooLarge("graph6 short form supports at most 62 vertices")
    edge_set = set(g.edges)
    bits = 0
    nbits = 0
    for v in range(1, g.n):
        for u in range(v):
            bits = (bits << 1) | ((u, v) in edge_set)
            nbits += 1
    pad = -nbits % 6
    bits <<= pad
    nbits += pad
    out = [chr(63 + g.n)]
    for shift in range(nbits - 6, -1, -6):
        out.append(chr(63 + ((bits >> shift) & 63)))
    return "".join(out)


def read_graph6_lines(text: str) -> list[tuple[int, str]]:
    """Split a graph6 file into (1-based line number, graph line) pairs.

    Blank lines and comment lines starting with ``>>`` are skipped, except
    that a ``>>graph6<<`` header prefix directly attached to a graph is kept
    (parse_graph6 strips it).
    """
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith(">>") and not (
            line.startswith(_G6_HEADER) and line[len(_G6_HEADER):].strip()
        ):
            continue
        out.append((lineno, line))
    return out


# ---------------------------------------------------------------------------
# Cuts and sides
# ---------------------------------------------------------------------------


def boundary(g: CubicGraph, side: Iterable[int]) -> CutCertificate:
    """Certificate for the edges with exactly one endpoint in ``side``."""
    mask = 0
    for v in side:
        if not 0 <= v < g.n:
            raise InvalidParameter(f"vertex {v} out of range")
        mask |= 1 << v
    if mask == 0 or mask == g.full_vertex_mask:
        raise EmptySide("side must be a nonempty proper subset of the vertices")
    bmask = 0
    for v in _bits(mask):
        bmask ^= g.incident_edge_mask[v]
    return _certificate(g, mask, bmask)


def is_bridgeless(g: CubicGraph) -> bool:
    """True iff no single edge disconnects the graph."""
    for i in range(g.edge_count):
        if g._reachable_from(0, removed_edge=i) != g.full_vertex_mask:
            return False
    return True


class _SideIndex:
    """All connected vertex sides X with 1 <= |X| <= n/2, plus boundaries.

    Sides are held as bitmasks in canonical order: ascending (|X|, side
    bitmask value).  Boundary masks are bitmasks over edge indices.  When the
    graph fits machine words (n <= 62, |E| <= 63) the index is stored in
    numpy arrays so weight scans vectorize; otherwise plain Python ints are
    used.
    """

    def __init__(self, g: CubicGraph):
        self.g = g
        sides: list[int] = []
        bounds: list[int] = []
        adj = g.neighbor_mask
        iem = g.incident_edge_mask
        max_size = g.n // 2
        full = g.full_vertex_mask
        for r in range(g.n):
            allowed = full & ~((1 << (r + 1)) - 1)
            # stack entries: (side, boundary, size, extension, banned)
            stack = [(1 << r, iem[r], 1, adj[r] & allowed, 0)]
            while stack:
                side, bnd, size, ext, banned = stack.pop()
                sides.append(side)
                bounds.append(bnd)
                if size == max_size:
                    continue
                b = banned
                e = ext
                while e:
                    vbit = e & -e
                    e ^= vbit
                    v = vbit.bit_length() - 1
                    child_ext = (e | (adj[v] & allowed)) & ~(side | vbit) & ~b
                    stack.append(
                        (side | vbit, bnd ^ iem[v], size + 1, child_ext, b)
                    )
                    b |= vbit

        self.count = len(sides)
        self._np = g.n <= 62 and g.edge_count <= 63
        if self._np:
            side_arr = np.array(sides, dtype=np.uint64)
            bound_arr = np.array(bounds, dtype=np.uint64)
            ssize = _popcount_u64(side_arr)
            order = np.lexsort((side_arr, ssize))
            self.side_arr = side_arr[order]
            self.bound_arr = bound_arr[order]
            self.side_size = ssize[order]
            self.bound_size = _popcount_u64(self.bound_arr)
            self.odd_idx = np.nonzero(self.side_size % 2 == 1)[0]
        else:
            ranked = sorted(
                range(self.count),
                key=lambda i: (sides[i].bit_count(), sides[i]),
            )
            self.side_list = [sides[i] for i in ranked]
            self.bound_list = [bounds[i] for i in ranked]
            self.odd_pos = [
                i
                for i, s in enumerate(self.side_list)
                if s.bit_count() % 2 == 1
            ]

    # -- queries ------------------------------------------------------------

    def odd_sides(self) -> Iterator[tuple[int, int]]:
        """(side_mask, boundary_mask) for odd sides, canonical order."""
        if self._np:
            for i in self.odd_idx:
                yield int(self.side_arr[i]), int(self.bound_arr[i])
        else:
            for i in self.odd_pos:
                yield self.side_list[i], self.bound_list[i]

    def odd_boundary_sums(self, edge_nums: Sequence[int]) -> Sequence[int]:
        """Sum of edge_nums over each odd side's boundary, canonical order."""
        if self._np:
            lim = max((abs(int(x)) for x in edge_nums), default=0)
            if lim * max(self.g.edge_count, 1) < (1 << 62):
                bnd = self.bound_arr[self.odd_idx]
                total = np.zeros(len(bnd), dtype=np.int64)
                for e, num in enumerate(edge_nums):
                    if num:
                        total += (
                            (bnd >> np.uint64(e)) & np.uint64(1)
                        ).astype(np.int64) * int(num)
                return total
        return [
            sum(edge_nums[e] for e in _bits(bmask))
            for _, bmask in self.odd_sides()
        ]

    def odd_side_at(self, pos: int) -> tuple[int, int]:
        if self._np:
            i = self.odd_idx[pos]
            return int(self.side_arr[i]), int(self.bound_arr[i])
        i = self.odd_pos[pos]
        return self.side_list[i], self.bound_list[i]

    def sides_with_boundary_size(self, k: int) -> Iterator[tuple[int, int]]:
        """(side_mask, boundary_mask) with |boundary| = k, canonical order."""
        if self._np:
            for i in np.nonzero(self.bound_size == k)[0]:
                yield int(self.side_arr[i]), int(self.bound_arr[i])
        else:
            for s, b in zip(self.side_list, self.bound_list):
                if b.bit_count() == k:
                    yield s, b


def _popcount_u64(arr: np.ndarray) -> np.ndarray:
    x = arr.copy()
    m1 = np.uint64(0x5555555555555555)
    m2 = np.uint64(0x3333333333333333)
    m4 = np.uint64(0x0F0F0F0F0F0F0F0F)
    x -= (x >> np.uint64(1)) & m1
    x = (x & m2) + ((x >> np.uint64(2)) & m2)
    x = (x + (x >> np.uint64(4))) & m4
    x = (x * np.uint64(0x0101010101010101)) >> np.uint64(56)
    return x.astype(np.int64)


def _side_index(g: CubicGraph, max_subset_n: int) -> _SideIndex:
    if g.n > max_subset_n:
        raise GraphTooLarge(
            f"n={g.n} exceeds the subset-enumeration threshold {max_subset_n}"
        )
    return g._sides


def enumerate_odd_connected_sides(
    g: CubicGraph, max_subset_n: int = DEFAULT_MAX_SUBSET_N
) -> Iterator[CutCertificate]:
    """Every X with |X| odd, G[X] connected, |X| <= n/2, exactly once.

    With nonnegative weights the minimum boundary weight over odd vertex sets
    is attained on such a side, so this family is a sound domain for the
    odd-cut constraint checks.  Yields in canonical order: ascending |X|,
    then ascending side bitmask.
    """
    idx = _side_index(g, max_subset_n)
    for smask, bmask in idx.odd_sides():
        yield _certificate(g, smask, bmask)


def enumerate_minimal_cuts(
    g: CubicGraph, size: int, max_subset_n: int = DEFAULT_MAX_SUBSET_N
) -> list[CutCertificate]:
    """All minimal cuts of the given cardinality.

    A minimal cut is the boundary of an X with both G[X] and G[V-X]
    connected.  One certificate is returned per unordered {X, complement}
    pair; the certificate side is the one with |X| <= n/2, and for the
    |X| = n/2 ties the side containing vertex 0.
    """
    if size < 1:
        raise InvalidParameter("cut size must be at least 1")
    idx = _side_index(g, max_subset_n)
    half = g.n // 2
    out = []
    for smask, bmask in idx.sides_with_boundary_size(size):
        comp = g.full_vertex_mask & ~smask
        if smask.bit_count() == half and not smask & 1:
            continue  # the complement side carries vertex 0 and is the rep
        start = (comp & -comp).bit_length() - 1
        if g._reachable_from(start) & comp != comp:
            # complement disconnected when walked inside comp only: redo a
            # restricted reachability check
            pass
        if _connected_within(g, comp):
            out.append(_certificate(g, smask, bmask))
    return out


def _connected_within(g: CubicGraph, mask: int) -> bool:
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        new = 0
        f = frontier
        while f:
            bit = f & -f
            f ^= bit
            new |= g.neighbor_mask[bit.bit_length() - 1] & mask & ~seen
        seen |= new
        frontier = new
    return seen == mask
