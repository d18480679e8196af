"""Rooted planar maps as rotation systems.

A map on m edges is a pair of permutations of the darts 1..2m: an edge
pairing (a fixed-point-free involution) and the counterclockwise successor
around each vertex.  Faces are the orbits of successor-after-pairing;
validity means connectivity plus the Euler relation, which pins the sphere.
Rooted isomorphism is decided by a canonical code anchored at the root
dart, and duality exchanges vertices with faces using the root convention
that makes it an involution on rooted maps.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class RootedMap:
    """Rotation system with darts 1..2m; index 0 of each tuple is unused."""

    alpha: tuple[int, ...]
    sigma: tuple[int, ...]
    root: int

    @property
    def dart_count(self) -> int:
        return len(self.alpha) - 1

    @property
    def edge_count(self) -> int:
        return self.dart_count // 2

    def darts(self) -> range:
        return range(1, self.dart_count + 1)


CanonicalMapCode = tuple[int, ...]


def face_permutation(m: RootedMap) -> tuple[int, ...]:
    """Successor-after-pairing; its orbits are the faces."""
    alpha, sigma = m.alpha, m.sigma
    return (0,) + tuple(sigma[alpha[d]] for d in m.darts())


def _orbits(perm: tuple[int, ...]) -> list[list[int]]:
    seen = [False] * len(perm)
    out = []
    for start in range(1, len(perm)):
        if seen[start]:
            continue
        orbit = []
        d = start
        while not seen[d]:
            seen[d] = True
            orbit.append(d)
            d = perm[d]
        out.append(orbit)
    return out


def vertices(m: RootedMap) -> list[list[int]]:
    """Vertices as orbits of the rotation, each a list of darts."""
    return _orbits(m.sigma)


def faces(m: RootedMap) -> list[list[int]]:
    return _orbits(face_permutation(m))


def vertex_labels(m: RootedMap) -> dict[int, int]:
    """Map each dart to a vertex id (position of its orbit)."""
    ids = {}
    for i, orbit in enumerate(vertices(m)):
        for d in orbit:
            ids[d] = i
    return ids


def validate_map(m: RootedMap) -> str | None:
    """Check the rotation-system axioms; return ``None`` when valid."""
    n = m.dart_count
    if n <= 0 or n % 2 == 1:
        return f"dart count {n} is not a positive even number"
    if len(m.sigma) != len(m.alpha):
        return "alpha and sigma disagree on the dart count"
    for perm, name in ((m.alpha, "alpha"), (m.sigma, "sigma")):
        if perm[0] != 0:
            return f"{name} must carry the unused 0 sentinel"
        hit = [False] * (n + 1)
        for d in m.darts():
            image = perm[d]
            if not 1 <= image <= n:
                return f"{name}({d}) = {image} is out of range"
            hit[image] = True
        if not all(hit[1:]):
            return f"{name} is not a permutation"
    for d in m.darts():
        if m.alpha[d] == d:
            return f"alpha fixes dart {d}; edges need two distinct darts"
        if m.alpha[m.alpha[d]] != d:
            return f"alpha is not an involution at dart {d}"
    if not 1 <= m.root <= n:
        return f"root dart {m.root} is out of range"
    reached = {1}
    frontier = [1]
    while frontier:
        d = frontier.pop()
        for nxt in (m.alpha[d], m.sigma[d]):
            if nxt not in reached:
                reached.add(nxt)
                frontier.append(nxt)
    if len(reached) != n:
        return "not connected: the edge pairing and rotation do not reach every dart"
    euler = len(vertices(m)) - m.edge_count + len(faces(m))
    if euler != 2:
        return f"nonplanar: Euler characteristic {euler} instead of 2"
    return None


def is_valid_map(m: RootedMap) -> bool:
    return validate_map(m) is None


# ---------------------------------------------------------------------------
# Non-separability: loopless and free of cut vertices
# ---------------------------------------------------------------------------

def is_nonseparable(m: RootedMap) -> bool:
    ids = vertex_labels(m)
    edges = []
    for d in m.darts():
        e = m.alpha[d]
        if d < e:
            if ids[d] == ids[e]:
                return False  # loop
            edges.append((ids[d], ids[e]))
    vertex_count = len(vertices(m))
    if vertex_count <= 2:
        return True
    return not _has_cut_vertex(vertex_count, edges)


def _has_cut_vertex(vertex_count: int, edges: list[tuple[int, int]]) -> bool:
    """Articulation-point test on a connected multigraph (parallel edges kept)."""
    incidence: list[list[tuple[int, int]]] = [[] for _ in range(vertex_count)]
    for index, (u, v) in enumerate(edges):
        incidence[u].append((v, index))
        incidence[v].append((u, index))
    discovery = [-1] * vertex_count
    low = [0] * vertex_count
    counter = 0
    root_children = 0
    # Iterative depth-first search from vertex 0, skipping only the tree edge.
    stack: list[tuple[int, int, Iterator[tuple[int, int]]]] = [
        (0, -1, iter(incidence[0]))
    ]
    discovery[0] = low[0] = counter
    counter += 1
    while stack:
        vertex, via_edge, neighbors = stack[-1]
        advanced = False
        for neighbor, edge_index in neighbors:
            if edge_index == via_edge:
                continue
            if discovery[neighbor] == -1:
                discovery[neighbor] = low[neighbor] = counter
                counter += 1
                if vertex == 0:
                    root_children += 1
                stack.append((neighbor, edge_index, iter(incidence[neighbor])))
                advanced = True
                break
            low[vertex] = min(low[vertex], discovery[neighbor])
        if advanced:
            continue
        stack.pop()
        if stack:
            parent = stack[-1][0]
            low[parent] = min(low[parent], low[vertex])
            if parent != 0 and low[vertex] >= discovery[parent]:
                return True
    return root_children > 1


# ---------------------------------------------------------------------------
# Duality
# ---------------------------------------------------------------------------

def dual(m: RootedMap) -> RootedMap:
    """The dual rooted map.

    Vertices of the dual are the faces: its rotation is the inverse of the
    face permutation, which is counterclockwise as seen by the dual.  The
    dual root is the next dart after the crossing edge in that rotation;
    this choice makes taking the dual twice give back the rooted map.
    """
    if m.edge_count < 2:
        raise ValueError("degenerate dual: the one-edge map dualizes to a loop")
    phi = face_permutation(m)
    sigma_star = [0] * (m.dart_count + 1)
    for d in m.darts():
        sigma_star[phi[d]] = d
    return RootedMap(m.alpha, tuple(sigma_star), sigma_star[m.root])


def canonical_code(m: RootedMap) -> CanonicalMapCode:
    """Root-anchored relabeling code; equal codes mean rooted-isomorphic.

    Darts are discovered from the root by following the edge pairing and the
    rotation in a fixed order; the code lists both images of every dart in
    discovery numbering.
    """
    index = {m.root: 1}
    order = [m.root]
    for d in order:
        for nxt in (m.alpha[d], m.sigma[d]):
            if nxt not in index:
                index[nxt] = len(order) + 1
                order.append(nxt)
    return tuple(x for d in order for x in (index[m.alpha[d]], index[m.sigma[d]]))


def is_self_dual(m: RootedMap) -> bool:
    """Whether the map is rooted-isomorphic to its dual (needs >= 2 edges)."""
    return canonical_code(m) == canonical_code(dual(m))


def _orbit_length(perm: tuple[int, ...], start: int) -> int:
    length = 0
    d = start
    while True:
        length += 1
        d = perm[d]
        if d == start:
            return length


def root_vertex_degree(m: RootedMap) -> int:
    return _orbit_length(m.sigma, m.root)


def root_face_degree(m: RootedMap) -> int:
    return _orbit_length(face_permutation(m), m.root)


def relabel(m: RootedMap, perm: dict[int, int]) -> RootedMap:
    """Rename darts by a bijection; the result is rooted-isomorphic to ``m``."""
    n = m.dart_count
    alpha = [0] * (n + 1)
    sigma = [0] * (n + 1)
    for d in m.darts():
        alpha[perm[d]] = perm[m.alpha[d]]
        sigma[perm[d]] = perm[m.sigma[d]]
    return RootedMap(tuple(alpha), tuple(sigma), perm[m.root])


# ---------------------------------------------------------------------------
# File format
# ---------------------------------------------------------------------------

def map_to_json(m: RootedMap) -> str:
    """Serialize as an object with 1-based permutation arrays."""
    return json.dumps(
        {
            "edges": m.edge_count,
            "alpha": list(m.alpha[1:]),
            "sigma": list(m.sigma[1:]),
            "root": m.root,
        }
    )


def map_from_json(text: str) -> RootedMap:
    data = json.loads(text)
    try:
        edges = data["edges"]
        alpha = (0,) + tuple(int(x) for x in data["alpha"])
        sigma = (0,) + tuple(int(x) for x in data["sigma"])
        root = int(data["root"])
    except (KeyError, TypeError) as err:
        raise ValueError(f"malformed map object: {err}") from err
    m = RootedMap(alpha, sigma, root)
    if m.edge_count != edges:
        raise ValueError(
            f"declared edge count {edges} disagrees with {m.edge_count} from alpha"
        )
    report = validate_map(m)
    if report is not None:
        raise ValueError(report)
    return m


def build_map(alpha: Iterable[int], sigma: Iterable[int], root: int) -> RootedMap:
    """Construct from 1-based permutation sequences (without the sentinel)."""
    return RootedMap((0,) + tuple(alpha), (0,) + tuple(sigma), root)
