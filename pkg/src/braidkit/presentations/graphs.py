"""Planar graphs with rotation systems and Sergiescu-style presentations.

Rotation lists are clockwise.  Faces are traced by darts: arriving at a
vertex along edge e, leave along the clockwise successor of e.  Bounded
faces are then traversed anticlockwise (interior on the left), and a
uni-valent vertex sends a dart straight back along its edge, which gives
the doubled edges of pseudocycles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Any, Hashable, Iterable, Mapping, Sequence

import networkx as nx
import yaml

from ..braid import BraidWord
from ..inverse import PartialBraid, PartialInjection, generator_pb
from ..singular import SBandWord, SingularWord, classical_to_band
from .core import (
    Assignment,
    Generator,
    Presentation,
    Relation,
    chain,
    rel,
    word,
)
from .models import braid_model, injection_model, partial_braid_model, singular_model

Vertex = Hashable
Dart = tuple[str, Vertex, Vertex]  # (edge, from, to)

VARIANTS = ("plane", "annulus", "sphere", "singular-plane", "singular-annulus", "inverse-plane")


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class PlanarGraph:
    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[str, Vertex, Vertex], ...]
    rotation: Mapping[Vertex, tuple[str, ...]]
    outer_face: tuple[str, ...] = ()
    distinguished: tuple[Vertex, ...] = ()
    orientation: Mapping[str, tuple[Vertex, Vertex]] = field(default_factory=dict)
    upper: frozenset[str] = frozenset()  # arcs drawn above the line (arc diagrams only)

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((str(e), u, v) for e, u, v in self.edges))
        object.__setattr__(self, "rotation", {v: tuple(str(e) for e in es) for v, es in self.rotation.items()})
        object.__setattr__(self, "outer_face", tuple(str(e) for e in self.outer_face))
        object.__setattr__(self, "upper", frozenset(str(e) for e in self.upper))
        self.validate()

    # -- structure -------------------------------------------------------------

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e for e, _, _ in self.edges)

    def ends(self, e: str) -> tuple[Vertex, Vertex]:
        for f, u, v in self.edges:
            if f == e:
                return u, v
        raise KeyError(e)

    def other(self, e: str, v: Vertex) -> Vertex:
        a, b = self.ends(e)
        return b if v == a else a

    def incident(self, v: Vertex) -> tuple[str, ...]:
        return self.rotation[v]

    def nx_graph(self, edges: Iterable[str] | None = None) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        keep = set(self.edge_ids if edges is None else edges)
        for e, u, v in self.edges:
            if e in keep:
                g.add_edge(u, v, id=e)
        return g

    def validate(self) -> None:
        ids = self.edge_ids
        if len(set(ids)) != len(ids):
            raise GraphError("duplicate edge ids")
        vs = set(self.vertices)
        pairs = set()
        for e, u, v in self.edges:
            if u not in vs or v not in vs:
                raise GraphError(f"edge {e} has an unknown endpoint")
            if u == v:
                raise GraphError(f"edge {e} is a loop")
            if frozenset((u, v)) in pairs:
                raise GraphError(f"edge {e} duplicates another edge")
            pairs.add(frozenset((u, v)))
        for v in self.vertices:
            expected = sorted(e for e, a, b in self.edges if v in (a, b))
            if sorted(self.rotation.get(v, ())) != expected:
                raise GraphError(f"rotation at {v!r} does not list its incident edges")
        if self.vertices and not nx.is_connected(self.nx_graph()):
            raise GraphError("graph is not connected")
        faces = self.faces()
        if self.edges and len(self.vertices) - len(self.edges) + len(faces) != 2:
            raise GraphError("rotation system is not planar (Euler characteristic != 2)")
        for d in self.distinguished:
            if d not in vs:
                raise GraphError(f"unknown distinguished vertex {d!r}")
        for e, (t, h) in self.orientation.items():
            if {t, h} != set(self.ends(str(e))):
                raise GraphError(f"orientation of {e} does not match its endpoints")

    # -- faces -----------------------------------------------------------------

    def next_dart(self, dart: Dart) -> Dart:
        e, _, v = dart
        rot = self.rotation[v]
        f = rot[(rot.index(e) + 1) % len(rot)]
        return (f, v, self.other(f, v))

    def faces(self) -> list[tuple[Dart, ...]]:
        seen: set[Dart] = set()
        out = []
        for e, u, v in self.edges:
            for start in ((e, u, v), (e, v, u)):
                if start in seen:
                    continue
                face = []
                d = start
                while d not in seen:
                    seen.add(d)
                    face.append(d)
                    d = self.next_dart(d)
                out.append(tuple(face))
        return out

    def outer(self) -> tuple[Dart, ...]:
        faces = self.faces()
        if len(faces) == 1:
            return faces[0]
        target = self.outer_face
        if not target:
            raise GraphError("graph has bounded faces but no outer face is designated")
        for f in faces:
            seq = [d[0] for d in f]
            if len(seq) == len(target) and any(
                tuple(seq[k:] + seq[:k]) == target for k in range(len(seq))
            ):
                return f
        matches = [f for f in faces if sorted(d[0] for d in f) == sorted(target)]
        if len(matches) != 1:
            raise GraphError("outer face does not match exactly one face")
        return matches[0]

    def bounded_faces(self) -> list[tuple[Dart, ...]]:
        outer = self.outer()
        return [f for f in self.faces() if f != outer]

    # -- variants ----------------------------------------------------------------

    def check_punctured(self) -> Vertex:
        if len(self.distinguished) != 1:
            raise GraphError("annulus variants need exactly one distinguished vertex")
        v = self.distinguished[0]
        rest = self.nx_graph()
        rest.remove_node(v)
        if rest.number_of_nodes() and not nx.is_connected(rest):
            raise GraphError("graph minus the distinguished vertex is disconnected")
        return v

    # -- IO ---------------------------------------------------------------------------

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "vertices": list(self.vertices),
            "edges": [[e, u, v] for e, u, v in self.edges],
            "rotation": {v: list(es) for v, es in self.rotation.items()},
            "outer_face": list(self.outer_face),
        }
        if self.distinguished:
            out["distinguished"] = list(self.distinguished)
        if self.orientation:
            out["orientation"] = {e: list(tv) for e, tv in self.orientation.items()}
        if self.upper:
            out["upper"] = sorted(self.upper)
        return out

    def dump(self) -> str:
        return yaml.safe_dump(self.to_dict(), sort_keys=False, allow_unicode=True)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> PlanarGraph:
        try:
            vertices = tuple(data["vertices"])
            edges = tuple((str(e), u, v) for e, u, v in data["edges"])
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed graph description: {exc}") from None
        if "rotation" in data:
            rotation = {v: tuple(es) for v, es in data["rotation"].items()}
            outer = tuple(data.get("outer_face", ()))
        elif "coordinates" in data:
            coords = {v: tuple(p) for v, p in data["coordinates"].items()}
            return from_coordinates(coords, edges, tuple(data.get("distinguished", ())))
        else:
            return arc_diagram(
                len(vertices), [(e, u, v) for e, u, v in edges], data.get("upper", ()), data.get("distinguished", ())
            )
        orient = {str(e): tuple(tv) for e, tv in data.get("orientation", {}).items()}
        return cls(
            vertices,
            edges,
            rotation,
            outer,
            tuple(data.get("distinguished", ())),
            orient,
            frozenset(data.get("upper", ())),
        )

    @classmethod
    def load(cls, path: str | Path) -> PlanarGraph:
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(yaml.safe_load(fh))


# -- constructors ---------------------------------------------------------------------


def from_coordinates(
    coords: Mapping[Vertex, tuple[float, float]],
    edges: Sequence[tuple[str, Vertex, Vertex]],
    distinguished: Sequence[Vertex] = (),
) -> PlanarGraph:
    """Straight-line embedding: rotation by decreasing angle, outer face by signed area."""
    rotation = {}
    for v in coords:
        inc = [(e, a if b == v else b) for e, a, b in edges if v in (a, b)]
        x0, y0 = coords[v]
        inc.sort(key=lambda item: -math.atan2(coords[item[1]][1] - y0, coords[item[1]][0] - x0))
        rotation[v] = tuple(str(e) for e, _ in inc)
    draft = PlanarGraph.__new__(PlanarGraph)
    object.__setattr__(draft, "edges", tuple((str(e), u, v) for e, u, v in edges))
    object.__setattr__(draft, "rotation", rotation)
    faces = draft.faces()

    def area(face):
        return sum(coords[a][0] * coords[b][1] - coords[b][0] * coords[a][1] for _, a, b in face)

    outer = min(faces, key=area) if len(faces) > 1 else faces[0]
    return PlanarGraph(
        tuple(coords), tuple(edges), rotation, tuple(d[0] for d in outer), tuple(distinguished)
    )


def arc_diagram(
    n: int,
    edges: Sequence[tuple[str, int, int]],
    upper: Iterable[str] = (),
    distinguished: Iterable[int] = (),
) -> PlanarGraph:
    """Vertices 1..n on a line, each edge a half-circle below (default) or above it."""
    up = {str(e) for e in upper}
    norm = []
    for e, u, v in edges:
        a, b = sorted((int(u), int(v)))
        norm.append((str(e), a, b))
    for (e1, a, b), (e2, c, d) in combinations(norm, 2):
        if (e1 in up) == (e2 in up) and (a < c < b < d or c < a < d < b):
            raise GraphError(f"arcs {e1} and {e2} cross")
    rotation = {}
    for v in range(1, n + 1):
        inc = [(e, b if a == v else a) for e, a, b in norm if v in (a, b)]
        upper_left = sorted([x for x in inc if x[0] in up and x[1] < v], key=lambda x: -x[1])
        upper_right = sorted([x for x in inc if x[0] in up and x[1] > v], key=lambda x: -x[1])
        lower_right = sorted([x for x in inc if x[0] not in up and x[1] > v], key=lambda x: x[1])
        lower_left = sorted([x for x in inc if x[0] not in up and x[1] < v], key=lambda x: x[1])
        rotation[v] = tuple(e for e, _ in upper_left + upper_right + lower_right + lower_left)
    draft = PlanarGraph.__new__(PlanarGraph)
    object.__setattr__(draft, "edges", tuple(norm))
    object.__setattr__(draft, "rotation", rotation)
    # the wedge at vertex 1 facing left lies on the outer face
    rot1 = rotation[1]
    outer = ()
    if rot1:
        last = rot1[-1]
        start = (last, draft.other(last, 1), 1)
        for face in draft.faces():
            if start in face:
                k = face.index(start)
                outer = tuple(d[0] for d in face[k:] + face[:k])
    return PlanarGraph(tuple(range(1, n + 1)), tuple(norm), rotation, outer, tuple(distinguished), {}, frozenset(up))


def line_graph(n: int) -> PlanarGraph:
    return arc_diagram(n, [(str(i), i, i + 1) for i in range(1, n)])


def star_graph(k: int) -> PlanarGraph:
    """Centre 1 joined to 2..k+1 by nested lower arcs."""
    return arc_diagram(k + 1, [(str(j - 1), 1, j) for j in range(2, k + 2)])


def triangle_graph() -> PlanarGraph:
    """Edges numbered in the order the bounded face is traversed."""
    return arc_diagram(3, [("1", 1, 3), ("2", 2, 3), ("3", 1, 2)])


def annulus_standard_graph(n: int) -> PlanarGraph:
    """Puncture 1 joined to 2..n+1, plus the cycle 2, 3, ..., n+1 closed above the line."""
    if n < 3:
        raise GraphError("the standard annulus graph needs n >= 3")
    edges = [(f"b{j}", 1, j) for j in range(2, n + 2)]
    edges += [(f"c{j}", j, j + 1) for j in range(2, n + 1)]
    edges.append((f"c{n + 1}", 2, n + 1))
    return arc_diagram(n + 1, edges, upper=[f"c{n + 1}"], distinguished=[1])


def pseudocycle_figure_graph() -> PlanarGraph:
    """Triangle 1, 2, 4 with the pendant edge 3 pointing into the face."""
    coords = {"A": (0.0, 0.0), "B": (2.0, 0.0), "C": (1.0, 2.0), "D": (1.0, 1.0)}
    edges = [("1", "A", "B"), ("2", "B", "C"), ("3", "C", "D"), ("4", "C", "A")]
    return from_coordinates(coords, edges)


def tree_figure_graph() -> PlanarGraph:
    """The tree with edges sigma, alpha, ..., zeta whose circuits are worked out by hand."""
    coords = {
        "x": (0.0, 0.0),
        "y": (2.0, 0.0),
        "a": (2.0, 1.0),
        "b": (3.0, 0.0),
        "w": (0.0, -1.0),
        "d": (1.0, -1.0),
        "e": (0.0, -2.0),
        "z": (-1.0, 0.0),
    }
    edges = [
        ("σ", "x", "y"),
        ("α", "y", "a"),
        ("β", "y", "b"),
        ("γ", "x", "w"),
        ("δ", "w", "d"),
        ("ε", "w", "e"),
        ("ζ", "x", "z"),
    ]
    return from_coordinates(coords, edges)


# -- pseudocycles and tree circuits ----------------------------------------------------------


def _canonical_rotation(seq: list[str], order: Sequence[str]) -> tuple[str, ...]:
    rank = {e: k for k, e in enumerate(order)}
    k = min(range(len(seq)), key=lambda i: (rank[seq[i]], i))
    return tuple(seq[k:] + seq[:k])


def graph_pseudocycles(g: PlanarGraph, include_outer: bool = False) -> list[tuple[str, ...]]:
    """One edge sequence per bounded face (per face on the sphere)."""
    faces = g.faces() if include_outer else g.bounded_faces()
    return [_canonical_rotation([d[0] for d in f], g.edge_ids) for f in faces]


def pseudocycle_rotations(cycle: Sequence[str]) -> list[tuple[str, ...]]:
    """Cyclic rotations a_1..a_m where a_1 does not start and a_m does not end a reverse."""
    m = len(cycle)
    out = []
    for k in range(m):
        a = tuple(cycle[k:]) + tuple(cycle[:k])
        if m >= 2 and (a[0] == a[1] or a[-1] == a[-2]):
            continue
        if a not in out:
            out.append(a)
    return out


def tree_circuit(g: PlanarGraph, tree: Iterable[str], x: Vertex, y: Vertex) -> tuple[str, ...]:
    """delta_{x,y}(tree): walk round the tree starting along the edge from x to y."""
    tree = [str(e) for e in tree]
    t = g.nx_graph(tree)
    if len(tree) != len(g.vertices) - 1 or not nx.is_tree(t):
        raise GraphError("edge set is not a maximal tree")
    start = None
    for e in tree:
        if set(g.ends(e)) == {x, y}:
            start = (e, x, y)
    if start is None:
        raise GraphError(f"{x!r} and {y!r} are not joined by a tree edge")
    keep = set(tree)
    rot = {v: tuple(e for e in g.rotation[v] if e in keep) for v in g.vertices}
    out = []
    d = start
    while True:
        out.append(d[0])
        e, _, v = d
        r = rot[v]
        f = r[(r.index(e) + 1) % len(r)]
        d = (f, v, g.other(f, v))
        if d == start:
            return tuple(out)


def maximal_trees(g: PlanarGraph, limit: int = 10_000) -> list[tuple[str, ...]]:
    out = []
    for t in nx.SpanningTreeIterator(g.nx_graph()):
        out.append(tuple(sorted((d["id"] for _, _, d in t.edges(data=True)), key=g.edge_ids.index)))
        if len(out) >= limit:
            break
    return out


def format_power_word(edges: Sequence[str]) -> str:
    """Compress runs: ["σ", "α", "α"] -> "σα²"."""
    sup = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
    out = []
    k = 0
    while k < len(edges):
        j = k
        while j < len(edges) and edges[j] == edges[k]:
            j += 1
        out.append(edges[k] + (str(j - k).translate(sup) if j - k > 1 else ""))
        k = j
    return "".join(out)


# -- Sergiescu presentations ---------------------------------------------------------


def sigma_label(e: str) -> str:
    return f"s{e}"


def x_label(e: str) -> str:
    return f"x{e}"


def tau_label(e: str) -> str:
    return f"t{e}"


def eps_label(v: Vertex) -> str:
    return f"e{v}"


def _share(g: PlanarGraph, a: str, b: str) -> bool:
    return bool(set(g.ends(a)) & set(g.ends(b)))


def _nodal_triples(g: PlanarGraph, skip: Vertex | None = None) -> list[tuple[Vertex, tuple[str, str, str]]]:
    out = []
    for v in g.vertices:
        if v == skip:
            continue
        for triple in combinations(g.rotation[v], 3):
            out.append((v, triple))
    return out


def _rotations3(t: tuple[str, str, str]) -> list[tuple[str, str, str]]:
    a, b, c = t
    return [(a, b, c), (b, c, a), (c, a, b)]


def _plane_relations(g: PlanarGraph, edges: Sequence[str], faces: Sequence[Sequence[str]]) -> list[Relation]:
    s = sigma_label
    out = []
    for a, b in combinations(edges, 2):
        if _share(g, a, b):
            out.append(rel(word(s(a), s(b), s(a)), word(s(b), s(a), s(b)), "AR"))
        else:
            out.append(rel(word(s(a), s(b)), word(s(b), s(a)), "DR"))
    keep = set(edges)
    for _, (a, b, c) in _nodal_triples(g):
        if {a, b, c} <= keep:
            out.append(rel(word(s(a), s(b), s(c), s(a)), word(s(b), s(c), s(a), s(b)), "NR"))
    for cyc in faces:
        if not set(cyc) <= keep:
            continue
        for a in pseudocycle_rotations(cyc):
            out.append(rel(word(*map(s, a[:-1])), word(*map(s, a[1:])), "PR"))
    return out


def _plane(g: PlanarGraph) -> Presentation:
    rels = _plane_relations(g, g.edge_ids, graph_pseudocycles(g))
    return Presentation.build("sergiescu-plane", [sigma_label(e) for e in g.edge_ids], rels, n=len(g.vertices))


def _sphere(g: PlanarGraph, minimal: bool) -> Presentation:
    # pseudocycles of the bounded faces only; the tree circuits stand in for the outer one
    rels = _plane_relations(g, g.edge_ids, graph_pseudocycles(g))
    trees = maximal_trees(g, 1 if minimal else 10_000)
    for t in trees:
        for e in t:
            u, v = g.ends(e)
            for x, y in ((u, v), (v, u)):
                circuit = tree_circuit(g, t, x, y)
                rels.append(rel(word(*map(sigma_label, circuit)), (), "TR"))
    return Presentation.build("sergiescu-sphere", [sigma_label(e) for e in g.edge_ids], rels, n=len(g.vertices))


def _annulus_parts(g: PlanarGraph) -> tuple[Vertex, list[str], list[str], list[Relation]]:
    v = g.check_punctured()
    spokes = [e for e in g.edge_ids if v in g.ends(e)]
    inner = [e for e in g.edge_ids if v not in g.ends(e)]
    s, t = sigma_label, tau_label
    out = []
    for a, c in combinations(inner, 2):
        if _share(g, a, c):
            out.append(rel(word(s(a), s(c), s(a)), word(s(c), s(a), s(c)), "AR"))
        else:
            out.append(rel(word(s(a), s(c)), word(s(c), s(a)), "DR"))
    for b in spokes:
        for c in inner:
            if _share(g, b, c):
                out.append(rel(word(t(b), s(c), t(b), s(c)), word(s(c), t(b), s(c), t(b)), "AR"))
            else:
                out.append(rel(word(t(b), s(c)), word(s(c), t(b)), "DR"))
    for _, triple in _nodal_triples(g, skip=v):
        for a, b, c in _rotations3(triple):
            if b in spokes:
                # tau_b sigma_c sigma_a tau_b sigma_c = sigma_a tau_b sigma_c sigma_a tau_b
                out.append(
                    rel(
                        word(t(b), s(c), s(a), t(b), s(c)),
                        word(s(a), t(b), s(c), s(a), t(b)),
                        "NR",
                    )
                )
        if not set(triple) & set(spokes):
            a, b, c = triple
            out.append(rel(word(s(a), s(b), s(c), s(a)), word(s(b), s(c), s(a), s(b)), "NR"))
    for f in g.bounded_faces():
        seq = [d[0] for d in f]
        if not set(seq) & set(spokes):
            for a in pseudocycle_rotations(seq):
                out.append(rel(word(*map(s, a[:-1])), word(*map(s, a[1:])), "PR"))
            continue
        # rotate so the walk leaves the puncture first and enters it last
        for k, d in enumerate(f):
            if d[1] == v:
                a = seq[k:] + seq[:k]
                if a[-1] in spokes and all(e in inner for e in a[1:-1]) and a[0] != a[1] and a[-1] != a[-2]:
                    out.append(rel(word(t(a[0]), *map(s, a[1:-1])), word(*map(s, a[1:-1]), t(a[-1])), "PR"))
    return v, spokes, inner, out


def _annulus(g: PlanarGraph) -> Presentation:
    _, spokes, inner, rels = _annulus_parts(g)
    gens = [sigma_label(e) for e in inner] + [tau_label(e) for e in spokes]
    return Presentation.build("sergiescu-annulus", gens, rels, n=len(g.vertices) - 1)


def _singular_relations(g: PlanarGraph, edges: Sequence[str], faces: Sequence[Sequence[str]]) -> list[Relation]:
    s, x = sigma_label, x_label
    out = []
    keep = set(edges)
    for a in edges:
        out.append(rel(word(s(a), x(a)), word(x(a), s(a)), "commutativity"))
        out.append(rel(word(s(a), s(a) + "'"), (), "invertibility"))
        out.append(rel(word(s(a) + "'", s(a)), (), "invertibility"))
    for a, b in combinations(edges, 2):
        if _share(g, a, b):
            out.append(rel(word(s(a), s(b), s(a)), word(s(b), s(a), s(b)), "adjacency"))
            out.append(rel(word(x(a), s(b), s(a)), word(s(b), s(a), x(b)), "adjacency"))
            out.append(rel(word(x(b), s(a), s(b)), word(s(a), s(b), x(a)), "adjacency"))
        else:
            out.append(rel(word(s(a), s(b)), word(s(b), s(a)), "disjointedness"))
            out.append(rel(word(x(a), x(b)), word(x(b), x(a)), "disjointedness"))
            out.append(rel(word(s(a), x(b)), word(x(b), s(a)), "disjointedness"))
            out.append(rel(word(s(b), x(a)), word(x(a), s(b)), "disjointedness"))
    for _, triple in _nodal_triples(g):
        if not set(triple) <= keep:
            continue
        for a, b, c in _rotations3(triple):
            out += chain(
                [word(s(a), s(b), s(c), s(a)), word(s(b), s(c), s(a), s(b)), word(s(c), s(a), s(b), s(c))],
                "nodal",
            )
            out.append(rel(word(x(a), s(b), s(c), s(a)), word(s(b), s(c), s(a), x(b)), "nodal"))
            out.append(rel(word(s(a), s(b), x(c), s(a)), word(s(b), x(c), s(a), s(b)), "nodal"))
            out.append(rel(word(x(a), s(b), x(c), s(a)), word(s(b), x(c), s(a), x(b)), "nodal"))
    for cyc in faces:
        if not set(cyc) <= keep:
            continue
        for a in pseudocycle_rotations(cyc):
            out.append(rel(word(*map(s, a[:-1])), word(*map(s, a[1:])), "pseudocycle"))
            mid = list(map(s, a[1:-1]))
            out.append(rel(word(x(a[0]), *mid), word(*mid, x(a[-1])), "pseudocycle"))
    return out


def _singular_plane(g: PlanarGraph) -> Presentation:
    rels = _singular_relations(g, g.edge_ids, graph_pseudocycles(g))
    gens = [Generator(sigma_label(e)) for e in g.edge_ids] + [Generator(x_label(e), False) for e in g.edge_ids]
    return Presentation.build("sergiescu-singular-plane", gens, rels, n=len(g.vertices))


def _singular_annulus(g: PlanarGraph) -> Presentation:
    v, spokes, inner, rels = _annulus_parts(g)
    faces = [[d[0] for d in f] for f in g.bounded_faces()]
    rels += _singular_relations(g, inner, faces)
    s, x, t = sigma_label, x_label, tau_label
    for b in spokes:
        rels.append(rel(word(t(b), t(b) + "'"), (), "invertibility"))
        rels.append(rel(word(t(b) + "'", t(b)), (), "invertibility"))
        for c in inner:
            if not _share(g, b, c):
                rels.append(rel(word(t(b), x(c)), word(x(c), t(b)), "disjointedness"))
    for _, triple in _nodal_triples(g, skip=v):
        for a, b, c in _rotations3(triple):
            if b in spokes:
                rels.append(rel(word(s(a), t(b), s(c), x(a)), word(x(c), s(a), t(b), s(c)), "nodal"))
                rels.append(
                    rel(word(t(b), s(c), s(a), t(b), x(c)), word(x(a), t(b), s(c), s(a), t(b)), "nodal")
                )
    gens = (
        [Generator(s(e)) for e in inner]
        + [Generator(x(e), False) for e in inner]
        + [Generator(t(e)) for e in spokes]
    )
    return Presentation.build("sergiescu-singular-annulus", gens, rels, n=len(g.vertices) - 1)


def _inverse_plane(g: PlanarGraph) -> Presentation:
    base = _plane(g)
    s, eps = sigma_label, eps_label
    rels = list(base.relations)
    for e in g.edge_ids:
        v0, v1 = g.orientation.get(e, g.ends(e))
        rels.append(rel(word(s(e), s(e) + "'"), (), "inverse"))
        rels.append(rel(word(s(e) + "'", s(e)), (), "inverse"))
        for v in g.vertices:
            if v not in (v0, v1):
                rels.append(rel(word(eps(v), s(e)), word(s(e), eps(v)), "epsilon"))
        rels.append(rel(word(eps(v0), s(e)), word(s(e), eps(v1)), "epsilon"))
        rels.append(rel(word(eps(v1), s(e)), word(s(e), eps(v0)), "epsilon"))
        for vi in (v0, v1):
            rels += chain([word(eps(vi), s(e), s(e)), word(s(e), s(e), eps(vi)), word(eps(vi))], "epsilon")
        pair = word(eps(v0), eps(v1))
        rels += chain([pair + word(s(e)), word(s(e)) + pair, pair], "epsilon")
    for v in g.vertices:
        rels.append(rel(word(eps(v)), word(eps(v), eps(v)), "epsilon"))
    gens = list(base.generators) + [Generator(eps(v), False) for v in g.vertices]
    return Presentation.build("sergiescu-inverse-plane", gens, rels, n=len(g.vertices))


def sergiescu(g: PlanarGraph, variant: str = "plane", minimal: bool = False) -> Presentation:
    """Graph presentation of the requested kind.

    Every bounded-face pseudocycle is treated as eligible; the singular
    theorem's word "irreducible" is not further restricted.
    """
    if variant == "plane":
        return _plane(g)
    if variant == "sphere":
        return _sphere(g, minimal)
    if variant == "annulus":
        return _annulus(g)
    if variant == "singular-plane":
        return _singular_plane(g)
    if variant == "singular-annulus":
        return _singular_annulus(g)
    if variant == "inverse-plane":
        return _inverse_plane(g)
    raise ValueError(f"unknown variant {variant!r}; known: {', '.join(VARIANTS)}")


# -- assignments for arc diagrams -------------------------------------------------------------


def arc_letters(g: PlanarGraph, e: str) -> tuple[tuple[int, ...], int, tuple[int, ...]]:
    """Half-twist along an arc as (prefix, core index, suffix) in sigma letters.

    A lower arc (s, t) gives a_ts = (s_{t-1} .. s_{s+1}) s_s (s_{s+1}^-1 .. s_{t-1}^-1);
    an upper arc conjugates the other way round.
    """
    s, t = sorted(g.ends(e))
    left = tuple(range(t - 1, s, -1))
    if e in g.upper:
        left = tuple(-i for i in left)
    return left, s, tuple(-i for i in reversed(left))


def _require_arcs(g: PlanarGraph) -> int:
    n = len(g.vertices)
    if set(g.vertices) != set(range(1, n + 1)):
        raise GraphError("arc assignments need vertices 1..n on a line")
    return n


def _half_twist(g: PlanarGraph, e: str) -> BraidWord:
    pre, core, post = arc_letters(g, e)
    return BraidWord(len(g.vertices), pre + (core,) + post)


def band_assignment(g: PlanarGraph, variant: str = "plane") -> Assignment:
    """Edges of an arc diagram mapped to half-twists in the variant's model.

    ``plane``: Br_n.  ``annulus``: Br_{n+1} with tau_b the square of the
    half-twist along the spoke b.  ``singular-*``: SB_n with x_a the singular
    crossing along a.  ``inverse-plane``: IB_n with eps_v deleting strand v.
    ``sphere``: the permutation quotient only.
    """
    n = _require_arcs(g)
    if variant == "plane":
        return Assignment(braid_model(n), {sigma_label(e): _half_twist(g, e) for e in g.edge_ids})
    if variant == "annulus":
        v = g.check_punctured()
        imgs = {}
        for e in g.edge_ids:
            w = _half_twist(g, e)
            imgs[tau_label(e) if v in g.ends(e) else sigma_label(e)] = w * w if v in g.ends(e) else w
        return Assignment(braid_model(n), imgs)
    if variant in ("singular-plane", "singular-annulus"):
        punct = g.check_punctured() if variant == "singular-annulus" else None
        imgs = {}
        for e in g.edge_ids:
            pre, core, post = arc_letters(g, e)

            def conj(kind: str) -> SBandWord:
                letters = [("s", abs(i), 1 if i > 0 else -1) for i in pre]
                letters.append((kind, core, 1))
                letters += [("s", abs(i), 1 if i > 0 else -1) for i in post]
                return classical_to_band(SingularWord(n, tuple(letters)))

            if punct is not None and punct in g.ends(e):
                imgs[tau_label(e)] = conj("s") * conj("s")
            else:
                imgs[sigma_label(e)] = conj("s")
                imgs[x_label(e)] = conj("x")
        return Assignment(singular_model(n), imgs)
    if variant == "inverse-plane":
        imgs = {sigma_label(e): PartialBraid.from_braid(_half_twist(g, e)) for e in g.edge_ids}
        imgs.update({eps_label(v): generator_pb(n, ("e", v, 1)) for v in g.vertices})
        return Assignment(partial_braid_model(n), imgs)
    if variant == "sphere":
        m = injection_model(n)
        imgs = {}
        for e in g.edge_ids:
            a, b = g.ends(e)
            swap = {i: i for i in range(1, n + 1)}
            swap[a], swap[b] = b, a
            imgs[sigma_label(e)] = PartialInjection.from_dict(n, swap)
        return Assignment(m, imgs)
    raise ValueError(f"unknown variant {variant!r}")


def random_arc_diagram(n: int, extra: int, rng, upper_prob: float = 0.0) -> PlanarGraph:
    """A connected arc diagram: a random spanning path-like skeleton plus non-crossing arcs."""
    edges = [(str(i), i, i + 1) for i in range(1, n)]
    up: set[str] = set()
    tries = 0
    while len(edges) < n - 1 + extra and tries < 200:
        tries += 1
        a, b = sorted(rng.sample(range(1, n + 1), 2))
        if b - a < 2 or any({a, b} == {u, v} for _, u, v in edges):
            continue
        is_up = rng.random() < upper_prob
        e = str(len(edges) + 1)
        clash = any(
            ((f in up) == is_up) and (u < a < v < b or a < u < b < v) for f, u, v in edges
        )
        if clash:
            continue
        edges.append((e, a, b))
        if is_up:
            up.add(e)
    return arc_diagram(n, edges, up)


def star_relations(g: PlanarGraph, v: Vertex) -> list[Relation]:
    """s_{i1} .. s_{ij} s_{i1} = s_{ij} s_{i1} .. s_{ij} for clockwise subsets at v."""
    out = []
    rot = g.rotation[v]
    for j in range(2, len(rot) + 1):
        for sub in combinations(rot, j):
            labels = [sigma_label(e) for e in sub]
            out.append(rel(word(*labels, labels[0]), word(labels[-1], *labels), "star"))
    return out
