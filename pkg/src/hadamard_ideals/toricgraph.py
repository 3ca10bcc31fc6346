"""Toric ideals of finite simple graphs.

The toric ideal of G is the kernel of ``e_i -> v_a v_b`` (edge ``i = {a, b}``).
It is computed by elimination; closed even walks give an independent source
of generators used to cross-check it.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ResourceCapExceeded, ValidationError
from .groebner import Ideal, eliminate, ideal_equal, ideal_member, groebner_basis, normal_form
from .hadamard import ProjectivePoint, hadamard_product_binomial_fast, hadamard_product_elimination
from .limits import current_limits
from .polyring import Polynomial, Ring


class Graph:
    """A finite simple graph with named vertices and an ordered edge list."""

    __slots__ = ("vertices", "edges", "_index")

    def __init__(self, vertices, edges):
        vertices = [str(v) for v in vertices]
        if len(set(vertices)) != len(vertices):
            raise ValidationError("vertex names must be distinct")
        index = {v: i for i, v in enumerate(vertices)}
        seen = set()
        out = []
        for e in edges:
            e = list(e)
            if len(e) != 2:
                raise ValidationError(f"an edge needs exactly two endpoints, got {e!r}")
            u, v = str(e[0]), str(e[1])
            for w in (u, v):
                if w not in index:
                    raise ValidationError(f"edge endpoint {w!r} is not a vertex")
            if u == v:
                raise ValidationError(f"loop at vertex {u!r}")
            key = frozenset((u, v))
            if key in seen:
                raise ValidationError(f"duplicate edge {{{u}, {v}}}")
            seen.add(key)
            out.append((u, v))
        self.vertices = tuple(vertices)
        self.edges = tuple(out)
        self._index = index

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
            raise ValidationError('graph document needs "vertices" and "edges"')
        if not isinstance(data["vertices"], list) or not isinstance(data["edges"], list):
            raise ValidationError('"vertices" and "edges" must be lists')
        return cls(data["vertices"], data["edges"])

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"invalid graph JSON: {exc}") from None
        return cls.from_dict(data)

    def to_dict(self):
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}

    @classmethod
    def cycle(cls, n, prefix="v"):
        vs = [f"{prefix}{i + 1}" for i in range(n)]
        return cls(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])

    @classmethod
    def path(cls, n, prefix="v"):
        """Path on ``n`` vertices (``n - 1`` edges)."""
        vs = [f"{prefix}{i + 1}" for i in range(n)]
        return cls(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])

    @property
    def num_edges(self):
        return len(self.edges)

    def vertex_index(self, v):
        return self._index[v]

    def edge_index(self, u, v):
        key = frozenset((u, v))
        for i, e in enumerate(self.edges):
            if frozenset(e) == key:
                return i
        raise ValidationError(f"no edge {{{u}, {v}}}")

    def edge_ring(self, field=None) -> Ring:
        names = [f"e{i + 1}" for i in range(len(self.edges))]
        return Ring(names) if field is None else Ring(names, field)

    def is_subgraph_of(self, other: Graph) -> bool:
        if not set(self.vertices) <= set(other.vertices):
            return False
        theirs = {frozenset(e) for e in other.edges}
        return all(frozenset(e) in theirs for e in self.edges)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"Graph({list(self.vertices)!r}, {[list(e) for e in self.edges]!r})"


@dataclass(frozen=True)
class ClosedEvenWalk:
    graph: Graph
    edges: tuple  # edge indices, 0-based

    def __post_init__(self):
        validate_walk(self.graph, self.edges)

    def __len__(self):
        return len(self.edges)


def _walk_start(graph, edges):
    """Start vertex of a closed walk through ``edges``, or None if it is not one."""
    for start in graph.edges[edges[0]]:
        cur = start
        ok = True
        for i in edges:
            a, b = graph.edges[i]
            if cur == a:
                cur = b
            elif cur == b:
                cur = a
            else:
                ok = False
                break
        if ok and cur == start:
            return start
    return None


def validate_walk(graph: Graph, edges):
    edges = tuple(edges)
    if len(edges) < 2 or len(edges) % 2:
        raise ValidationError(f"a closed even walk needs a positive even length, got {len(edges)}")
    if any(not isinstance(i, int) or not 0 <= i < graph.num_edges for i in edges):
        raise ValidationError("walk refers to an edge that does not exist")
    if _walk_start(graph, edges) is None:
        raise ValidationError(f"edges {list(edges)} do not form a closed walk")


def walk_binomial(walk: ClosedEvenWalk, edge_ring: Ring) -> Polynomial:
    """Product of the odd-position edges minus the product of the even-position ones."""
    if edge_ring.nvars != walk.graph.num_edges:
        raise ValidationError("edge ring needs one variable per edge")
    odd = [0] * edge_ring.nvars
    even = [0] * edge_ring.nvars
    for pos, i in enumerate(walk.edges):
        (odd if pos % 2 == 0 else even)[i] += 1
    return edge_ring.monomial(tuple(odd)) - edge_ring.monomial(tuple(even))


def closed_even_walks(graph: Graph, max_length=None):
    """Closed even walks of length 4..max_length with nonzero binomial.

    Walks are collected breadth-first from each start vertex and kept one per
    binomial (up to sign).  Rotating or reflecting a closed even walk only
    changes the sign of its binomial, so this is at least as strong as
    identifying walks up to rotation and reflection.  Defaults to ``2 |E|``.
    """
    if max_length is None:
        max_length = 2 * graph.num_edges
    if not isinstance(max_length, int) or max_length < 4 or max_length % 2:
        if graph.num_edges == 0 and max_length == 0:
            return []
        raise ValidationError(f"max_length must be an even integer >= 4, got {max_length!r}")
    cap = current_limits().max_walks
    q = graph.num_edges
    incident = {v: [] for v in graph.vertices}
    for i, (a, b) in enumerate(graph.edges):
        incident[a].append((i, b))
        incident[b].append((i, a))
    found = {}
    explored = 0
    zero = (0,) * q
    for start in graph.vertices:
        layer = {(start, zero, zero): ()}
        for length in range(1, max_length + 1):
            nxt = {}
            odd_pos = length % 2 == 1
            for (v, odd, even), walk in layer.items():
                for i, w in incident[v]:
                    if odd_pos:
                        o = odd[:i] + (odd[i] + 1,) + odd[i + 1:]
                        state = (w, o, even)
                    else:
                        e = even[:i] + (even[i] + 1,) + even[i + 1:]
                        state = (w, odd, e)
                    if state not in nxt:
                        nxt[state] = walk + (i,)
            explored += len(nxt)
            if explored > cap:
                raise ResourceCapExceeded(f"walk enumeration exceeded {cap} states")
            if length >= 4 and length % 2 == 0:
                for (v, odd, even), walk in nxt.items():
                    if v == start and odd != even:
                        key = (min(odd, even), max(odd, even))
                        if key not in found:
                            found[key] = walk
            layer = nxt
    walks = sorted(found.values(), key=lambda w: (len(w), w))
    return [ClosedEvenWalk(graph, w) for w in walks]


def _vertex_names(graph, ring):
    names = []
    used = set(ring.vars)
    for i in range(len(graph.vertices)):
        name = f"t{i}"
        while name in used:
            name += "_"
        used.add(name)
        names.append(name)
    return names


def toric_ideal_graph(graph: Graph) -> Ideal:
    """Kernel of ``e_i -> v_a v_b``, by eliminating the vertex variables."""
    if graph.num_edges == 0:
        raise ValidationError("the toric ideal needs a graph with at least one edge")
    edge_ring = graph.edge_ring()
    vnames = _vertex_names(graph, edge_ring)
    nv = len(vnames)
    big = Ring(vnames + list(edge_ring.vars))
    gens = []
    for i, (a, b) in enumerate(graph.edges):
        exp_e = [0] * big.nvars
        exp_e[nv + i] = 1
        exp_v = [0] * big.nvars
        exp_v[graph.vertex_index(a)] += 1
        exp_v[graph.vertex_index(b)] += 1
        gens.append(Polynomial(big, {tuple(exp_e): 1, tuple(exp_v): -1}))
    weights = [1] * nv + [2] * graph.num_edges
    res = eliminate(Ideal(big, gens), list(range(nv)), weights=weights)
    return Ideal(edge_ring, res.generators)


def walk_ideal(graph: Graph, max_length=None) -> Ideal:
    ring = graph.edge_ring()
    return Ideal(ring, [walk_binomial(w, ring) for w in closed_even_walks(graph, max_length)])


def extend_subgraph_ideal(H: Graph, G: Graph) -> Ideal:
    """The toric ideal of H written in the edge variables of G."""
    if not H.is_subgraph_of(G):
        raise ValidationError("H is not a subgraph of G")
    target = G.edge_ring()
    if H.num_edges == 0:
        return Ideal(target)
    pos = [G.edge_index(u, v) for u, v in H.edges]
    out = []
    for g in toric_ideal_graph(H).generators:
        terms = {}
        for e, c in g.items():
            exp = [0] * target.nvars
            for k, x in enumerate(e):
                exp[pos[k]] = x
            terms[tuple(exp)] = c
        out.append(Polynomial(target, terms))
    return Ideal(target, out)


@dataclass
class SubgraphReport:
    holds: bool
    product: Ideal
    extension: Ideal
    details: dict = field(default_factory=dict)


def verify_subgraph_theorem(G: Graph, H: Graph) -> SubgraphReport:
    """Check that I_G * I_H^e = I_H^e, with the product computed by elimination."""
    ext = extend_subgraph_ideal(H, G)
    IG = toric_ideal_graph(G)
    prod = hadamard_product_elimination(IG, ext)
    holds = ideal_equal(prod, ext)
    details = {"elimination": holds}
    if H.is_subgraph_of(G) and G.is_subgraph_of(H):
        # toric square: the fast path with the all-ones witness must agree too
        if IG.is_zero():
            details["square"] = ideal_equal(prod, IG)
        else:
            fast = hadamard_product_binomial_fast(IG, IG, ProjectivePoint.ones(IG.ring))
            details["square"] = ideal_equal(fast.ideal, IG) and ideal_equal(prod, IG)
        holds = holds and details["square"]
    return SubgraphReport(holds, prod, ext, details)


def check_walk_agreement(graph: Graph, max_length=None) -> bool:
    """Walk binomials lie in the toric ideal and generate it."""
    if graph.num_edges == 0:
        return not closed_even_walks(graph, 0)
    IG = toric_ideal_graph(graph)
    W = walk_ideal(graph, max_length)
    if not all(ideal_member(f, IG) for f in W.generators):
        return False
    if W.is_zero():
        return IG.is_zero()
    gb = groebner_basis(W)
    return all(not normal_form(g, gb) for g in IG.generators)


# -- fixed corpus ---------------------------------------------------------------------

def _c4_chord():
    g = Graph.cycle(4)
    return Graph(g.vertices, list(g.edges) + [("v1", "v3")])


def _two_squares():
    vs = [f"v{i}" for i in range(1, 7)]
    edges = [("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v1"),
             ("v3", "v5"), ("v5", "v6"), ("v6", "v4")]
    return Graph(vs, edges)


def _k4():
    vs = ["v1", "v2", "v3", "v4"]
    return Graph(vs, [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]])


def corpus_graphs():
    """Named small graphs (at most 7 edges) used by the verification suites."""
    return {
        "C3": Graph.cycle(3),
        "C4": Graph.cycle(4),
        "C6": Graph.cycle(6),
        "P3": Graph.path(3),
        "P4": Graph.path(4),
        "C4+chord": _c4_chord(),
        "two-C4": _two_squares(),
        "K4": _k4(),
    }


def corpus_pairs():
    """(name, G, H) with H a subgraph of G."""
    g = corpus_graphs()
    c4 = g["C4"]
    outer = Graph(["v1", "v2", "v3", "v4", "v5", "v6"],
                  [("v1", "v2"), ("v2", "v3"), ("v3", "v5"), ("v5", "v6"), ("v6", "v4"), ("v4", "v1")])
    right = Graph(["v3", "v4", "v5", "v6"], [("v3", "v5"), ("v5", "v6"), ("v6", "v4"), ("v3", "v4")])
    tri = Graph(["v1", "v2", "v3"], [("v1", "v2"), ("v2", "v3"), ("v1", "v3")])
    return [
        ("C4 in C4", c4, c4),
        ("P4 in C4", c4, g["P4"]),
        ("C4 in C4+chord", g["C4+chord"], c4),
        ("triangle in C4+chord", g["C4+chord"], tri),
        ("left C4 in two-C4", g["two-C4"], c4),
        ("right C4 in two-C4", g["two-C4"], right),
        ("outer C6 in two-C4", g["two-C4"], outer),
        ("C4 in K4", g["K4"], c4),
        ("triangle in K4", g["K4"], tri),
        ("P4 in C6", g["C6"], g["P4"]),
    ]
