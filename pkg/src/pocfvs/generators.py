"""Deterministic constructors for the named graph families.

Vertex numbering is fixed per family so that traces and golden tests are
reproducible:

* ``path(k)``: vertices 0..k-1 in path order.
* ``cycle(r)``: vertices 0..r-1 in ring order.
* ``butterfly(i, j, k)``: first cycle 0..i-1 with anchor ``x = 0``, bridge
  interior ``i..i+k-2``, second cycle ``i+k-1..i+j+k-2`` with anchor
  ``y = i+k-1``. The bridge is a path of length ``k`` between x and y.
* ``spider(k, p, q)``: center 0, then the three legs in argument order.
* ``tadpole(k, r)``: cycle 0..r-1, tail r..r+k-1 attached at vertex 0.
* ``hourglass_chain(k)``: hub ``x = 0``; block ``i`` occupies
  ``1+5i..5+5i`` as (center y_i, a, a', b, b').
* ``gprime(t1..t6)``: branch vertices 0,1,2; the six subdivided chains
  follow in order (0-1, 0-1, 0-2, 0-2, 1-2, 1-2).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import InvalidInputError
from .graph import Graph, disjoint_union


def path(k: int) -> Graph:
    if k < 1:
        raise InvalidInputError(f"path needs at least 1 vertex, got {k}")
    return Graph(k, ((v, v + 1) for v in range(k - 1)))


def cycle(r: int) -> Graph:
    if r < 3:
        raise InvalidInputError(f"cycle needs at least 3 vertices, got {r}")
    return Graph(r, [(v, (v + 1) % r) for v in range(r)])


def butterfly(i: int, j: int, k: int) -> Graph:
    """Two cycles C_i and C_j joined by a path of length k between anchors."""
    if i < 3 or j < 3:
        raise InvalidInputError(f"butterfly cycles need >= 3 vertices, got {i}, {j}")
    if k < 1:
        raise InvalidInputError(f"butterfly bridge length must be >= 1, got {k}")
    n = i + j + k - 1
    x, y = 0, i + k - 1
    edges = [(v, (v + 1) % i) for v in range(i)]
    bridge = [x] + list(range(i, i + k - 1)) + [y]
    edges += list(zip(bridge, bridge[1:]))
    edges += [(y + v, y + (v + 1) % j) for v in range(j)]
    return Graph(n, edges)


def spider(k: int, p: int, q: int) -> Graph:
    """Three paths of k, p and q vertices joined at a fresh center vertex."""
    if min(k, p, q) < 1:
        raise InvalidInputError(f"spider legs need >= 1 vertex each, got {(k, p, q)}")
    edges = []
    start = 1
    for leg in (k, p, q):
        edges.append((0, start))
        edges += [(v, v + 1) for v in range(start, start + leg - 1)]
        start += leg
    return Graph(k + p + q + 1, edges)


def tadpole(k: int, r: int) -> Graph:
    """Cycle of r vertices with a pendant path of k vertices at vertex 0."""
    if k < 0:
        raise InvalidInputError(f"tadpole tail length must be >= 0, got {k}")
    if r < 3:
        raise InvalidInputError(f"tadpole cycle needs >= 3 vertices, got {r}")
    edges = [(v, (v + 1) % r) for v in range(r)]
    if k:
        edges.append((0, r))
        edges += [(v, v + 1) for v in range(r, r + k - 1)]
    return Graph(r + k, edges)


def hourglass() -> Graph:
    """Two triangles meeting in exactly one vertex (vertex 0)."""
    return Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def hourglass_chain(k: int) -> Graph:
    """k hourglass blocks plus a hub adjacent to every degree-2 wing vertex.

    Within each block the center has degree 4 and the four wing vertices
    have degree 2, so the hub is joined to the 4k wings. This wiring gives
    minimum feedback vertex set {hub, centers} of size k+1 and minimum
    connected feedback vertex set 2k+1 (one extra wing per block to reach
    each center), which the exact solvers confirm for small k.
    """
    if k < 1:
        raise InvalidInputError(f"hourglass chain needs >= 1 block, got {k}")
    edges = []
    for b in range(k):
        y = 1 + 5 * b
        a1, a2, b1, b2 = y + 1, y + 2, y + 3, y + 4
        edges += [(y, a1), (y, a2), (a1, a2), (y, b1), (y, b2), (b1, b2)]
        edges += [(0, a1), (0, a2), (0, b1), (0, b2)]
    return Graph(5 * k + 1, edges)


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise InvalidInputError(f"complete bipartite sides must be >= 1, got {m}, {n}")
    return Graph(m + n, ((u, m + v) for u in range(m) for v in range(n)))


def three_p1_witness() -> Graph:
    """Two non-adjacent vertices joined to every vertex of a P_4.

    Vertices 0..3 form the path, 4 and 5 are the non-adjacent pair. The
    graph has no independent set of size 3.
    """
    edges = [(0, 1), (1, 2), (2, 3)]
    edges += [(4, v) for v in range(4)]
    edges += [(5, v) for v in range(4)]
    return Graph(6, edges)


def claw() -> Graph:
    return spider(1, 1, 1)


def gprime(*t: int) -> Graph:
    """Triangle with every edge doubled, then each edge subdivided.

    Accepts six per-chain subdivision counts, or a single count applied to
    all six chains. Every count must be >= 1 so the result is simple.
    """
    if len(t) == 1:
        t = t * 6
    if len(t) != 6:
        raise InvalidInputError(f"gprime takes 1 or 6 subdivision counts, got {len(t)}")
    if any(x < 1 for x in t):
        raise InvalidInputError(f"gprime subdivision counts must be >= 1, got {t}")
    pairs = [(0, 1), (0, 1), (0, 2), (0, 2), (1, 2), (1, 2)]
    edges = []
    nxt = 3
    for (a, b), cnt in zip(pairs, t):
        chain = [a] + list(range(nxt, nxt + cnt)) + [b]
        edges += list(zip(chain, chain[1:]))
        nxt += cnt
    return Graph(nxt, edges)


def copies(s: int, g: Graph) -> Graph:
    """Disjoint union of s copies of g."""
    if s < 0:
        raise InvalidInputError(f"copy count must be >= 0, got {s}")
    return s * g


def p5_free_witness(ell: int) -> Graph:
    """K_{3,ell}: the standard P_5-free example with fvs 2 and cfvs 3."""
    return complete_bipartite(3, ell)


# -- family specs ----------------------------------------------------------

_FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "butterfly": (butterfly, 3),
    "spider": (spider, 3),
    "tadpole": (tadpole, 2),
    "hourglass-chain": (hourglass_chain, 1),
    "complete-bipartite": (complete_bipartite, 2),
    "p5-witness": (p5_free_witness, 1),
    "threeP1-witness": (three_p1_witness, 0),
    "hourglass": (hourglass, 0),
    "claw": (claw, 0),
    "gprime": (gprime, None),  # 1 or 6 parameters
}


@dataclass(frozen=True)
class FamilySpec:
    """A named family member: a generator tag plus integer parameters.

    ``union`` and ``copies`` are structural tags combining sub-specs.
    """

    family: str
    params: tuple[int, ...] = ()
    parts: tuple["FamilySpec", ...] = field(default=())

    def describe(self) -> str:
        if self.family == "union":
            return "+".join(p.describe() for p in self.parts)
        if self.family == "copies":
            return f"{self.params[0]}*({self.parts[0].describe()})"
        if self.params:
            return f"{self.family}:{','.join(map(str, self.params))}"
        return self.family


def from_spec(spec: FamilySpec) -> Graph:
    if spec.family == "union":
        out = Graph(0)
        for part in spec.parts:
            out = disjoint_union(out, from_spec(part))
        return out
    if spec.family == "copies":
        return copies(spec.params[0], from_spec(spec.parts[0]))
    try:
        fn, arity = _FAMILIES[spec.family]
    except KeyError:
        raise InvalidInputError(f"unknown family {spec.family!r}") from None
    if arity is not None and len(spec.params) != arity:
        raise InvalidInputError(
            f"family {spec.family!r} takes {arity} parameters, got {len(spec.params)}"
        )
    return fn(*spec.params)


_ALIASES = {
    "lk": "hourglass-chain",
    "l": "hourglass-chain",
    "kbip": "complete-bipartite",
    "k": "complete-bipartite",
    "t": "spider",
    "d": "tadpole",
    "b": "butterfly",
    # note: bare "3p1" reads as three copies of P_1 under the copies grammar
    "3p1-witness": "threeP1-witness",
    "threep1": "threeP1-witness",
    "threep1-witness": "threeP1-witness",
}

_COMPACT = re.compile(r"^(\d*)\s*([pc])\s*(\d+)$", re.IGNORECASE)
_PREFIXED = re.compile(r"^(\d+)\s*[*x]?\s*\(?(.*?)\)?$")


def _parse_atom(text: str) -> FamilySpec:
    text = text.strip()
    if not text:
        raise InvalidInputError("empty graph spec")
    m = _COMPACT.match(text)
    if m:
        count, kind, size = m.groups()
        fam = "path" if kind.lower() == "p" else "cycle"
        atom = FamilySpec(fam, (int(size),))
        if count:
            return FamilySpec("copies", (int(count),), (atom,))
        return atom
    if ":" in text:
        name, _, raw = text.partition(":")
        name = name.strip().lower()
        name = _ALIASES.get(name, name)
        try:
            params = tuple(int(p) for p in raw.replace(";", ",").split(",") if p.strip())
        except ValueError:
            raise InvalidInputError(f"non-integer parameter in spec {text!r}") from None
        return FamilySpec(name, params)
    m = _PREFIXED.match(text)
    if m and m.group(1) and m.group(2):
        return FamilySpec("copies", (int(m.group(1)),), (_parse_atom(m.group(2)),))
    name = _ALIASES.get(text.lower(), text.lower())
    if name in _FAMILIES and _FAMILIES[name][1] == 0:
        return FamilySpec(name)
    raise InvalidInputError(f"cannot parse graph spec {text!r}")


def parse_spec(text: str) -> FamilySpec:
    """Parse the 'name:params' mini-language, with '+' for disjoint unions.

    Examples: ``butterfly:5,9,4``, ``P6``, ``2P3``, ``P4+P2``, ``Lk:3``,
    ``tadpole:2,5``, ``claw``, ``gprime:2``.
    """
    parts = [p for p in text.split("+") if p.strip()]
    if not parts:
        raise InvalidInputError(f"cannot parse graph spec {text!r}")
    atoms = tuple(_parse_atom(p) for p in parts)
    if len(atoms) == 1:
        return atoms[0]
    return FamilySpec("union", (), atoms)


def graph_from_text(text: str) -> Graph:
    return from_spec(parse_spec(text))


def parse_spec_list(text: str) -> tuple[FamilySpec, ...]:
    """Parse a list of specs: whole string first, then ';'-split, then ','-split."""
    try:
        return (parse_spec(text),)
    except InvalidInputError:
        pass
    for sep in (";", ","):
        if sep in text:
            try:
                return tuple(parse_spec(p) for p in text.split(sep) if p.strip())
            except InvalidInputError:
                continue
    raise InvalidInputError(f"cannot parse spec list {text!r}")
