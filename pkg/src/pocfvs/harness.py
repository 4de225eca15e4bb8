"""Exhaustive small-graph enumeration and corpus-level experiments.

Connected graphs are generated size by size: every connected graph on n+1
vertices arises from a connected graph on n vertices by attaching a new
vertex to a nonempty neighborhood, so each level is built from the
previous one and deduplicated through canonical forms. Forbidden-family
filters prune during growth, which is sound because freeness is hereditary.
Levels are cached per (order, forbidden-family) for the lifetime of the
process; the experiment drivers lean on that cache heavily.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import graph6
from .cover import ClassificationResult, family_covers_all
from .errors import ContradictionError, InvalidInputError, ResourceLimitError
from .generators import butterfly, gprime, hourglass_chain, path
from .graph import Graph
from .iso import canonical_form, canonical_graph, embeds_induced, is_free, is_linear_forest
from .solvers import min_cfvs, min_fvs

MAX_ENUMERATION_ORDER = 9

_LEVEL_CACHE: dict[tuple[int, tuple], list[Graph]] = {}


@dataclass(frozen=True)
class EnumerationSpec:
    """What to enumerate: sizes 1..n_max, optionally forbidding a family."""

    n_max: int
    connected: bool = True
    forbidden: tuple[Graph, ...] = ()

    def __post_init__(self):
        if self.n_max < 1:
            raise InvalidInputError(f"n_max must be >= 1, got {self.n_max}")
        if self.n_max > MAX_ENUMERATION_ORDER:
            raise ResourceLimitError(
                f"internal enumeration stops at {MAX_ENUMERATION_ORDER} vertices"
            )
        if not self.connected:
            raise InvalidInputError("only connected enumeration is supported")


def _family_key(forbidden) -> tuple:
    return tuple(sorted(canonical_form(h).key for h in forbidden))


def enumerate_connected(n: int, forbidden=()) -> list[Graph]:
    """All connected graphs on exactly ``n`` vertices avoiding ``forbidden``.

    One representative per isomorphism class, in canonical-key order.
    """
    if n < 1:
        raise InvalidInputError(f"order must be >= 1, got {n}")
    if n > MAX_ENUMERATION_ORDER:
        raise ResourceLimitError(f"internal enumeration stops at {MAX_ENUMERATION_ORDER}")
    forbidden = tuple(forbidden)
    key = (n, _family_key(forbidden))
    if key in _LEVEL_CACHE:
        return _LEVEL_CACHE[key]
    if n == 1:
        single = Graph(1)
        level = [single] if is_free(single, forbidden) else []
    else:
        prev = enumerate_connected(n - 1, forbidden)
        seen: dict[tuple, Graph] = {}
        base = n - 1
        for g in prev:
            old_edges = g.edges()
            for mask in range(1, 1 << base):
                extra = [(v, base) for v in range(base) if mask >> v & 1]
                h = Graph(n, old_edges + tuple(extra))
                ck = canonical_form(h).key
                if ck in seen:
                    continue
                if forbidden and not is_free(h, forbidden):
                    continue
                seen[ck] = h
        level = [seen[k] for k in sorted(seen)]
    _LEVEL_CACHE[key] = level
    return level


def enumerate_connected_upto(n_max: int, forbidden=()) -> list[Graph]:
    out: list[Graph] = []
    for n in range(1, n_max + 1):
        out.extend(enumerate_connected(n, forbidden))
    return out


def enumerate_all_graphs(n: int) -> list[Graph]:
    """All graphs (connected or not) on exactly ``n`` vertices, up to isomorphism.

    Assembled as multisets of connected pieces, one per partition of n.
    """
    from itertools import combinations_with_replacement

    def partitions(total: int, cap: int):
        if total == 0:
            yield ()
            return
        for first in range(min(total, cap), 0, -1):
            for rest in partitions(total - first, first):
                yield (first, *rest)

    out: dict[tuple, Graph] = {}
    for shape in partitions(n, n):
        pools = [enumerate_connected(k) for k in shape]
        # choose one graph per part; identical part sizes need multisets
        def assemble(idx: int, acc: Graph, last_pick):
            if idx == len(shape):
                ck = canonical_form(acc).key
                out.setdefault(ck, acc)
                return
            for pick, g in enumerate(pools[idx]):
                if idx > 0 and shape[idx] == shape[idx - 1] and pick < last_pick:
                    continue
                assemble(idx + 1, acc + g, pick)

        assemble(0, Graph(0), 0)
    return [out[k] for k in sorted(out)]


# -- experiments -------------------------------------------------------------


@dataclass(frozen=True)
class GraphRecord:
    graph_id: str  # canonical graph6 string
    order: int
    fvs: int
    cfvs: int
    ratio: Fraction | None
    difference: int


@dataclass
class ExperimentReport:
    spec: str
    records: list[GraphRecord] = field(default_factory=list)
    max_ratio: Fraction | None = None
    max_ratio_witness: str | None = None
    max_difference: int | None = None
    max_difference_witness: str | None = None
    forest_count: int = 0

    def aggregate(self) -> None:
        self.max_ratio = None
        self.max_ratio_witness = None
        self.max_difference = None
        self.max_difference_witness = None
        self.forest_count = 0
        for rec in self.records:
            if rec.ratio is None:
                self.forest_count += 1
            elif self.max_ratio is None or rec.ratio > self.max_ratio:
                self.max_ratio = rec.ratio
                self.max_ratio_witness = rec.graph_id
            if self.max_difference is None or rec.difference > self.max_difference:
                self.max_difference = rec.difference
                self.max_difference_witness = rec.graph_id

    def to_dict(self, timestamp: str | None = None) -> dict:
        body = {
            "spec": self.spec,
            "record_count": len(self.records),
            "forest_count": self.forest_count,
            "max_ratio": str(self.max_ratio) if self.max_ratio is not None else None,
            "max_ratio_witness": self.max_ratio_witness,
            "max_difference": self.max_difference,
            "max_difference_witness": self.max_difference_witness,
            "records": [
                {
                    "graph6": rec.graph_id,
                    "n": rec.order,
                    "fvs": rec.fvs,
                    "cfvs": rec.cfvs,
                    "ratio": str(rec.ratio) if rec.ratio is not None else None,
                    "difference": rec.difference,
                }
                for rec in self.records
            ],
        }
        if timestamp is not None:
            body["generated_at"] = timestamp
        return body

    def to_json(self, timestamp: str | None = None) -> str:
        return json.dumps(self.to_dict(timestamp), indent=2)

    def to_text(self) -> str:
        header = f"{'graph6':<24} {'n':>2} {'fvs':>4} {'cfvs':>5} {'ratio':>7} {'diff':>5}"
        lines = [f"report: {self.spec}", header, "-" * len(header)]
        for rec in self.records:
            ratio = str(rec.ratio) if rec.ratio is not None else "-"
            lines.append(
                f"{rec.graph_id:<24} {rec.order:>2} {rec.fvs:>4} {rec.cfvs:>5} "
                f"{ratio:>7} {rec.difference:>5}"
            )
        lines.append("-" * len(header))
        lines.append(
            f"graphs: {len(self.records)}  forests (ratio skipped): {self.forest_count}  "
            f"max ratio: {self.max_ratio} ({self.max_ratio_witness})  "
            f"max difference: {self.max_difference} ({self.max_difference_witness})"
        )
        return "\n".join(lines)


def evaluate_graphs(graphs, spec_label: str, limit: int | None = None) -> ExperimentReport:
    report = ExperimentReport(spec=spec_label)
    for g in graphs:
        if not g.is_connected():
            continue
        f = min_fvs(g, limit).optimum
        c = min_cfvs(g, limit).optimum
        gid = graph6.encode(canonical_graph(g))
        ratio = Fraction(c, f) if f > 0 else None
        report.records.append(GraphRecord(gid, g.n, f, c, ratio, c - f))
    report.records.sort(key=lambda r: (r.order, r.graph_id))
    report.aggregate()
    return report


def max_poc(spec: EnumerationSpec, limit: int | None = None) -> ExperimentReport:
    """Exact ratio/difference extremes over all connected graphs up to n_max."""
    graphs = enumerate_connected_upto(spec.n_max, spec.forbidden)
    label = f"connected graphs n<={spec.n_max}"
    if spec.forbidden:
        label += f", forbidding {len(spec.forbidden)} pattern(s)"
    return evaluate_graphs(graphs, label, limit)


# -- single-graph classification ---------------------------------------------


def tetrachotomy_classify(h: Graph) -> ClassificationResult:
    """Which of the four boundedness regimes a single forbidden graph yields.

    class-i: equality always (h embeds in P_3); class-ii: additive constant
    (h embeds in P_5 + s*P_1 or in s*P_3); class-iii: multiplicative
    constant (h is a linear forest); class-iv: no constant at all.
    """
    n = max(1, h.n)
    if embeds_induced(h, path(3)):
        return ClassificationResult(
            verdict="class-i",
            bounded=True,
            reason="embeds in a 3-vertex path; the two optima always coincide",
            constant=0,
        )
    in_p5sp1 = embeds_induced(h, path(5) + n * path(1))
    in_sp3 = embeds_induced(h, n * path(3))
    if in_p5sp1 or in_sp3:
        candidates = []
        if in_p5sp1:
            s = min(
                s for s in range(n + 1) if embeds_induced(h, path(5) + s * path(1))
            )
            candidates.append(3 * s + 10 if s else 3)
        if in_sp3:
            s = min(s for s in range(1, n + 1) if embeds_induced(h, s * path(3)))
            candidates.append(0 if s == 1 else 12 * s * s - 2 * s - 2)
        return ClassificationResult(
            verdict="class-ii",
            bounded=True,
            reason="embeds in P_5 + s*P_1 or in s*P_3; additive constant suffices",
            constant=min(candidates),
        )
    if is_linear_forest(h):
        return ClassificationResult(
            verdict="class-iii",
            bounded=True,
            reason="a linear forest; multiplicative constant suffices",
            constant=4 * (2 * h.n + 1),
        )
    return ClassificationResult(
        verdict="class-iv",
        bounded=False,
        reason="not a linear forest; butterflies witness unbounded ratio",
        uncovered_pair=family_covers_all([h]).uncovered_pair,
    )


def unboundedness_witnesses(h: Graph, count: int, limit: int | None = None):
    """Concrete graphs certifying the negative side of the classification.

    class-iv: h-free butterflies on an uncovered pair, with exact optima;
    class-iii: the hourglass-chain family; class-i/ii: no witnesses exist.
    """
    verdict = tetrachotomy_classify(h)
    out = []
    if verdict.verdict in ("class-i", "class-ii"):
        return out
    if verdict.verdict == "class-iii":
        for k in range(1, count + 1):
            lk = hourglass_chain(k)
            if not is_free(lk, [path(6), path(4) + path(2)]):
                raise ContradictionError("hourglass chains must avoid P_6 and P_4+P_2")
            if not is_free(lk, [h]):
                raise ContradictionError(
                    "a class-iii pattern contains P_6 or P_4+P_2, so hourglass "
                    "chains must avoid it"
                )
            out.append((lk, min_fvs(lk, limit).optimum, min_cfvs(lk, limit).optimum))
        return out
    i, j = verdict.uncovered_pair
    k = 1
    while len(out) < count:
        b = butterfly(i, j, k)
        if is_free(b, [h]):
            out.append((b, min_fvs(b, limit).optimum, min_cfvs(b, limit).optimum))
        k += 1
    return out


@dataclass
class SubdivisionRow:
    t: int
    order: int
    fvs: int
    cfvs: int
    butterfly_free: bool


@dataclass
class SubdivisionReport:
    rows: list[SubdivisionRow]

    def to_text(self) -> str:
        lines = ["uniform subdivision of the doubled triangle",
                 f"{'t':>3} {'n':>4} {'fvs':>4} {'cfvs':>5} {'butterfly-free':>15}"]
        for row in self.rows:
            lines.append(
                f"{row.t:>3} {row.order:>4} {row.fvs:>4} {row.cfvs:>5} "
                f"{str(row.butterfly_free):>15}"
            )
        return "\n".join(lines)


def _small_butterflies(max_order: int) -> list[Graph]:
    out = []
    for i in range(3, max_order):
        for j in range(i, max_order):
            for k in range(1, max_order):
                if i + j + k - 1 <= max_order:
                    out.append(butterfly(i, j, k))
    return out


def gprime_experiment(t_max: int, pattern_order: int = 12) -> SubdivisionReport:
    """Uniformly subdivided doubled triangles: small fvs, growing cfvs.

    Checks that every instance keeps fvs = 2, that cfvs strictly increases
    with the subdivision count, and that no butterfly on up to
    ``pattern_order`` vertices embeds. Violations contradict certified
    structure and raise.
    """
    if t_max < 1:
        raise InvalidInputError(f"t_max must be >= 1, got {t_max}")
    patterns = _small_butterflies(pattern_order)
    rows = []
    prev_cfvs = None
    for t in range(1, t_max + 1):
        g = gprime(t)
        f = min_fvs(g, limit=g.n).optimum
        c = min_cfvs(g, limit=g.n).optimum
        free = is_free(g, patterns)
        if f != 2:
            raise ContradictionError(f"subdivided doubled triangle t={t} has fvs {f} != 2")
        if prev_cfvs is not None and c <= prev_cfvs:
            raise ContradictionError(
                f"cfvs failed to increase strictly at t={t}: {prev_cfvs} -> {c}"
            )
        if not free:
            raise ContradictionError(f"a butterfly embeds into the t={t} instance")
        prev_cfvs = c
        rows.append(SubdivisionRow(t, g.n, f, c, free))
    return SubdivisionReport(rows)
