"""Vertex typology, global dichotomy, partition recovery, and certificates.

In a graph free of bad bowties, the edges inside every vertex neighborhood
carry a single triangle pattern, which sorts vertices into three classes:

  A: exactly two incident colors, both color-neighborhoods independent, and
     every neighborhood-internal edge wearing a third color;
  B: a single incident color with all neighborhood-internal edges wearing one
     other color (stored as named fields incident_color / hub_color, since
     positional order of the two is ambiguous in common usage);
  C: a dominant color k whose k-neighborhood is internally all-k, all other
     neighbors independent, and cross edges monochromatic per color.

Globally the classes can only coexist in two ways: a dominant-color mode
(B-classes around one C-class) or, for exactly three colors, a symmetric
tripartite mode of A-classes.  Partition recovery turns the classes into
exact-size parts; certificate checking replays the matching-exclusion
conditions through the matching oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .bowtie import Bowtie, enumerate_bowties
from .errors import (
    ModeInconclusive,
    NotAPartition,
    NotATriangle,
    TargetsInfeasible,
)
from .graph import ColoredGraph
from .matching import PredicateResult, is_nearly_empty, is_nearly_monochromatic

DOMINANT = "dominant_color"
TRIPARTITE = "tripartite_a"
INCONCLUSIVE = "inconclusive"


# -- neighborhood profiles -------------------------------------------------


@dataclass(frozen=True)
class NeighborhoodProfile:
    """Partition of a vertex's neighbors by the color of the connecting edge."""

    vertex: int
    by_color: Mapping[int, tuple[int, ...]]

    @property
    def colors(self) -> tuple[int, ...]:
        """Incident colors, ascending."""
        return tuple(sorted(self.by_color))

    @property
    def neighbors(self) -> tuple[int, ...]:
        return tuple(sorted(u for us in self.by_color.values() for u in us))

    def of_color(self, k: int) -> tuple[int, ...]:
        return self.by_color.get(k, ())

    def not_of_color(self, k: int) -> tuple[int, ...]:
        return tuple(
            sorted(u for c, us in self.by_color.items() if c != k for u in us)
        )


def neighborhood_profile(g: ColoredGraph, v: int) -> NeighborhoodProfile:
    buckets: dict[int, list[int]] = {}
    for u in g.neighbors(v):
        buckets.setdefault(g.edge_color(u, v), []).append(u)
    return NeighborhoodProfile(v, {c: tuple(us) for c, us in buckets.items()})


# -- triangle edge typing ----------------------------------------------------


@dataclass(frozen=True)
class TriangleEdgeType:
    """Pattern of the triangle (v, u, w) seen from center v.

    kind "a": two distinct incident colors and a third internal color (j, k, l);
    kind "b": equal incident colors k with internal l != k, stored (k, l);
    kind "c": all three edges color k, or incident {k, l} with internal l,
    stored (k,).  All-equal triangles route to "c", so "b" always has l != k.
    """

    kind: str
    colors: tuple[int, ...]


def triangle_edge_type(g: ColoredGraph, v: int, u: int, w: int) -> TriangleEdgeType:
    for a, b in ((v, u), (v, w), (u, w)):
        if not g.has_edge(a, b):
            raise NotATriangle(f"{a} {b} is not an edge")
    if len({v, u, w}) != 3:
        raise NotATriangle("vertices must be distinct")
    cu = g.edge_color(v, u)
    cw = g.edge_color(v, w)
    ci = g.edge_color(u, w)
    if cu == cw:
        if ci == cu:
            return TriangleEdgeType("c", (cu,))
        return TriangleEdgeType("b", (cu, ci))
    if ci == cu:
        return TriangleEdgeType("c", (cw,))
    if ci == cw:
        return TriangleEdgeType("c", (cu,))
    return TriangleEdgeType("a", (min(cu, cw), max(cu, cw), ci))


# -- vertex classification ---------------------------------------------------


@dataclass(frozen=True)
class TypeALabel:
    pair: tuple[int, int]  # the two incident colors, sorted
    internal: int  # color of every neighborhood-internal edge


@dataclass(frozen=True)
class TypeBLabel:
    incident_color: int  # the single color on edges at the vertex
    hub_color: int  # color of every neighborhood-internal edge


@dataclass(frozen=True)
class TypeCLabel:
    color: int  # the dominant color


Label = Union[TypeALabel, TypeBLabel, TypeCLabel]


@dataclass(frozen=True)
class VertexType:
    """Classification result; vacuous vertices list every consistent label."""

    vertex: int
    label: Label | None  # canonical pick; None when unclassified
    consistent: tuple[Label, ...]
    vacuous: bool
    reason: str | None = None


def _label_sort_key(label: Label) -> tuple:
    if isinstance(label, TypeALabel):
        return (0, label.pair, label.internal)
    if isinstance(label, TypeBLabel):
        return (1, label.incident_color, label.hub_color)
    return (2, label.color)


def verify_label(g: ColoredGraph, v: int, label: Label) -> list[str]:
    """Check a label's definitional clauses directly; returns violations."""
    profile = neighborhood_profile(g, v)
    violations: list[str] = []

    def independent(vertices: Sequence[int], name: str) -> None:
        vs = list(vertices)
        for i, a in enumerate(vs):
            for b in vs[i + 1 :]:
                if g.has_edge(a, b):
                    violations.append(f"{name} contains edge {a} {b}")
                    return

    if isinstance(label, TypeALabel):
        j, k = label.pair
        if set(profile.colors) != {j, k}:
            violations.append(
                f"incident colors {profile.colors} differ from {{{j},{k}}}"
            )
        independent(profile.of_color(j), f"color-{j} neighborhood")
        independent(profile.of_color(k), f"color-{k} neighborhood")
        inside = profile.of_color(j) + profile.of_color(k)
        for i, a in enumerate(inside):
            for b in inside[i + 1 :]:
                if g.has_edge(a, b) and g.edge_color(a, b) != label.internal:
                    violations.append(
                        f"internal edge {a} {b} has color {g.edge_color(a, b)},"
                        f" expected {label.internal}"
                    )
    elif isinstance(label, TypeBLabel):
        if set(profile.colors) != {label.incident_color}:
            violations.append(
                f"incident colors {profile.colors} differ from"
                f" {{{label.incident_color}}}"
            )
        inside = profile.of_color(label.incident_color)
        for i, a in enumerate(inside):
            for b in inside[i + 1 :]:
                if g.has_edge(a, b) and g.edge_color(a, b) != label.hub_color:
                    violations.append(
                        f"internal edge {a} {b} has color {g.edge_color(a, b)},"
                        f" expected {label.hub_color}"
                    )
    else:
        k = label.color
        own = profile.of_color(k)
        for i, a in enumerate(own):
            for b in own[i + 1 :]:
                if g.has_edge(a, b) and g.edge_color(a, b) != k:
                    violations.append(
                        f"edge {a} {b} inside color-{k} neighborhood has"
                        f" color {g.edge_color(a, b)}"
                    )
        independent(profile.not_of_color(k), f"non-{k} neighborhood")
        for ell in profile.colors:
            if ell == k:
                continue
            for a in own:
                for b in profile.of_color(ell):
                    if g.has_edge(a, b) and g.edge_color(a, b) != ell:
                        violations.append(
                            f"cross edge {a} {b} has color {g.edge_color(a, b)},"
                            f" expected {ell}"
                        )
    return violations


def _vacuous_labels(profile: NeighborhoodProfile, r: int) -> tuple[Label, ...]:
    labels: list[Label] = [TypeCLabel(k) for k in range(1, r + 1)]
    colors = profile.colors
    if len(colors) == 1:
        labels.extend(TypeBLabel(colors[0], ell) for ell in range(1, r + 1))
    if len(colors) == 2:
        labels.extend(
            TypeALabel((colors[0], colors[1]), ell)
            for ell in range(1, r + 1)
            if ell not in colors
        )
    return tuple(sorted(labels, key=_label_sort_key))


def classify_vertex(g: ColoredGraph, v: int) -> VertexType:
    """Type a vertex by the uniform triangle pattern of its neighborhood.

    With no neighborhood-internal edge every type holds vacuously for
    suitable parameters; the full consistent-label set is returned with a
    canonical pick so mode detection can treat the vertex as a wildcard.
    """
    profile = neighborhood_profile(g, v)
    nbrs = profile.neighbors
    internal = [
        (u, w)
        for i, u in enumerate(nbrs)
        for w in nbrs[i + 1 :]
        if g.has_edge(u, w)
    ]
    if not internal:
        consistent = _vacuous_labels(profile, g.r)
        pick = TypeCLabel(min(profile.colors) if profile.colors else 1)
        return VertexType(v, pick, consistent, vacuous=True)
    kinds = {triangle_edge_type(g, v, u, w) for u, w in internal}
    if len(kinds) > 1:
        listing = ", ".join(
            f"{t.kind}{t.colors}" for t in sorted(kinds, key=lambda t: (t.kind, t.colors))
        )
        return VertexType(v, None, (), False, reason=f"mixed triangle types: {listing}")
    t = next(iter(kinds))
    if t.kind == "a":
        label: Label = TypeALabel((t.colors[0], t.colors[1]), t.colors[2])
    elif t.kind == "b":
        label = TypeBLabel(t.colors[0], t.colors[1])
    else:
        label = TypeCLabel(t.colors[0])
    violations = verify_label(g, v, label)
    if violations:
        return VertexType(v, None, (), False, reason="; ".join(violations))
    return VertexType(v, label, (label,), False)


# -- global dichotomy --------------------------------------------------------


@dataclass(frozen=True)
class DichotomyReport:
    mode: str  # DOMINANT | TRIPARTITE | INCONCLUSIVE
    k: int | None
    types: tuple[VertexType, ...]  # indexed by vertex
    nonconforming: tuple[int, ...]
    detail: str | None = None
    bad_bowtie: Bowtie | None = None


def _fits_dominant(label: Label, k: int) -> bool:
    if isinstance(label, TypeCLabel):
        return label.color == k
    if isinstance(label, TypeBLabel):
        return label.hub_color == k and label.incident_color != k
    return False


def global_dichotomy(g: ColoredGraph) -> DichotomyReport:
    """Detect the dominant-color or tripartite mode from vertex types.

    Vacuous vertices are wildcards for every mode.  The input is expected to
    be free of bad bowties; when detection fails, a lazy scan reports whether
    that expectation was violated.
    """
    types = tuple(classify_vertex(g, v) for v in g.vertices())

    def lazy_bowtie() -> Bowtie | None:
        return next(enumerate_bowties(g, only_bad=True, cap=1), None)

    unclassified = tuple(t.vertex for t in types if t.label is None)
    if unclassified:
        return DichotomyReport(
            INCONCLUSIVE,
            None,
            types,
            unclassified,
            detail="unclassifiable vertices",
            bad_bowtie=lazy_bowtie(),
        )
    definite = [t for t in types if not t.vacuous]
    if not definite:
        return DichotomyReport(
            INCONCLUSIVE,
            None,
            types,
            (),
            detail="all neighborhoods vacuous",
        )
    best_misfits: tuple[int, ...] | None = None
    best_detail = ""
    for k in range(1, g.r + 1):
        misfits = tuple(t.vertex for t in definite if not _fits_dominant(t.label, k))
        if not misfits:
            return DichotomyReport(DOMINANT, k, types, ())
        if best_misfits is None or len(misfits) < len(best_misfits):
            best_misfits = misfits
            best_detail = f"closest mode: dominant color {k}"
    if g.r == 3:
        misfits = tuple(
            t.vertex for t in definite if not isinstance(t.label, TypeALabel)
        )
        if not misfits:
            return DichotomyReport(TRIPARTITE, None, types, ())
        if best_misfits is None or len(misfits) < len(best_misfits):
            best_misfits = misfits
            best_detail = "closest mode: tripartite"
    return DichotomyReport(
        INCONCLUSIVE,
        None,
        types,
        best_misfits or (),
        detail=best_detail,
        bad_bowtie=lazy_bowtie(),
    )


# -- partition recovery ------------------------------------------------------


@dataclass(frozen=True)
class StructureCertificate:
    """Exact-size partition recovered from the vertex classes.

    parts[i] realizes the part for color i+1 (dominant mode) or part i+1
    (tripartite mode); slack[i] holds its members outside the originating
    class.  Sizes are recorded both as ideal fractions and realized integers.
    """

    mode: str
    k: int | None
    parts: tuple[tuple[int, ...], ...]
    classes: tuple[tuple[int, ...], ...]
    slack: tuple[tuple[int, ...], ...]
    sym_diff: tuple[int, ...]
    ideal_sizes: tuple[Fraction, ...]
    realized_sizes: tuple[int, ...]
    m: int


def _rounded_targets(ideals: Sequence[Fraction], n: int) -> list[int]:
    realized = [int(x + Fraction(1, 2)) for x in ideals]
    remainder = n - sum(realized)
    largest = max(range(len(ideals)), key=lambda i: (ideals[i], -i))
    realized[largest] += remainder
    if any(x < 0 for x in realized) or sum(realized) != n:
        raise TargetsInfeasible(f"cannot realize sizes {realized} summing to {n}")
    return realized


def recover_partition(
    g: ColoredGraph,
    residual: ColoredGraph,
    removed: Iterable[int],
    m: int,
    dichotomy: DichotomyReport | None = None,
) -> StructureCertificate:
    """Build exact-size parts from the residual's vertex classes.

    The residual must be g minus the removed vertices (labels compressed in
    sorted order).  Removed and vacuous vertices are assigned greedily to the
    part whose expected color dominates their incident edges; overfull
    classes are trimmed from the top.  Any deterministic rule works here: the
    slack sets absorb whatever padding decides.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    removed_set = set(removed)
    vmap = tuple(v for v in g.vertices() if v not in removed_set)
    if residual.n != len(vmap):
        raise ValueError("residual size does not match g minus removed")
    if dichotomy is None:
        dichotomy = global_dichotomy(residual)
    if dichotomy.mode == INCONCLUSIVE:
        raise ModeInconclusive(dichotomy.detail or "structural mode not detected")

    n, r = g.n, g.r
    mode = dichotomy.mode
    k = dichotomy.k
    num_parts = r if mode == DOMINANT else 3

    classes: list[list[int]] = [[] for _ in range(num_parts)]
    pool: list[int] = sorted(removed_set)
    for t in dichotomy.types:
        orig = vmap[t.vertex]
        if t.vacuous:
            pool.append(orig)
            continue
        if mode == DOMINANT:
            if isinstance(t.label, TypeCLabel):
                classes[k - 1].append(orig)
            else:
                assert isinstance(t.label, TypeBLabel)
                classes[t.label.incident_color - 1].append(orig)
        else:
            assert isinstance(t.label, TypeALabel)
            classes[t.label.internal - 1].append(orig)

    if mode == DOMINANT:
        ideals = [
            Fraction(n * (r + 1), 2 * r) if i == k - 1 else Fraction(n, 2 * r)
            for i in range(num_parts)
        ]
    else:
        ideals = [Fraction(n, 3)] * 3
    targets = _rounded_targets(ideals, n)

    parts: list[list[int]] = [sorted(c) for c in classes]
    for i in range(num_parts):
        while len(parts[i]) > targets[i]:
            pool.append(parts[i].pop())  # trim highest-index members
    pool.sort()  # pad in ascending vertex order

    def score(v: int, part_index: int) -> int:
        expected = part_index + 1
        if mode == DOMINANT:
            return sum(1 for u in g.neighbors(v) if g.edge_color(u, v) == expected)
        return sum(1 for u in g.neighbors(v) if g.edge_color(u, v) != expected)

    for v in pool:
        open_parts = [i for i in range(num_parts) if len(parts[i]) < targets[i]]
        best = max(open_parts, key=lambda i: (score(v, i), -i))
        parts[best].append(v)

    final_parts = tuple(tuple(sorted(p)) for p in parts)
    final_classes = tuple(tuple(sorted(c)) for c in classes)
    slack = tuple(
        tuple(sorted(set(p) - set(c))) for p, c in zip(final_parts, final_classes)
    )
    sym_diff = tuple(
        len(set(p) ^ set(c)) for p, c in zip(final_parts, final_classes)
    )
    return StructureCertificate(
        mode=mode,
        k=k,
        parts=final_parts,
        classes=final_classes,
        slack=slack,
        sym_diff=sym_diff,
        ideal_sizes=tuple(ideals),
        realized_sizes=tuple(targets),
        m=m,
    )


# -- certificate checking ----------------------------------------------------


@dataclass(frozen=True)
class ConditionVerdict:
    name: str
    passed: bool
    witness: tuple[tuple[int, int], ...] | None  # matching edges on failure


@dataclass(frozen=True)
class CertificateReport:
    certificate: StructureCertificate
    s: int
    conditions: tuple[ConditionVerdict, ...]
    passed: bool


def default_s(r: int, m: int) -> int:
    """Matching-exclusion threshold matched to the stability statements."""
    return 100 * r * r * m


def diagnostics_thresholds(r: int, m: int) -> dict[str, int]:
    """Reference quantities reported for diagnostics, never enforced."""
    return {
        "neighborhood_matching_lower": 6 * r * r * m - 5 * r * m,
        "path_system_budget": 12 * r * r * m - 1,
    }


def _verdict(name: str, result: PredicateResult) -> ConditionVerdict:
    return ConditionVerdict(name, result.holds, result.witness)


def check_certificate(
    g: ColoredGraph, cert: StructureCertificate, s: int
) -> CertificateReport:
    """Replay every matching-exclusion condition of the certificate at size s."""
    if s < 1:
        raise ValueError("s must be at least 1")
    expected_parts = g.r if cert.mode == DOMINANT else 3
    if len(cert.parts) != expected_parts:
        raise NotAPartition(
            f"expected {expected_parts} parts, certificate has {len(cert.parts)}"
        )
    flattened = [v for part in cert.parts for v in part]
    if sorted(flattened) != list(range(g.n)):
        raise NotAPartition("certificate parts do not partition the vertex set")
    conditions: list[ConditionVerdict] = []
    if cert.mode == DOMINANT:
        assert cert.k is not None
        k = cert.k
        vk = cert.parts[k - 1]
        conditions.append(
            _verdict(
                f"inside-part-{k}-nearly-monochromatic-{k}",
                is_nearly_monochromatic(g, vk, s, k),
            )
        )
        for i in range(1, g.r + 1):
            if i == k:
                continue
            conditions.append(
                _verdict(
                    f"between-parts-{i}-{k}-nearly-monochromatic-{i}",
                    is_nearly_monochromatic(g, (cert.parts[i - 1], vk), s, i),
                )
            )
        rest = [v for i, part in enumerate(cert.parts) if i != k - 1 for v in part]
        conditions.append(
            _verdict("outside-dominant-part-nearly-empty", is_nearly_empty(g, rest, s))
        )
    else:
        for i in range(1, 4):
            conditions.append(
                _verdict(
                    f"inside-part-{i}-nearly-empty",
                    is_nearly_empty(g, cert.parts[i - 1], s),
                )
            )
        for i in range(1, 4):
            for j in range(i + 1, 4):
                k = 6 - i - j
                conditions.append(
                    _verdict(
                        f"between-parts-{i}-{j}-nearly-monochromatic-{k}",
                        is_nearly_monochromatic(
                            g, (cert.parts[i - 1], cert.parts[j - 1]), s, k
                        ),
                    )
                )
    return CertificateReport(
        certificate=cert,
        s=s,
        conditions=tuple(conditions),
        passed=all(c.passed for c in conditions),
    )


def certificate_report_to_json(report: CertificateReport) -> dict:
    cert = report.certificate
    return {
        "mode": cert.mode,
        "k": cert.k,
        "parts": [list(p) for p in cert.parts],
        "classes": [list(c) for c in cert.classes],
        "slack": [list(w) for w in cert.slack],
        "sym_diff": list(cert.sym_diff),
        "ideal_sizes": [str(x) for x in cert.ideal_sizes],
        "realized_sizes": list(cert.realized_sizes),
        "m": cert.m,
        "s": report.s,
        "passed": report.passed,
        "conditions": [
            {
                "name": c.name,
                "pass": c.passed,
                "witness": [list(e) for e in c.witness] if c.witness else None,
            }
            for c in report.conditions
        ],
    }
