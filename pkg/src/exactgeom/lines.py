"""The 27 lines on a smooth cubic surface and their Weyl-group symmetry.

The Picard lattice has basis h, e1, ..., e6 with pairing
<u, w> = u0 w0 - sum_i ui wi and canonical class K = -3h + sum_i ei.
Lines are the 27 classes l with <l, l> = <l, K> = -1: the six exceptional
classes ai = ei, the six conic classes bi = 2h - sum_{l != i} el, and the
fifteen cij = h - ei - ej.  Two distinct lines meet exactly when their
pairing is 1, giving the 10-regular strongly regular incidence graph with
parameters (27, 10, 1, 5).

The symmetry group is generated by the six reflections in the roots
e1-e2, ..., e5-e6, h-e1-e2-e3 (norm -2, orthogonal to K); full enumeration
by closure gives the group of order 51840 acting on the 27 labels.  The
stabilizer of a line has order 1920 and splits the remaining lines into
orbits of sizes 10 (the incident lines) and 16 (the skew ones).  Through
each line pass exactly five tritangent planes, pairing up its ten incident
lines into five coplanar pairs {m, m'} with l + m + m' = -K.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .errors import VerificationError

PicClass = tuple[int, int, int, int, int, int, int]
Perm = tuple[int, ...]

CANONICAL_CLASS: PicClass = (-3, 1, 1, 1, 1, 1, 1)


def pairing(u: PicClass, w: PicClass) -> int:
    """Signature (1,6) intersection pairing on the Picard lattice."""
    return u[0] * w[0] - sum(ui * wi for ui, wi in zip(u[1:], w[1:]))


def _build_lines() -> tuple[tuple[str, ...], dict[str, PicClass]]:
    classes: dict[str, PicClass] = {}
    for i in range(1, 7):
        vec = [0] * 7
        vec[i] = 1
        classes[f"a{i}"] = tuple(vec)
    for i in range(1, 7):
        vec = [2] + [-1] * 6
        vec[i] = 0
        classes[f"b{i}"] = tuple(vec)
    for i, j in itertools.combinations(range(1, 7), 2):
        vec = [1] + [0] * 6
        vec[i] = -1
        vec[j] = -1
        classes[f"c{i}{j}"] = tuple(vec)
    return tuple(classes), classes


LABELS, LINE_CLASSES = _build_lines()
_INDEX = {label: k for k, label in enumerate(LABELS)}
_CLASS_TO_LABEL = {vec: label for label, vec in LINE_CLASSES.items()}

SIMPLE_ROOTS: tuple[PicClass, ...] = tuple(
    [
        tuple([0] + [1 if k == i else -1 if k == i + 1 else 0 for k in range(1, 7)])
        for i in range(1, 6)
    ]
    + [(1, -1, -1, -1, 0, 0, 0)]
)


def is_line_class(vec: PicClass) -> bool:
    return pairing(vec, vec) == -1 and pairing(vec, CANONICAL_CLASS) == -1


def all_lines() -> dict[str, PicClass]:
    """The 27 labelled line classes."""
    return dict(LINE_CLASSES)


def line_class(label: str) -> PicClass:
    try:
        return LINE_CLASSES[label]
    except KeyError:
        raise ValueError(f"unknown line label {label!r}") from None


def exhaustive_box_solutions() -> list[PicClass]:
    """Brute-force search for line classes with |a0| <= 3 and |ai| <= 2.

    Independent of the constructive list above; used to cross-check that the
    equations <l,l> = <l,K> = -1 have exactly the 27 known solutions there.
    """
    out = []
    span = range(-2, 3)
    for a0 in range(-3, 4):
        for rest in itertools.product(span, repeat=6):
            vec = (a0, *rest)
            if is_line_class(vec):
                out.append(vec)
    return out


def incidence(label1: str, label2: str) -> bool:
    """Whether two distinct lines meet (pairing 1; skew lines pair to 0)."""
    if label1 == label2:
        raise ValueError("incidence is defined for distinct lines only")
    return pairing(line_class(label1), line_class(label2)) == 1


@functools.cache
def incidence_graph() -> dict[str, frozenset[str]]:
    graph = {}
    for label in LABELS:
        graph[label] = frozenset(
            other for other in LABELS if other != label and incidence(label, other)
        )
    return graph


def srg_parameters() -> tuple[int, int, int, int]:
    """(n, k, lambda, mu) of the incidence graph, verifying strong regularity."""
    graph = incidence_graph()
    degrees = {len(nb) for nb in graph.values()}
    if len(degrees) != 1:
        raise VerificationError(f"incidence graph is not regular: degrees {degrees}")
    k = degrees.pop()
    lambdas, mus = set(), set()
    for x, y in itertools.combinations(LABELS, 2):
        common = len(graph[x] & graph[y])
        if y in graph[x]:
            lambdas.add(common)
        else:
            mus.add(common)
    if len(lambdas) != 1 or len(mus) != 1:
        raise VerificationError("incidence graph is not strongly regular")
    return (len(LABELS), k, lambdas.pop(), mus.pop())


def incidence_dot() -> str:
    """Graphviz DOT source for the incidence graph."""
    lines_out = ["graph line_incidence {"]
    for x, y in itertools.combinations(LABELS, 2):
        if incidence(x, y):
            lines_out.append(f"  {x} -- {y};")
    lines_out.append("}")
    return "\n".join(lines_out)


# --- the reflection group ----------------------------------------------------


def reflect(vec: PicClass, root: PicClass) -> PicClass:
    """Reflection in a norm -2 root: v -> v + <v, r> r."""
    factor = pairing(vec, root)
    return tuple(v + factor * r for v, r in zip(vec, root))


def _reflection_perm(root: PicClass) -> Perm:
    images = []
    for label in LABELS:
        image = reflect(line_class(label), root)
        target = _CLASS_TO_LABEL.get(image)
        if target is None:
            raise RuntimeError(f"reflection in {root} does not permute the line classes")
        images.append(_INDEX[target])
    return tuple(images)


def identity_perm() -> Perm:
    return tuple(range(len(LABELS)))


def compose(p: Perm, q: Perm) -> Perm:
    """The permutation applying q first, then p."""
    return tuple(p[i] for i in q)


def perm_to_label_map(p: Perm) -> dict[str, str]:
    return {LABELS[i]: LABELS[p[i]] for i in range(len(LABELS))}


@dataclass(frozen=True)
class PermGroup:
    """A permutation group on the 27 labels, enumerated by closure."""

    generators: tuple[Perm, ...]
    elements: frozenset[Perm]

    @property
    def order(self) -> int:
        return len(self.elements)

    def orbit(self, label: str) -> frozenset[str]:
        idx = _INDEX[label]
        return frozenset(LABELS[g[idx]] for g in self.elements)

    def orbits(self) -> list[frozenset[str]]:
        seen: set[str] = set()
        out = []
        for label in LABELS:
            if label in seen:
                continue
            orb = self.orbit(label)
            seen |= orb
            out.append(orb)
        return out


def enumerate_closure(generators: tuple[Perm, ...]) -> frozenset[Perm]:
    identity = identity_perm()
    elements = {identity}
    frontier = [identity]
    while frontier:
        fresh = []
        for p in frontier:
            for g in generators:
                q = compose(g, p)
                if q not in elements:
                    elements.add(q)
                    fresh.append(q)
        frontier = fresh
    return frozenset(elements)


@functools.cache
def weyl_group() -> PermGroup:
    """The full symmetry group of the configuration, order 51840."""
    generators = tuple(_reflection_perm(root) for root in SIMPLE_ROOTS)
    return PermGroup(generators, enumerate_closure(generators))


@functools.cache
def stabilizer(label: str) -> PermGroup:
    """The subgroup fixing one line, order 1920, found by filtering."""
    idx = _INDEX[label]
    elements = frozenset(g for g in weyl_group().elements if g[idx] == idx)
    # found by filtering the full enumeration; no generating set is tracked
    return PermGroup((), elements)


@dataclass(frozen=True)
class FiberClasses:
    """The three incidence classes of a marked line: itself, the 10 lines
    meeting it, and the 16 skew to it."""

    marked: str
    meeting: frozenset[str]
    skew: frozenset[str]


def classify_fiber(label: str) -> FiberClasses:
    neighbors = incidence_graph()[label]
    skew = frozenset(x for x in LABELS if x != label and x not in neighbors)
    return FiberClasses(label, neighbors, skew)


def tritangent_pairs(label: str) -> tuple[frozenset[str], ...]:
    """The five coplanar pairs {m, m'} through a line: l + m + m' = -K.

    The ten lines meeting l are covered exactly once and the members of each
    pair meet each other.
    """
    target = tuple(-k - c for k, c in zip(CANONICAL_CLASS, line_class(label)))
    neighbors = sorted(incidence_graph()[label])
    pairs = []
    for m, mp in itertools.combinations(neighbors, 2):
        vec = tuple(x + y for x, y in zip(line_class(m), line_class(mp)))
        if vec == target:
            if not incidence(m, mp):
                raise VerificationError(f"coplanar pair {m}, {mp} fails to meet")
            pairs.append(frozenset((m, mp)))
    covered = sorted(x for pair in pairs for x in pair)
    if len(pairs) != 5 or covered != neighbors:
        raise VerificationError(f"tritangent pairs of {label} do not form a perfect matching")
    return tuple(pairs)


def verification_summary(marked: str = "a1") -> dict:
    """All line-configuration facts in one machine-readable bundle."""
    group = weyl_group()
    stab = stabilizer(marked)
    fiber = classify_fiber(marked)
    orbit_partition = stab.orbits()
    orbit_sizes = sorted(len(o) for o in orbit_partition)
    orbit_sets = {frozenset(o) for o in orbit_partition}
    incidence_sets = {frozenset((marked,)), fiber.meeting, fiber.skew}
    pairing_ok = all(
        pairing(line_class(LABELS[g[i]]), line_class(LABELS[g[j]]))
        == pairing(line_class(LABELS[i]), line_class(LABELS[j]))
        for g in group.generators
        for i in range(len(LABELS))
        for j in range(i + 1, len(LABELS))
    )
    matching = tritangent_pairs(marked)
    return {
        "line_count": len(LABELS),
        "box_search_count": len(exhaustive_box_solutions()),
        "weyl_order": group.order,
        "stabilizer_order": stab.order,
        "index": group.order // stab.order,
        "orbit_sizes": orbit_sizes,
        "orbits_match_incidence": orbit_sets == incidence_sets,
        "weyl_transitive": len(group.orbits()) == 1,
        "generators_preserve_pairing": pairing_ok,
        "srg": list(srg_parameters()),
        "tritangent_pair_count": len(matching),
        "tritangent_pairs": [sorted(pair) for pair in matching],
        "marked_line": marked,
    }
