"""Graph corpora: exhaustive small-graph enumeration, graph6 files, named families,
and the filter pipeline applied while streaming them.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .families import FamilySpec, generate
from .graph import Graph, is_bipartite, is_connected, is_k_connected, iter_bits
from .graph6 import Graph6Error, read_graph6_file, read_graph6_lines
from .isomorphism import IsomorphismClasses
from .structure import _nonsolid_witness, is_brick, is_matching_covered

BUILTIN_MAX_ORDER = 8


class CorpusError(ValueError):
    pass


@lru_cache(maxsize=None)
def graphs_of_order(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of simple graphs on ``n`` vertices.

    Built by vertex extension: every graph arises from deleting one of its
    maximum-degree vertices, so each class of order ``n - 1`` is extended by a
    new vertex whose degree is at least every other degree, then deduplicated.
    """
    if n < 0 or n > BUILTIN_MAX_ORDER:
        raise CorpusError(f"builtin enumeration supports orders 0..{BUILTIN_MAX_ORDER}, got {n}")
    if n <= 1:
        return (Graph(n),)
    classes = IsomorphismClasses()
    for parent in graphs_of_order(n - 1):
        degs = parent.degrees()
        for nb in range(1 << (n - 1)):
            k = nb.bit_count()
            if any(degs[v] + (nb >> v & 1) > k for v in range(n - 1)):
                continue
            adj = list(parent.adj)
            for v in iter_bits(nb):
                adj[v] |= 1 << (n - 1)
            adj.append(nb)
            classes.add(Graph.from_adjacency(adj))
    return tuple(classes.representatives)


def _solid_brick(g: Graph) -> bool:
    return is_brick(g) and _nonsolid_witness(g) is None


FILTERS: dict[str, Callable[[Graph], bool]] = {
    "connected": lambda g: g.n >= 1 and is_connected(g),
    "even-order": lambda g: g.n % 2 == 0,
    "min-degree-3": lambda g: g.n > 0 and g.min_degree() >= 3,
    "3-connected": lambda g: is_k_connected(g, 3),
    "nonbipartite": lambda g: not is_bipartite(g),
    "matching-covered": is_matching_covered,
    "brick": is_brick,
    "solid": _solid_brick,
}


@dataclass(frozen=True)
class CorpusSource:
    """Where graphs come from and which filters they must pass, in order.

    Exactly one of ``path``, ``orders``, ``families`` or ``graphs`` is set;
    use the classmethod constructors.
    """

    description: str
    path: str | None = None
    orders: tuple[int, ...] | None = None
    families: tuple[FamilySpec, ...] | None = None
    graphs: tuple[Graph, ...] | None = None
    filters: tuple[str, ...] = ()

    def __post_init__(self):
        given = [x is not None for x in (self.path, self.orders, self.families, self.graphs)]
        if sum(given) != 1:
            raise CorpusError("a corpus source needs exactly one origin")
        for f in self.filters:
            if f not in FILTERS:
                raise CorpusError(f"unknown filter {f!r}; known: {', '.join(FILTERS)}")
        if self.orders is not None:
            bad = [k for k in self.orders if not 0 <= k <= BUILTIN_MAX_ORDER]
            if bad:
                raise CorpusError(f"builtin enumeration is capped at order {BUILTIN_MAX_ORDER}, got {bad}")

    @classmethod
    def file(cls, path: str | Path, filters: Iterable[str] = ()) -> CorpusSource:
        return cls(f"graph6 file {path}", path=str(path), filters=tuple(filters))

    @classmethod
    def builtin(
        cls, max_order: int = BUILTIN_MAX_ORDER, min_order: int = 1, filters: Iterable[str] = ()
    ) -> CorpusSource:
        orders = tuple(range(min_order, max_order + 1))
        desc = f"all graphs of order {min_order}" if min_order == max_order else (
            f"all graphs of order {min_order}..{max_order}")
        return cls(desc + " (up to isomorphism)", orders=orders, filters=tuple(filters))

    @classmethod
    def from_families(cls, specs: Iterable[FamilySpec | tuple[str, int | None]],
                      filters: Iterable[str] = ()) -> CorpusSource:
        specs = tuple(s if isinstance(s, FamilySpec) else FamilySpec(*s) for s in specs)
        return cls("families " + ", ".join(map(str, specs)), families=specs, filters=tuple(filters))

    @classmethod
    def from_graphs(cls, graphs: Iterable[Graph], description: str = "explicit graphs",
                    filters: Iterable[str] = ()) -> CorpusSource:
        return cls(description, graphs=tuple(graphs), filters=tuple(filters))

    def with_filters(self, *filters: str) -> CorpusSource:
        return CorpusSource(self.description, self.path, self.orders, self.families,
                            self.graphs, self.filters + tuple(filters))


@dataclass
class CorpusStream:
    """Iterator over the graphs of a source that pass every filter.

    ``stage_counts`` holds ``(stage, count)`` pairs: how many graphs were read
    and how many survived each filter so far.
    """

    source: CorpusSource
    stage_counts: list[tuple[str, int]] = field(default_factory=list)

    def __post_init__(self):
        self.stage_counts = [("read", 0)] + [(f, 0) for f in self.source.filters]
        self._it = self._run()

    def __iter__(self) -> Iterator[Graph]:
        return self

    def __next__(self) -> Graph:
        return next(self._it)

    def _raw(self) -> Iterator[Graph]:
        src = self.source
        if src.path is not None:
            if src.path == "-":
                yield from read_graph6_lines(sys.stdin, "<stdin>")
                return
            p = Path(src.path)
            if not p.is_file():
                raise CorpusError(f"cannot read corpus file {src.path}")
            try:
                yield from read_graph6_file(p)
            except Graph6Error as exc:
                raise CorpusError(str(exc)) from None
            return
        if src.orders is not None:
            for k in src.orders:
                yield from graphs_of_order(k)
            return
        if src.families is not None:
            for spec in src.families:
                yield generate(spec)
            return
        yield from src.graphs

    def _run(self) -> Iterator[Graph]:
        preds = [FILTERS[f] for f in self.source.filters]
        counts = self.stage_counts
        for g in self._raw():
            counts[0] = (counts[0][0], counts[0][1] + 1)
            for i, pred in enumerate(preds, 1):
                if not pred(g):
                    break
                counts[i] = (counts[i][0], counts[i][1] + 1)
            else:
                yield g


def ingest(source: CorpusSource) -> CorpusStream:
    return CorpusStream(source)
