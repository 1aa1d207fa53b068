"""Named graph families used as fixtures and verification witnesses."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, complement

FAMILIES = ("wheel", "cycle", "complete", "prism", "moebius-ladder", "petersen", "c6-complement")

_MIN_ORDER = {"wheel": 4, "cycle": 3, "complete": 1, "prism": 6, "moebius-ladder": 6}
_FIXED_ORDER = {"petersen": 10, "c6-complement": 6}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    order: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        fixed = _FIXED_ORDER.get(self.family)
        if fixed is not None:
            if self.order not in (None, fixed):
                raise ValueError(f"{self.family} has order {fixed}, got {self.order}")
            object.__setattr__(self, "order", fixed)
            return
        if self.order is None:
            raise ValueError(f"{self.family} needs an order")
        lo = _MIN_ORDER[self.family]
        if self.order < lo:
            raise ValueError(f"{self.family} order must be at least {lo}, got {self.order}")
        if self.family in ("prism", "moebius-ladder") and self.order % 2:
            raise ValueError(f"{self.family} order must be even, got {self.order}")

    def __str__(self) -> str:
        return self.family if self.family in _FIXED_ORDER else f"{self.family}({self.order})"


def wheel(n: int) -> Graph:
    """W_n: hub 0 joined to the rim cycle 1, 2, ..., n-1."""
    FamilySpec("wheel", n)
    rim = list(range(1, n))
    edges = [(0, r) for r in rim]
    edges += [(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))]
    return Graph(n, edges)


def cycle(n: int) -> Graph:
    FamilySpec("cycle", n)
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    FamilySpec("complete", n)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def prism(n: int) -> Graph:
    """C_{n/2} x K_2: outer cycle 0..k-1, inner cycle k..2k-1, rungs i -- i+k."""
    FamilySpec("prism", n)
    k = n // 2
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, i + k) for i in range(k)]
    return Graph(n, edges)


def moebius_ladder(n: int) -> Graph:
    """Cycle 0..n-1 plus the n/2 long diagonals i -- i+n/2."""
    FamilySpec("moebius-ladder", n)
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, i + n // 2) for i in range(n // 2)]
    return Graph(n, edges)


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph(10, edges)


def c6_complement() -> Graph:
    return complement(cycle(6))


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def generate(spec: FamilySpec | str, order: int | None = None) -> Graph:
    """Build a family member from a ``FamilySpec`` or a ``(family, order)`` pair."""
    if isinstance(spec, str):
        spec = FamilySpec(spec, order)
    builders = {
        "wheel": wheel,
        "cycle": cycle,
        "complete": complete,
        "prism": prism,
        "moebius-ladder": moebius_ladder,
    }
    if spec.family == "petersen":
        return petersen()
    if spec.family == "c6-complement":
        return c6_complement()
    return builders[spec.family](spec.order)
