"""Brute-force reference implementations, deliberately naive.

None of these share code paths with the library beyond the Graph container.
"""

from __future__ import annotations

from itertools import combinations, permutations

from matchcover.graph import Graph


def max_matching_size(g: Graph) -> int:
    """Exhaustive: the lowest vertex is either left unmatched or matched to a neighbour."""
    edges = g.edges

    def best(alive: frozenset[int]) -> int:
        if not alive:
            return 0
        v = min(alive)
        rest = alive - {v}
        result = best(rest)
        for u in rest:
            if g.has_edge(u, v):
                result = max(result, 1 + best(rest - {u}))
        return result

    return best(frozenset(range(g.n))) if edges else 0


def perfect_matchings_by_subsets(g: Graph) -> list[frozenset[tuple[int, int]]]:
    """Every n/2-subset of the edges that covers all vertices."""
    if g.n % 2:
        return []
    out = []
    for combo in combinations(g.edges, g.n // 2):
        covered = {v for e in combo for v in e}
        if len(covered) == g.n:
            out.append(frozenset(combo))
    return out


def odd_cycles_by_permutation(g: Graph) -> set[frozenset[tuple[int, int]]]:
    """Odd cycles as edge sets, from vertex subsets and all their orderings."""
    found = set()
    for k in range(3, g.n + 1, 2):
        for sub in combinations(range(g.n), k):
            first, rest = sub[0], sub[1:]
            for perm in permutations(rest):
                seq = (first,) + perm
                if all(g.has_edge(seq[i], seq[(i + 1) % k]) for i in range(k)):
                    found.add(frozenset(tuple(sorted((seq[i], seq[(i + 1) % k]))) for i in range(k)))
    return found


def has_pm_bruteforce(g: Graph, vertices: set[int]) -> bool:
    if not vertices:
        return True
    if len(vertices) % 2:
        return False
    v = min(vertices)
    return any(
        u in vertices and has_pm_bruteforce(g, vertices - {u, v})
        for u in g.neighbors(v)
    )


def is_solid_bruteforce(g: Graph) -> bool:
    cycles = [frozenset(v for e in c for v in e) for c in odd_cycles_by_permutation(g)]
    cycles = list(set(cycles))
    everything = set(range(g.n))
    for a, b in combinations(cycles, 2):
        if not a & b and has_pm_bruteforce(g, everything - a - b):
            return False
    return True


def open_alternating_path_dfs(g: Graph, m: set[tuple[int, int]], x: int, y: int) -> bool:
    """Search simple paths / odd cycles edge by edge."""
    def in_m(a, b):
        return (min(a, b), max(a, b)) in m

    if x != y:
        def walk(v, used, last_in_m):
            for u in g.neighbors(v):
                e_in = in_m(v, u)
                if e_in == last_in_m:
                    continue
                if u == y:
                    if not e_in:
                        return True
                    continue
                if u in used:
                    continue
                if walk(u, used | {u}, e_in):
                    return True
            return False

        return walk(x, {x}, True)

    def walk_cycle(v, path, used, last_in_m):
        for u in g.neighbors(v):
            e_in = in_m(v, u)
            if e_in == last_in_m:
                continue
            if u == x:
                if not e_in and len(path) >= 3:
                    return True
                continue
            if u in used:
                continue
            if walk_cycle(u, path + [u], used | {u}, e_in):
                return True
        return False

    return walk_cycle(x, [x], {x}, True)


def tight_shores_by_definition(g: Graph, pms) -> list[frozenset[int]]:
    out = []
    for k in range(1, g.n):
        for sub in combinations(range(g.n), k):
            s = set(sub)
            if all(sum((u in s) != (v in s) for u, v in pm) == 1 for pm in pms):
                out.append(frozenset(s))
    return out
