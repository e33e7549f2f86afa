#!/usr/bin/env python3
"""Writes the example-graph fixtures under data/.

Only cycle weights, SCC sizes, arc counts and per-SCC weight ranges of the
example graph are known, so per-arc weights are a solution of the linear
system "sum of arc weights along each listed cycle = its weight". The system
is underdetermined; free arcs are fixed below and the rest are solved for.
Every constraint is re-checked before anything is written.
"""
import pathlib
import sys

import sympy

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"

# name -> (nodes, arc list as (tail, head, symbol), cycles as (node path, weight),
#          fixed symbol values, (w_min, w_max))
SCCS = {
    "scc1": ([1], [(1, 1, "s")], [([1, 1], 1208)], {}, (1208, 1208)),
    "scc2": ([2, 3], [(2, 3, "p"), (3, 2, "q")], [([2, 3, 2], 6838)], {"p": 2366}, (2366, 4472)),
    "scc3": (
        [4, 5, 6, 7, 8],
        [(4, 4, "l"), (4, 6, "a"), (6, 7, "b"), (4, 7, "c"), (7, 8, "d"), (8, 5, "e"), (5, 4, "f")],
        [([4, 4], 6510), ([4, 6, 7, 8, 5, 4], 21718), ([4, 7, 8, 5, 4], 13744)],
        {"a": 7879, "d": 1439, "e": 2430, "f": 2430},
        (1439, 7879),
    ),
    "scc4": (
        [9, 10, 11, 12],
        [(9, 9, "l9"), (11, 11, "l11"), (9, 11, "a"), (11, 10, "b"), (10, 9, "c"), (11, 9, "d"), (9, 12, "e"),
         (12, 11, "f")],
        [([9, 9], 6640), ([11, 11], 887), ([9, 11, 10, 9], 19942), ([9, 11, 9], 10036),
         ([9, 12, 11, 10, 9], 18883), ([9, 12, 11, 9], 8977)],
        {"a": 8136, "b": 5000, "e": 3000},
        (887, 8136),
    ),
    "scc5": (
        [13, 14, 15, 16, 17],
        [(13, 15, "a"), (15, 14, "b"), (14, 13, "c"), (15, 16, "d"), (16, 17, "e"), (17, 15, "f")],
        [([13, 15, 14, 13], 15334), ([15, 16, 17, 15], 9682)],
        {"a": 6769, "b": 4000, "d": 1155, "e": 4000},
        (1155, 6769),
    ),
    "scc6": ([18], [(18, 18, "s")], [([18, 18], 951)], {}, (951, 951)),
}

# Inter-component arcs; they form a DAG over the components.
BRIDGES = [(1, 2), (3, 4), (2, 6), (8, 9), (12, 13), (14, 18), (17, 18)]
BRIDGE_WEIGHT = 1000


def solve(arcs, cycles, fixed):
    syms = {name: sympy.Symbol(name) for _, _, name in arcs}
    by_pair = {(t, h): name for t, h, name in arcs}
    eqs = [sympy.Eq(syms[k], v) for k, v in fixed.items()]
    for path, weight in cycles:
        eqs.append(sympy.Eq(sum(syms[by_pair[(path[i], path[i + 1])]] for i in range(len(path) - 1)), weight))
    sol = sympy.solve(eqs, list(syms.values()), dict=True)
    if len(sol) != 1 or len(sol[0]) != len(syms):
        sys.exit("system is not determined by the fixed values")
    return {name: int(sol[0][s]) for name, s in syms.items()}, by_pair


def component_arcs(name):
    nodes, arcs, cycles, fixed, (lo, hi) = SCCS[name]
    values, by_pair = solve(arcs, cycles, fixed)
    out = [(t, h, values[n]) for t, h, n in arcs]
    ws = [w for _, _, w in out]
    assert min(ws) == lo and max(ws) == hi, (name, ws)
    weight = {(t, h): w for t, h, w in out}
    for path, total in cycles:
        assert sum(weight[(path[i], path[i + 1])] for i in range(len(path) - 1)) == total, (name, path)
    return nodes, out


def write(path, n, arcs, comment):
    lines = [f"# {comment}", f"p {n} {len(arcs)}"] + [f"a {t} {h} {w}" for t, h, w in arcs]
    path.write_text("\n".join(lines) + "\n")


def main():
    DATA.mkdir(exist_ok=True)
    whole = []
    for name in SCCS:
        nodes, arcs = component_arcs(name)
        whole += arcs
        if name in ("scc3", "scc4", "scc5"):
            base = nodes[0] - 1
            local = [(t - base, h - base, w) for t, h, w in arcs]
            write(DATA / f"{name}.graph", len(nodes), local, f"{name} of the example graph, nodes renumbered from {nodes[0]}")
    whole += [(t, h, BRIDGE_WEIGHT) for t, h in BRIDGES]
    assert len(whole) == 32
    write(DATA / "fig1.graph", 18, whole, "example graph: 18 nodes, 6 strongly connected components")


if __name__ == "__main__":
    main()
