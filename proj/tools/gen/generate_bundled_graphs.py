#!/usr/bin/env python3
"""Regenerate data/doro.edges and data/conway_smith.edges.

Both graphs are produced from small explicit constructions using only the
Python standard library. The C++ test suite treats the resulting files as
untrusted input and re-verifies every property it relies on, so this script
is documentation of provenance rather than part of the trusted base.

Doro graph (65 vertices)
    GF(25) is GF(5)[t]/(t^2 - 2). The projective line PG(1,25) has 26 points,
    numbered 0..24 for x in GF(25) (x = a + b t gets index 5a + b) and 25 for
    infinity. A Baer subline is an image of PG(1,5) = {0,1,2,3,4,inf} under
    PGL(2,25); there are 130 of them and PSL(2,25) splits them into two
    orbits of 65. Vertices are the orbit of PG(1,5) itself, each written as a
    sorted 6-tuple of point indices, ordered lexicographically. Two vertices
    are adjacent iff the sublines are disjoint.

Conway-Smith graph (63 vertices)
    Base graph: Kneser graph K(7,2), vertices are the 2-subsets of {0..6} in
    lexicographic order, adjacent iff disjoint. The cover lives on
    {0..20} x Z/3 with vertex (i, g) numbered 3i + g. The voltage x on the
    edges (i < j) is a Z/3 1-cocycle of the clique complex (every triangle
    sums to zero) that is not a coboundary; the cocycle space modulo
    coboundaries is one-dimensional, so up to relabelling there is a single
    nontrivial choice. (i, g) ~ (j, g + x_ij). The script takes the basis
    cocycles of the reduced row echelon solution in order and keeps the first
    whose cover is connected.

Usage: generate_bundled_graphs.py OUTPUT_DIR
"""

import itertools
import sys
from pathlib import Path

P = 5
NONRESIDUE = 2  # t^2 = 2 in GF(25)


def gf_mul(x, y):
    a, b = x
    c, d = y
    return ((a * c + NONRESIDUE * b * d) % P, (a * d + b * c) % P)


def gf_add(x, y):
    return ((x[0] + y[0]) % P, (x[1] + y[1]) % P)


def doro_edges():
    field = [(a, b) for a in range(P) for b in range(P)]
    zero, one = (0, 0), (1, 0)
    inverse = {x: y for x in field for y in field if gf_mul(x, y) == one}

    def normalize(point):
        x, y = point
        if y != zero:
            return (gf_mul(x, inverse[y]), one)
        return (one, zero)

    def index(point):
        x, y = point
        return 25 if y == zero else 5 * x[0] + x[1]

    def act(m, point):
        a, b, c, d = m
        x, y = point
        return normalize((gf_add(gf_mul(a, x), gf_mul(b, y)),
                          gf_add(gf_mul(c, x), gf_mul(d, y))))

    squares = {gf_mul(x, x) for x in field if x != zero}
    minus_one = (P - 1, 0)
    base = [((a, 0), one) for a in range(P)] + [(one, zero)]

    orbit = set()
    for a, b, c, d in itertools.product(field, repeat=4):
        det = gf_add(gf_mul(a, d), gf_mul(minus_one, gf_mul(b, c)))
        if det not in squares:
            continue
        orbit.add(tuple(sorted(index(act((a, b, c, d), p)) for p in base)))
    vertices = sorted(orbit)
    assert len(vertices) == 65
    sets = [set(v) for v in vertices]
    edges = [(i, j) for i in range(65) for j in range(i + 1, 65)
             if not sets[i] & sets[j]]
    return 65, edges


def conway_smith_edges():
    subsets = [set(s) for s in itertools.combinations(range(7), 2)]
    n = len(subsets)
    base = [(i, j) for i in range(n) for j in range(i + 1, n)
            if not subsets[i] & subsets[j]]
    edge_index = {e: t for t, e in enumerate(base)}
    m = len(base)

    rows = []
    for a, b, c in itertools.combinations(range(n), 3):
        if (a, b) in edge_index and (b, c) in edge_index and (a, c) in edge_index:
            row = [0] * m
            row[edge_index[(a, b)]] = 1
            row[edge_index[(b, c)]] = 1
            row[edge_index[(a, c)]] = 2
            rows.append(row)

    pivots = []
    r = 0
    for col in range(m):
        p = next((i for i in range(r, len(rows)) if rows[i][col] % 3), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        scale = 1 if rows[r][col] == 1 else 2
        rows[r] = [(x * scale) % 3 for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(x - f * y) % 3 for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    rows = rows[:r]
    free = [c for c in range(m) if c not in pivots]

    for free_col in free:
        voltage = [0] * m
        voltage[free_col] = 1
        for row, p in zip(rows, pivots):
            voltage[p] = (-sum(row[j] * voltage[j] for j in free)) % 3
        edges = []
        for t, (i, j) in enumerate(base):
            for g in range(3):
                u, w = 3 * i + g, 3 * j + (g + voltage[t]) % 3
                edges.append((min(u, w), max(u, w)))
        if connected(3 * n, edges):
            return 3 * n, sorted(edges)
    raise RuntimeError("no connected cover found")


def connected(n, edges):
    adj = [[] for _ in range(n)]
    for u, w in edges:
        adj[u].append(w)
        adj[w].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def write(path, title, n, edges):
    with open(path, "w") as out:
        out.write(f"# {title}\n")
        out.write("# generated by tools/gen/generate_bundled_graphs.py\n")
        out.write(f"{n} {len(edges)}\n")
        for u, w in edges:
            out.write(f"{u} {w}\n")


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "data")
    out.mkdir(parents=True, exist_ok=True)
    n, edges = doro_edges()
    write(out / "doro.edges", "Doro graph: disjointness graph on one PSL(2,25)-orbit of Baer sublines", n, edges)
    n, edges = conway_smith_edges()
    write(out / "conway_smith.edges", "Conway-Smith graph: Z/3 cover of Kneser K(7,2)", n, edges)


if __name__ == "__main__":
    main()
