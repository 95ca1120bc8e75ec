"""Naive brute-force oracle used to freeze regression constants for the C++ tests.

Works on explicit vertex tuples and frozenset edges; shares no code or indexing
scheme with the library.
"""
import itertools
from fractions import Fraction
from math import comb

RED, BLUE = 0, 1


def q3_edges():
    verts = list(itertools.product((0, 1), repeat=3))
    edges = []
    for v in verts:
        for w in verts:
            if v < w and sum(a != b for a, b in zip(v, w)) == 1:
                edges.append(frozenset((v, w)))
    return verts, edges


VERTS, EDGES = q3_edges()


def colour_map_from_bits(bits):
    # bit layout: direction d major, then remaining two coordinates (low first)
    cmap = {}
    for d in range(3):
        others = [i for i in range(3) if i != d]
        for k in range(4):
            v = [0, 0, 0]
            v[others[0]] = k & 1
            v[others[1]] = (k >> 1) & 1
            w = list(v)
            w[d] = 1
            cmap[frozenset((tuple(v), tuple(w)))] = (bits >> (4 * d + k)) & 1
    return cmap


def antipode(v):
    return tuple(1 - x for x in v)


def paths(v):
    out = []
    for perm in itertools.permutations(range(3)):
        cur = v
        p = [cur]
        for d in perm:
            cur = tuple(1 - x if i == d else x for i, x in enumerate(cur))
            p.append(cur)
        out.append(p)
    return out


def changes(cmap, p):
    cols = [cmap[frozenset((p[i], p[i + 1]))] for i in range(len(p) - 1)]
    return sum(cols[i] != cols[i + 1] for i in range(len(cols) - 1))


def is_good(cmap):
    pairs = [v for v in VERTS if v < antipode(v)]
    best = min(sum(t) for t in itertools.product(*[[changes(cmap, p) for p in paths(v)] for v in pairs]))
    return best <= 2


def main():
    n_bad = 0
    l6_hits = 0
    max_min = 0
    for bits in range(4096):
        cmap = colour_map_from_bits(bits)
        if not is_good(cmap):
            n_bad += 1
        for v in VERTS:
            if all(changes(cmap, p) == 2 for p in paths(v)):
                l6_hits += 1
                break
        m = min(changes(cmap, p) for v in VERTS for p in paths(v))
        max_min = max(max_min, m)
    print("N_bad", n_bad)
    print("two_change_pair_hypothesis_colourings", l6_hits)
    print("max over Q3 of min antipodal changes", max_min)


if __name__ == "__main__":
    main()
