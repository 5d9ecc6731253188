#!/usr/bin/env python3
"""Regenerates tests/fixtures/kim.fn and tests/fixtures/dillon_perm.fn.

kappa(x) = x^3 + x^10 + a*x^24 over GF(2^6), p(x) = x^6 + x^4 + x^3 + x + 1.
The permutation is CCZ-equivalent to kappa: pick two 6-dim subspaces U, W
of the Walsh-zero set of kappa (as vectors (a,b) in F2^12) meeting only in 0.
Projecting the graph {(x, kappa(x))} onto the dual coordinates given by
bases of U and W yields two permutations L1, L2 of F2^6, and g = L2 o L1^-1.

Usage: ccz_permutation.py OUTDIR
"""
import sys
from collections import Counter
from pathlib import Path

N = 6
POLY = 0x5B
SIZE = 1 << N


def mul(a, b):
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> N:
            a ^= POLY
    return r


def power(a, e):
    r = 1
    while e:
        if e & 1:
            r = mul(r, a)
        a = mul(a, a)
        e >>= 1
    return r


def parity(x):
    return bin(x).count("1") & 1


def walsh_zeros(table):
    zeros = set()
    for b in range(SIZE):
        for a in range(SIZE):
            if (a, b) == (0, 0):
                continue
            s = sum(-1 if parity(b & table[x]) ^ parity(a & x) else 1 for x in range(SIZE))
            if s == 0:
                zeros.add(a | (b << N))
    return zeros


def subspaces(zeros, limit=4000):
    ordered = sorted(zeros)
    found = []

    def search(span, depth, start):
        if depth == N:
            found.append(frozenset(span))
            return len(found) < limit
        for i in range(start, len(ordered)):
            w = ordered[i]
            if w in span:
                continue
            if any(s and ((w ^ s) not in zeros or (w ^ s) < w) for s in span):
                continue
            if not search(span | {w ^ s for s in span}, depth + 1, i + 1):
                return False
        return True

    search({0}, 0, 0)
    return found


def basis(space):
    out = []
    for v in sorted(space):
        r = v
        for bv in out:
            r = min(r, r ^ bv)
        if r:
            out.append(r)
    return out


def project(table, vectors):
    out = []
    for x in range(SIZE):
        z = x | (table[x] << N)
        out.append(sum(parity(u & z) << i for i, u in enumerate(vectors)))
    return out


def write(path, table):
    path.write_text(f"n={N} m={N}\ntt=" + " ".join(f"{v:x}" for v in table) + "\n")


def main():
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(".")
    a = 2
    kim = [mul(power(x, 3), 1) ^ power(x, 10) ^ mul(a, power(x, 24)) for x in range(SIZE)]
    spaces = subspaces(walsh_zeros(kim))
    pair = next((u, w) for i, u in enumerate(spaces) for w in spaces[i + 1:] if len(u & w) == 1)
    l1 = project(kim, basis(pair[0]))
    l2 = project(kim, basis(pair[1]))
    assert len(set(l1)) == SIZE and len(set(l2)) == SIZE
    inverse = [0] * SIZE
    for x, y in enumerate(l1):
        inverse[y] = x
    g = [l2[inverse[y]] for y in range(SIZE)]
    assert len(set(g)) == SIZE
    assert max(max(Counter(g[x] ^ g[x ^ d] for x in range(SIZE)).values()) for d in range(1, SIZE)) == 2
    write(outdir / "kim.fn", kim)
    write(outdir / "dillon_perm.fn", g)


if __name__ == "__main__":
    main()
