#!/usr/bin/env python3
"""Generate small fullerene test data as planar_code files.

Fullerenes are built from face spirals: the dual triangulation is wound up
from a sequence of face degrees, embedded with networkx, and its faces become
the cubic vertices. Isomorphic duplicates are dropped. This script is only a
test-data generator; the library never depends on it.

Usage: gen_fullerenes.py OUTDIR
"""
import itertools
import sys
from collections import deque
from pathlib import Path

import networkx as nx


def windup(degrees):
    n = len(degrees)
    left = list(degrees)
    g = nx.Graph()
    g.add_nodes_from(range(n))

    def join(a, b):
        if g.has_edge(a, b) or a == b:
            raise ValueError("bad spiral")
        g.add_edge(a, b)
        left[a] -= 1
        left[b] -= 1
        if left[a] < 0 or left[b] < 0:
            raise ValueError("bad spiral")

    ring = deque([0])
    join(0, 1)
    ring.append(1)
    for k in range(2, n - 1):
        join(k, ring[-1])
        join(k, ring[0])
        while True:
            if len(ring) > 2 and left[ring[0]] == 0:
                ring.popleft()
                join(k, ring[0])
            elif len(ring) > 2 and left[ring[-1]] == 0:
                ring.pop()
                join(k, ring[-1])
            else:
                break
        ring.append(k)
    for f in ring:
        if left[f] > 0:
            join(n - 1, f)
    if any(x != 0 for x in left):
        raise ValueError("bad spiral")
    return g


def dual_to_rotations(tri):
    ok, emb = nx.check_planarity(tri)
    if not ok:
        raise ValueError("not planar")
    faces = {}
    seen = set()
    for u, v in emb.edges():
        if (u, v) in seen:
            continue
        face = emb.traverse_face(u, v, mark_half_edges=seen)
        if len(face) != 3:
            raise ValueError("not a triangulation")
        faces[len(faces)] = face
    dart_face = {}
    for idx, face in faces.items():
        for i in range(3):
            dart_face[(face[i], face[(i + 1) % 3])] = idx
    rotations = []
    for idx in range(len(faces)):
        face = faces[idx]
        rot = []
        for i in range(3):
            a, b = face[i], face[(i + 1) % 3]
            rot.append(dart_face[(b, a)])
        rotations.append(rot)
    return rotations


def cubic_graph(rotations):
    g = nx.Graph()
    for v, rot in enumerate(rotations):
        for w in rot:
            g.add_edge(v, w)
    return g


def encode(rotations):
    out = bytearray([len(rotations)])
    for rot in rotations:
        out.extend(w + 1 for w in rot)
        out.append(0)
    return bytes(out)


def fullerenes(n, first_only=False):
    faces = n // 2 + 2
    found = []
    for pent in itertools.combinations(range(faces), 12):
        degrees = [6] * faces
        for p in pent:
            degrees[p] = 5
        try:
            rot = dual_to_rotations(windup(degrees))
        except ValueError:
            continue
        if len(rot) != n:
            continue
        g = cubic_graph(rot)
        if any(nx.is_isomorphic(g, h) for _, h in found):
            continue
        found.append((rot, g))
        if first_only:
            break
    return [r for r, _ in found]


def spiral(n, pentagons):
    faces = n // 2 + 2
    degrees = [6] * faces
    for p in pentagons:
        degrees[p - 1] = 5
    return dual_to_rotations(windup(degrees))


def main():
    out = Path(sys.argv[1])
    out.mkdir(parents=True, exist_ok=True)
    header = b">>planar_code<<"
    small = []
    for n in (20, 24, 26, 28):
        isomers = fullerenes(n)
        print(f"C{n}: {len(isomers)} isomer(s)")
        small.extend(isomers)
    (out / "small_fullerenes.pc").write_bytes(header + b"".join(encode(r) for r in small))
    for n in range(30, 42, 2):
        (rot,) = fullerenes(n, first_only=True)
        (out / f"c{n}.pc").write_bytes(header + encode(rot))
    c60 = spiral(60, [1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32])
    (out / "c60_ih.pc").write_bytes(header + encode(c60))


if __name__ == "__main__":
    main()
