#!/usr/bin/env python3
"""Write a non-isomorphic graph6 catalog for 1 <= n <= N (N <= 8).

Graphs up to 7 vertices come from the networkx graph atlas. The 8-vertex
class is built by attaching a new vertex to every 7-vertex graph in all
possible ways and keeping one representative per isomorphism class.
"""
import argparse
import sys
from collections import defaultdict

import networkx as nx


def extend(reps, n):
    buckets = defaultdict(list)
    for h in reps:
        for mask in range(1 << (n - 1)):
            g = h.copy()
            g.add_node(n - 1)
            g.add_edges_from((n - 1, v) for v in range(n - 1) if mask >> v & 1)
            key = (g.number_of_edges(), tuple(sorted(d for _, d in g.degree())),
                   nx.weisfeiler_lehman_graph_hash(g, iterations=3))
            bucket = buckets[key]
            if not any(nx.is_isomorphic(g, other) for other in bucket):
                bucket.append(g)
    out = [g for bucket in buckets.values() for g in bucket]
    out.sort(key=lambda g: (g.number_of_edges(), nx.to_graph6_bytes(g, header=False)))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--header", action="store_true", help="emit a >>graph6<< banner")
    args = ap.parse_args()
    by_n = defaultdict(list)
    for g in nx.graph_atlas_g():
        if 1 <= g.number_of_nodes() <= 7:
            by_n[g.number_of_nodes()].append(g)
    if args.max_n >= 8:
        by_n[8] = extend(by_n[7], 8)
    out = sys.stdout.buffer
    if args.header:
        out.write(b">>graph6<<\n")
    for n in range(1, args.max_n + 1):
        print(f"n={n}: {len(by_n[n])}", file=sys.stderr)
        for g in by_n[n]:
            out.write(nx.to_graph6_bytes(nx.convert_node_labels_to_integers(g), header=False))


if __name__ == "__main__":
    main()
