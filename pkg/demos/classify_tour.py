#!/usr/bin/env python3
"""A tour of kernelization verdicts.

Walks a zoo of graphs through the classifier for all three problems and
prints the verdict with its justifying chain. Run:

    python demos/classify_tour.py
"""

from hfree import catalogue as C
from hfree import classify as CL
from hfree import graphs as G

ZOO = [
    ("path on 4 vertices", G.path_graph(4)),
    ("cycle on 4 vertices", G.cycle_graph(4)),
    ("two disjoint edges", G.from_edges(4, [(0, 1), (2, 3)])),
    ("the claw", G.star_graph(3)),
    ("one edge plus three isolated vertices", G.from_edges(5, [(0, 1)])),
    ("complete bipartite K_{2,6}", G.complete_bipartite(2, 6)),
    ("the 4-star with an isolated vertex", C.lookup("H2").graph),
    ("twin-star with five and one leaves", C.twin_star(5, 1)),
    ("catalogue entry S12 (self-complementary)", C.lookup("S12").graph),
    ("catalogue entry S35 (the 12-vertex case)", C.lookup("S35").graph),
    ("deletion-only special case D2", C.lookup("D2").graph),
]


def main():
    for name, g in ZOO:
        print(f"\n== {name}  [{G.to_graph6(g)}]")
        for problem in CL.PROBLEMS:
            v = CL.classify(g, problem)
            line = f"   {problem:>10}: {v.status:<15} {v.reason}"
            if v.member:
                line += f"  -> names {v.member}"
            print(line)
            if v.chain:
                hops = " -> ".join(
                    f"{s.rule}[{s.target_h.n}v]" for s in v.chain
                )
                print(f"              chain: {hops}")


if __name__ == "__main__":
    main()
