#!/usr/bin/env python3
"""Execute simulation chains on concrete instances.

Derives chains for two catalogue graphs, then pushes a small editing
instance of each final target backwards through every step, checking with
the exact solver that the answer is preserved at each hop. Chains whose
executable blow-up would leave desk scale refuse to run instead (try
K_2,5: its first hop enumerates all placements of a six-vertex subgraph).
Run:

    python demos/run_reduction_chain.py
"""

from hfree import catalogue as C
from hfree import graphs as G
from hfree import reductions as R
from hfree import solver as S


def run_chain(name, start, base):
    chain = R.derive_chain(start)
    print(f"\nchain for {name} ({G.to_graph6(start)}):")
    for s in chain:
        print(f"   {s.rule:<22} {s.source_h.n}v -> {s.target_h.n}v "
              f"({s.construction}{', complemented' if s.complemented else ''})")
    target = chain[-1].target_h
    print(f"   final target: {G.to_graph6(target)} on {target.n} vertices")

    for k in (0, 1):
        inst = S.EditInstance(base, k, "edit")
        answers = [S.solve(inst, target).feasible]
        current = inst
        for step in reversed(chain):
            current = R.execute_step(step, current)
            answers.append(S.solve(current, step.source_h, max_n=64).feasible)
        print(f"   k={k}: instance grows {base.n} -> {current.g.n} vertices; "
              f"answers along the chain: {answers} "
              f"({'consistent' if len(set(answers)) == 1 else 'BROKEN'})")


def main():
    run_chain("S1 = K_2,3", C.lookup("S1").graph, G.cycle_graph(4))
    run_chain("the 6-star", G.star_graph(6), G.path_graph(4))


if __name__ == "__main__":
    main()
