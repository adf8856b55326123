#!/usr/bin/env python3
"""Regenerates the toy fixture in this directory.

Ten planted complexes of six proteins: five dense in the physical network,
five split into two triangles that the functional network bridges. Noise
proteins and noise edges surround them. Three functional variants feed the
consensus stage.
"""

import random
from pathlib import Path

HERE = Path(__file__).resolve().parent


def write_edges(path, edges):
    with open(path, "w") as out:
        out.write("# proteinA\tproteinB\tweight\n")
        for (a, b), w in sorted(edges.items()):
            out.write(f"{a}\t{b}\t{w:.3f}\n")


def add(edges, a, b, w):
    if a == b:
        return
    key = (min(a, b), max(a, b))
    edges[key] = max(edges.get(key, 0.0), w)


def main():
    rng = random.Random(2024)
    complexes = {}
    physical = {}
    noise = [f"N{i:02d}" for i in range(40)]

    for c in range(10):
        members = [f"C{c}_{j}" for j in range(6)]
        complexes[f"cpx{c:02d}"] = members
        if c < 5:
            for i in range(6):
                for j in range(i + 1, 6):
                    if rng.random() < 0.9:
                        add(physical, members[i], members[j], round(rng.uniform(0.6, 1.0), 3))
        else:
            for tri in (members[:3], members[3:]):
                for i in range(3):
                    for j in range(i + 1, 3):
                        add(physical, tri[i], tri[j], round(rng.uniform(0.6, 1.0), 3))
        for m in members:
            for n in rng.sample(noise, 2):
                add(physical, m, n, round(rng.uniform(0.2, 0.6), 3))
    for _ in range(60):
        a, b = rng.sample(noise, 2)
        add(physical, a, b, round(rng.uniform(0.2, 0.8), 3))
    write_edges(HERE / "physical.tsv", physical)

    def functional(seed):
        frng = random.Random(seed)
        edges = {}
        for c in range(5, 10):
            m = complexes[f"cpx{c:02d}"]
            for a, b in ((2, 3), (0, 3), (1, 4), (2, 5), (0, 5)):
                add(edges, m[a], m[b], round(frng.uniform(0.8, 1.0), 3))
        every = [p for ms in complexes.values() for p in ms] + noise
        for _ in range(40):
            a, b = frng.sample(every, 2)
            add(edges, a, b, round(frng.uniform(0.1, 0.5), 3))
        return edges

    write_edges(HERE / "functional.tsv", functional(7))
    for i, seed in enumerate((11, 12, 13), start=1):
        write_edges(HERE / f"functional_s{i}.tsv", functional(seed))

    with open(HERE / "benchmarks.tsv", "w") as out:
        out.write("# complex_id\tmembers\n")
        for cid, members in complexes.items():
            out.write(cid + "\t" + " ".join(members) + "\n")
        out.write("cpx_partial\tC0_0 C0_1 X_missing1 X_missing2 X_missing3\n")
        out.write("cpx_small\tC1_0 C1_1 C1_2\n")


if __name__ == "__main__":
    main()
