"""Deterministic and bootstrap efficiency on a benchmark file.

Prints efficiency x 100 per setup for two input sets: every input except the
last declared one, then all inputs. Then bootstraps the full input set and
prints medians, boxplot ranges and the dominance edges.

    python scripts/run_experiment.py data/synthetic_imagenet17.csv --replicates 200
"""

import argparse

from effrank import (BootstrapConfig, Dataset, FrontierForm, bootstrap_efficiencies,
                     dominance_graph, efficiency_scores, load_dataset, summarize)


def drop_metric(dataset: Dataset, name: str) -> Dataset:
    metrics = tuple(m for m in dataset.metrics if m.name != name)
    records = tuple(type(r)(r.setup, r.repeat, {k: v for k, v in r.values.items() if k != name})
                    for r in dataset.records)
    return Dataset(metrics, records)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("data")
    parser.add_argument("--form", choices=["convex", "affine"], default="affine")
    parser.add_argument("--replicates", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    form = FrontierForm(args.form)
    full = load_dataset(args.data)
    last = full.inputs[-1].name
    reduced = drop_metric(full, last)

    rows = {}
    for label, ds in [(",".join(m.name for m in reduced.inputs), reduced),
                      (",".join(m.name for m in full.inputs), full)]:
        rows[label] = {r.setup: r.theta for r in efficiency_scores(summarize(ds), form)}

    width = max(len(s) for s in full.setups)
    print(f"efficiency x 100 ({form.value} frontier)")
    labels = list(rows)
    for label in labels:
        print(f"  [{labels.index(label) + 1}] inputs: {label}")
    print(f"{'setup':<{width}}  {'[1]':>6}  {'[2]':>6}")
    for s in full.setups:
        print(f"{s:<{width}}  {100 * rows[labels[0]][s]:6.1f}  {100 * rows[labels[1]][s]:6.1f}")
    rises = all(rows[labels[1]][s] >= rows[labels[0]][s] - 1e-9 for s in full.setups)
    print(f"column [2] >= column [1] everywhere: {rises}")

    summaries = summarize(full)
    dists = bootstrap_efficiencies(summaries, BootstrapConfig(args.replicates, args.seed, form))
    graph = dominance_graph(dists)
    print(f"\nbootstrap, B = {args.replicates}")
    for d in sorted(dists, key=lambda d: (-d.stats.median, d.setup)):
        st = d.stats
        print(f"{d.setup:<{width}}  median {100 * st.median:6.1f}  "
              f"whiskers [{100 * st.whisker_low:6.1f}, {100 * st.whisker_high:6.1f}]")
    print(f"\n{len(graph.edges)} dominance pairs, {len(graph.reduced_edges)} after reduction:")
    for u, v in graph.reduced_edges:
        print(f"  {u} -> {v}")


if __name__ == "__main__":
    main()
