"""Write a synthetic 17-model benchmark with k repeats per model.

The numbers are invented stand-ins with realistic magnitudes (top-1 accuracy
in percent, GPU and mobile latency in ms, training cost in dollars); they are
not measurements. Usage:

    python scripts/make_synthetic_benchmark.py data/synthetic_imagenet17.csv
"""

import argparse
import csv

import numpy as np

# name: (top1 %, gpu latency ms, mobile latency ms, training cost $)
MODELS = {
    "MobileNetV3": (74.0, 4.5, 60.0, 300.0),
    "MobileNetV2": (71.9, 5.0, 80.0, 250.0),
    "MobileNetV1": (70.6, 3.5, 70.0, 150.0),
    "ShuffleNetV2": (69.4, 4.0, 40.0, 100.0),
    "ShuffleNetV1": (67.6, 4.5, 55.0, 120.0),
    "ResNet50": (76.1, 8.0, 400.0, 500.0),
    "ResNet34": (73.3, 5.5, 300.0, 350.0),
    "ResNet18": (69.8, 3.0, 170.0, 200.0),
    "GoogleNet": (69.8, 6.0, 250.0, 400.0),
    "SqueezeNetV1.0": (58.1, 2.5, 90.0, 120.0),
    "SqueezeNetV1.1": (58.2, 2.0, 45.0, 100.0),
    "InceptionV3": (77.3, 12.0, 800.0, 700.0),
    "ResNeXt50": (77.6, 10.0, 650.0, 750.0),
    "MNASNetV1": (73.5, 5.0, 75.0, 350.0),
    "DenseNet121": (74.4, 14.0, 600.0, 700.0),
    "DualPathNet92": (79.3, 30.0, 1500.0, 1500.0),
    "VGG11": (69.0, 5.0, 1100.0, 650.0),
}

# relative noise per metric: accuracy, gpu latency, mobile latency, cost
NOISE = (0.003, 0.03, 0.05, 0.02)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("output")
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=2022)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    with open(args.output, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["setup", "repeat", "input:gpu_latency_ms", "input:mobile_latency_ms",
                    "input:training_cost_usd", "output:top1"])
        for name, (acc, gpu, mobile, cost) in MODELS.items():
            for r in range(1, args.repeats + 1):
                a, g, m, c = (v * (1 + s * rng.standard_normal())
                              for v, s in zip((acc, gpu, mobile, cost), NOISE))
                w.writerow([name, r, f"{g:.4f}", f"{m:.3f}", f"{c:.2f}", f"{a:.2f}"])


if __name__ == "__main__":
    main()
