"""Cassini ovals and eigenvalues for a 6x6 X-matrix and three derived forms.

Writes one CSV per matrix (same layout as ``xmat cassini --contour``) into the
output directory, prints a boundary-check summary, and renders a PNG when
matplotlib happens to be installed.

    python scripts/fig1_cassini.py --out cassini_demo
"""
import argparse
import csv
from pathlib import Path

import numpy as np

from xmatrix import (XMatrix, anti_identity, cassini_classify, cassini_contour, cassini_ovals,
                     eigenvalues, isospectral_reduction, transpose)
from xmatrix.spectral import default_window

A = XMatrix([3.0, 3, -2, 1, 1, 7], [2.0, -5, -5, 7, 6, 6])


def forms():
    return {
        "A": A,
        "AtA": transpose(A) @ A,
        "AJ": A @ anti_identity(A.n, A.field),
        "reduced": isospectral_reduction(A),
    }


def trace(a, resolution):
    ovals = cassini_ovals(a)
    lams = eigenvalues(a)
    window = default_window(ovals, lams)
    curves = [(o.block, cassini_contour(o, window, resolution)) for o in ovals]
    return ovals, lams, curves


def write_csv(path, lams, curves):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["section", "block", "polyline", "x", "y"])
        for block, lines in curves:
            for k, line in enumerate(lines, start=1):
                for x, y in line.tolist():
                    w.writerow(["contour", block, k, repr(x), repr(y)])
        for k, z in enumerate(lams):
            w.writerow(["eigenvalue", k // 2 + 1, "", repr(z.real + 0.0), repr(z.imag + 0.0)])


def plot(results, path):
    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("matplotlib not installed; skipping PNG")
        return
    fig, axes = plt.subplots(2, 2, figsize=(10, 10))
    for ax, (name, (_, lams, curves)) in zip(axes.ravel(), results.items()):
        for block, lines in curves:
            for line in lines:
                ax.plot(line[:, 0], line[:, 1], lw=1, color=f"C{block}")
        ax.plot(lams.real, lams.imag, "k.", ms=8)
        ax.set_title(name)
        ax.set_aspect("equal")
    fig.savefig(path, dpi=120)
    print(f"wrote {path}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="cassini_demo", type=Path)
    ap.add_argument("--resolution", type=int, default=300)
    ap.add_argument("--tol", type=float, default=1e-9)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    results = {}
    for name, a in forms().items():
        ovals, lams, curves = trace(a, args.resolution)
        results[name] = (ovals, lams, curves)
        write_csv(args.out / f"{name}.csv", lams, curves)
        on = [cassini_classify(z, ovals[k // 2], args.tol).value for k, z in enumerate(lams)]
        print(f"{name:8s} eigenvalues {np.round(lams, 4).tolist()}")
        print(f"{'':8s} positions   {on}")
    plot(results, args.out / "cassini_demo.png")


if __name__ == "__main__":
    main()
