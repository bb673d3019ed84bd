"""Rendering of verification reports: JSON, CSV, and diagnostic figures."""

from __future__ import annotations

import csv
import json
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np


def _fig_timings(report, path):
    checks = report["checks"]
    names = [c["name"] for c in checks]
    secs = [c["seconds"] for c in checks]
    colors = ["tab:green" if c["passed"] else "tab:red" for c in checks]
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.barh(range(len(names)), secs, color=colors)
    ax.set_yticks(range(len(names)))
    ax.set_yticklabels(names)
    ax.invert_yaxis()
    ax.set_xlabel("seconds")
    ax.set_title("verification checks (max_n=%d, seed=%d)" % (report["max_n"], report["seed"]))
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _fig_msigma(path):
    from .solver import build_msigma
    from .weyl import full_flag

    p = full_flag(4)
    mat = build_msigma(p, (1.0,) * p.k)
    fig, ax = plt.subplots(figsize=(5.5, 5))
    im = ax.imshow(np.log1p(mat), cmap="viridis")
    ax.set_title("log(1 + M_sigma), full flag n=4, Q=(1,1,1)")
    ax.set_xlabel("column v")
    ax.set_ylabel("row w")
    fig.colorbar(im, ax=ax, shrink=0.8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _fig_convergence(path):
    from .solver import build_msigma, pf_solve
    from .weyl import full_flag

    fig, ax = plt.subplots(figsize=(6, 4))
    for n in (2, 3, 4):
        p = full_flag(n)
        res = pf_solve(build_msigma(p, tuple(0.5 * j for j in range(1, n))))
        ax.semilogy(range(1, len(res.history) + 1), res.history, label="n=%d" % n)
    ax.set_xlabel("power iteration")
    ax.set_ylabel("residual ||Mv - λv||∞")
    ax.set_title("Perron-Frobenius convergence")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_report(report, outdir: str):
    """Write report.json, report.csv, and PNG figures under ``outdir``.

    Returns the list of written paths.
    """
    figdir = os.path.join(outdir, "figures")
    os.makedirs(figdir, exist_ok=True)
    paths = []

    jpath = os.path.join(outdir, "report.json")
    with open(jpath, "w") as fh:
        json.dump(report, fh, indent=2, default=str)
        fh.write("\n")
    paths.append(jpath)

    cpath = os.path.join(outdir, "report.csv")
    with open(cpath, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["check", "passed", "seconds"])
        for c in report["checks"]:
            writer.writerow([c["name"], c["passed"], c["seconds"]])
    paths.append(cpath)

    for name, fn in [
        ("timings.png", lambda q: _fig_timings(report, q)),
        ("msigma_heatmap.png", _fig_msigma),
        ("pf_convergence.png", _fig_convergence),
    ]:
        fpath = os.path.join(figdir, name)
        fn(fpath)
        paths.append(fpath)
    return paths
