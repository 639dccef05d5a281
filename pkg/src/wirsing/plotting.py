"""File-output rendering of scan results.

Every function writes a PNG next to the delimited export; there is no
interactive display path, so the Agg backend is forced before pyplot is
imported.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def plot_decay(xs, ys, path, xlabel="x", ylabel="error", title=None):
    """Log-log step plot of a strictly improving record sequence."""
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.loglog(xs, ys, drawstyle="steps-post", marker="o", markersize=3)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title)
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_psi_samples(samples, path, title=None):
    """Successive-minima exponents against Q, one line per (N, l, side)."""
    fig, ax = plt.subplots(figsize=(6, 4))
    groups = {}
    for s in samples:
        groups.setdefault((s.N, s.l, s.side), []).append(s)
    for (N, l, side), batch in sorted(groups.items()):
        batch.sort(key=lambda s: s.Q)
        qs = [float(s.Q) for s in batch]
        mid = [(float(s.value.lo) + float(s.value.hi)) / 2 for s in batch]
        err = [(float(s.value.hi) - float(s.value.lo)) / 2 for s in batch]
        ax.errorbar(qs, mid, yerr=err, marker="o", markersize=3,
                    label=f"N={N} l={l} {side.lower()}")
    ax.set_xscale("log")
    ax.set_xlabel("Q")
    ax.set_ylabel("exponent")
    if title:
        ax.set_title(title)
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
