"""Static figures of r.fd profiles, written with the Agg backend."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .homological import ExtDim, RfdProfile  # noqa: E402


def _split(values: list[ExtDim]):
    """Finite points, censored points and -inf indices."""
    fin, cen, neg = [], [], []
    for i, v in enumerate(values):
        if v.is_minus_infinity:
            neg.append(i)
        elif v.is_censored:
            cen.append((i, v.value))
        else:
            fin.append((i, v.value))
    return fin, cen, neg


def _draw(ax, values, label, marker, offset=0.0):
    fin, cen, neg = _split(values)
    if fin:
        ax.plot([i + offset for i, _ in fin], [v for _, v in fin], marker, label=label, ms=8, ls="none")
    if cen:
        ax.plot([i + offset for i, _ in cen], [v for _, v in cen], "^", color="tab:red", ms=9, ls="none",
                label=f"{label} (>= cap)")
    if neg:
        ax.plot([i + offset for i in neg], [-0.5] * len(neg), "x", color="gray", ms=8, ls="none",
                label=f"{label} (-inf)")


def _finish(ax, n, title, path):
    ax.set_xticks(range(n))
    ax.set_xlabel("i")
    ax.set_ylabel("pd I^i")
    ax.axhline(-0.5, color="lightgray", lw=0.8, zorder=0)
    ax.set_title(title)
    ax.legend(loc="best", fontsize="small")
    ax.figure.tight_layout()
    ax.figure.savefig(path)
    plt.close(ax.figure)


def plot_profile(profile: RfdProfile, path) -> None:
    fig, ax = plt.subplots(figsize=(5, 3.5))
    _draw(ax, list(profile.entries), profile.label, "o")
    _finish(ax, len(profile.entries), f"r.fd profile of {profile.label}", path)


def plot_transfer(report, path) -> None:
    """Both sides of the triangular transfer check, one row per index."""
    rows = sorted(report.rows, key=lambda r: r["i"])
    lhs = [ExtDim.parse(r["lhs"]) for r in rows]
    rhs = [ExtDim.parse(r["rhs"]) for r in rows]
    fig, ax = plt.subplots(figsize=(5, 3.5))
    _draw(ax, lhs, f"T_{report.t}", "o", -0.08)
    _draw(ax, rhs, "predicted", "s", 0.08)
    _finish(ax, len(rows), f"{report.algebra}, t={report.t}: {report.verdict}", path)
