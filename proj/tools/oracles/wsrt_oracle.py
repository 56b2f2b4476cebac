#!/usr/bin/env python3
"""Freeze WSRT oracle values for fixed paired-score vectors.

Independent oracle: scipy.stats.rankdata for the rank bookkeeping,
scipy.stats.wilcoxon (normal approximation with continuity correction)
for p-values, plus exact 2^n sign enumeration. Output is pasted into
tests/test_metrics.cpp.
"""

import itertools
import math

import numpy as np
from scipy.stats import norm, rankdata, wilcoxon

CASES = [
    ("constant shift n=10", np.arange(1.0, 11.0) + 1.0, np.arange(1.0, 11.0)),
    ("mixed signs", np.array([1.2, 0.8, 3.1, 0.5, 2.2, 1.9]),
     np.array([1.0, 1.1, 2.0, 0.9, 2.3, 1.4])),
    ("with ties", np.array([2.0, 3.0, 4.0, 5.0, 7.0]),
     np.array([1.0, 2.0, 3.0, 6.0, 5.0])),
    ("with zeros", np.array([1.0, 2.0, 3.0, 4.0, 5.0, 6.0]),
     np.array([1.0, 2.0, 2.5, 4.5, 4.0, 5.0])),
    ("negative shift", np.array([0.1, 0.2, 0.3, 0.4]),
     np.array([0.5, 0.4, 0.6, 0.9])),
]


def trace(a, b):
    d = a - b
    d = d[d != 0]
    n = len(d)
    ranks = rankdata(np.abs(d))
    w_plus = float(ranks[d > 0].sum())
    w_minus = float(ranks[d < 0].sum())
    mu = n * (n + 1) / 4
    _, counts = np.unique(np.abs(d), return_counts=True)
    tie = float((counts**3 - counts).sum())
    var = n * (n + 1) * (2 * n + 1) / 24 - tie / 48
    sd = math.sqrt(var)
    z = (min(w_plus, w_minus) - mu) / sd
    p1 = float(norm.cdf((w_minus - mu + 0.5) / sd))
    p2 = min(1.0, 2 * float(norm.cdf((min(w_plus, w_minus) - mu + 0.5) / sd)))
    return w_plus, w_minus, z, p1, p2, n


def exact_one_sided(a, b):
    """P(W- <= observed) by full sign enumeration (ranks held fixed)."""
    d = a - b
    d = d[d != 0]
    ranks = rankdata(np.abs(d))
    obs = ranks[d < 0].sum()
    count = 0
    total = 0
    for signs in itertools.product((0, 1), repeat=len(d)):
        w_minus = sum(r for r, s in zip(ranks, signs) if s)
        count += w_minus <= obs
        total += 1
    return count / total


for name, a, b in CASES:
    wp, wm, z, p1, p2, n = trace(a, b)
    pe = exact_one_sided(a, b)
    # scipy cross-check (zsplit not used; scipy drops zeros by default)
    sp = wilcoxon(a, b, correction=True, alternative="greater",
                  method="approx").pvalue
    assert abs(sp - p1) < 1e-12, (name, sp, p1)
    sp2 = wilcoxon(a, b, correction=True, alternative="two-sided",
                   method="approx").pvalue
    assert abs(min(1.0, sp2) - p2) < 1e-12, (name, sp2, p2)
    big_n = len(a)
    r = abs(z) / math.sqrt(big_n)
    print(f"    // {name}; exact one-sided p = {pe!r}")
    print(f"    {{{wp!r}, {wm!r}, {z!r}, {p1!r}, {p2!r}, {r!r}, {n}}},")
