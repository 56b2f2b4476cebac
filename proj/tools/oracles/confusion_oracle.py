#!/usr/bin/env python3
"""Freeze F1/kappa oracle values for 20 constructed confusion matrices.

Independent oracle: scikit-learn f1_score / cohen_kappa_score on materialized
label vectors. Output is pasted into tests/test_metrics.cpp.
"""

import numpy as np
from sklearn.metrics import cohen_kappa_score, f1_score

MATRICES = [
    # (tp, fp, fn, tn)
    (5, 0, 0, 95),
    (0, 5, 5, 90),
    (10, 10, 10, 70),
    (1, 1, 1, 1),
    (3, 7, 2, 88),
    (25, 25, 25, 25),
    (40, 10, 5, 45),
    (2, 0, 8, 90),
    (0, 0, 10, 90),
    (7, 3, 3, 7),
    (1, 99, 0, 0),
    (13, 17, 19, 51),
    (6, 2, 9, 83),
    (33, 11, 7, 49),
    (4, 4, 6, 86),
    (50, 1, 1, 48),
    (9, 30, 1, 60),
    (15, 5, 35, 45),
    (1, 0, 0, 99),
    (20, 20, 5, 55),
]


def vectors(tp, fp, fn, tn):
    truth = ["pos"] * (tp + fn) + ["neg"] * (fp + tn)
    pred = ["pos"] * tp + ["neg"] * fn + ["pos"] * fp + ["neg"] * tn
    return truth, pred


for tp, fp, fn, tn in MATRICES:
    truth, pred = vectors(tp, fp, fn, tn)
    f1 = f1_score(truth, pred, pos_label="pos", zero_division=0.0)
    kappa = cohen_kappa_score(truth, pred)
    print(f"    {{{tp}, {fp}, {fn}, {tn}, {f1!r}, {kappa!r}}},")
