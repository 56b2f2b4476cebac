#!/usr/bin/env python3
"""Freeze logistic-regression oracle values.

Independent oracle: scikit-learn LogisticRegression. The in-repo model
minimizes sum-form NLL + (l2/2)||w||^2 with unregularized bias, which is
sklearn's objective with C = 1/l2. Output is pasted into
tests/test_classifiers.cpp.
"""

import numpy as np
from sklearn.linear_model import LogisticRegression

rng = np.random.RandomState(7)
n_pos, n_neg = 12, 28
X = np.vstack([
    rng.normal([0.3, 0.7], 0.15, size=(n_pos, 2)),
    rng.normal([0.7, 0.3], 0.18, size=(n_neg, 2)),
])
y = np.array([1] * n_pos + [0] * n_neg)

for l2 in (1.0, 0.1):
    clf = LogisticRegression(C=1.0 / l2, tol=1e-12, max_iter=100000,
                             solver="lbfgs")
    clf.fit(X, y)
    w = clf.coef_[0]
    b = clf.intercept_[0]
    print(f"// l2={l2}: w = ({w[0]!r}, {w[1]!r}), bias = {b!r}")

print("// X rows (x0, x1, y):")
for row, label in zip(X, y):
    print(f"    {row[0]!r}, {row[1]!r},  // y={label}")

probe = np.array([[0.3, 0.7], [0.7, 0.3], [0.5, 0.5], [0.45, 0.55]])
clf = LogisticRegression(C=1.0, tol=1e-12, max_iter=100000, solver="lbfgs")
clf.fit(X, y)
print("// probe predictions (l2=1):", clf.predict(probe).tolist())
print("// probe probabilities (l2=1):", [repr(p) for p in clf.predict_proba(probe)[:, 1]])
