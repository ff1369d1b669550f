"""Brute-force simulation of plug-in MI for independent uniform 8-bit noise at 512x512."""
import numpy as np

rng = np.random.default_rng(7)
vals = []
for _ in range(20):
    a = rng.integers(0, 256, 512 * 512)
    b = rng.integers(0, 256, 512 * 512)
    j = np.zeros((256, 256))
    np.add.at(j, (a, b), 1)
    p = j / j.sum()
    pa, pb = p.sum(1), p.sum(0)
    nz = p > 0
    vals.append((p[nz] * np.log2(p[nz] / np.outer(pa, pb)[nz])).sum())
print("mean %.5f max %.5f" % (np.mean(vals), np.max(vals)))
