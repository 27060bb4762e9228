"""Independent reference computations used to freeze expected values in the C++ tests.

Run with: python3 tests/oracles/derive_oracles.py
Uses numpy/scipy only; none of the C++ code paths are involved.
"""
import numpy as np
from scipy import special, stats

np.set_printoptions(precision=17)


def header(name):
    print(f"\n== {name}")


header("standard error {1,1,5,5}")
s = np.array([1, 1, 5, 5], float)
print(repr(s.std(ddof=1) / np.sqrt(len(s))))

header("P1 mean / SE (15 respondents)")
p1 = np.array([5, 5, 5, 5, 5, 5, 4, 5, 5, 5, 5, 5, 5, 5, 5], float)
print(repr(p1.mean()), repr(p1.std(ddof=1) / np.sqrt(15)))

header("consistency ratio, inconsistent 3x3")
A = np.array([[1, 3, 1 / 5], [1 / 3, 1, 7], [5, 1 / 7, 1]])
lam = max(np.linalg.eigvals(A).real)
print(repr(lam), repr((lam - 3) / 2 / 0.58))

header("consistency ratio, survey aggregate: upper-triangle centroids, reciprocal lower triangle")
upper = {(0, 1): (1.73, 3.87, 5.92), (0, 2): (3.87, 5.92, 7.94), (1, 2): (1.00, 1.73, 3.87)}
C = np.ones((3, 3))
for (i, j), t in upper.items():
    C[i, j] = sum(t) / 3
    C[j, i] = 1 / C[i, j]
lam = max(np.linalg.eigvals(C).real)
print(repr(lam), repr((lam - 3) / 2 / 0.58))

header("special functions")
for a, x in [(0.5, 0.3), (2.0, 5.0), (10.0, 3.0), (3.5, 12.0)]:
    print("Q", a, x, repr(special.gammaincc(a, x)))
for a, b, x in [(0.5, 0.5, 0.2), (2.0, 3.0, 0.4), (10.0, 1.5, 0.9), (55.0, 0.5, 0.97)]:
    print("I", a, b, x, repr(special.betainc(a, b, x)))
print("F sf(4.0;1,100)", repr(stats.f.sf(4.0, 1, 100)))
print("F sf(2.5;3,20)", repr(stats.f.sf(2.5, 3, 20)))
print("chi2 sf(10;6)", repr(stats.chi2.sf(10.0, 6)))


def synth(n, p):
    """Deterministic synthetic data also generated in tests/test_screening.cpp."""
    i = np.arange(n, dtype=float)
    base = np.sin(0.37 * i) + 0.5 * np.cos(1.13 * i)
    cols = [base + 0.3 * np.sin(0.91 * i + k) * (k + 1) + 0.2 * np.cos(2.7 * i * (k + 1)) for k in range(p)]
    return np.column_stack(cols)


header("adequacy on synth(40,4)")
X = synth(40, 4)
R = np.corrcoef(X, rowvar=False)
Ri = np.linalg.inv(R)
d = np.sqrt(np.diag(Ri))
A = Ri / np.outer(d, d)
Q = -A
np.fill_diagonal(Q, 0)
Rr = R.copy()
np.fill_diagonal(Rr, 0)
kmo = (Rr ** 2).sum() / ((Rr ** 2).sum() + (Q ** 2).sum())
msa = (Rr ** 2).sum(0) / ((Rr ** 2).sum(0) + (Q ** 2).sum(0))
n, p = X.shape
chi = -(n - 1 - (2 * p + 5) / 6) * np.log(np.linalg.det(R))
df = p * (p - 1) / 2
print("det", repr(np.linalg.det(R)))
print("kmo", repr(kmo))
print("msa", [repr(v) for v in msa])
print("bartlett", repr(chi), df, repr(stats.chi2.sf(chi, df)))

header("pca 4x4 eigenvalues via characteristic polynomial roots")
M = np.array([[1.0, 0.6, 0.3, 0.1], [0.6, 1.0, 0.5, 0.2], [0.3, 0.5, 1.0, 0.4], [0.1, 0.2, 0.4, 1.0]])
print(sorted(np.roots(np.poly(M)).real, reverse=True))

header("MLP hand network: 1 input-dim used, 1 hidden tanh unit")
# normalized input u = 0.5, w1 = 0.8, b1 = -0.1, w2 = 1.5, b2 = 0.2 -> normalized output
u = 0.5
z = 1.5 * np.tanh(0.8 * u - 0.1) + 0.2
print(repr(z))
