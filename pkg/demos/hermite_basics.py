"""Build a plain C2 spline, inspect its pieces, and probe continuity.

Run:  python3 demos/hermite_basics.py
"""
import numpy as np

from monospline import BuildConfig, GridData, build_c2, c2_jump

x = np.array([0.0, 0.8, 1.7, 2.3, 3.0, 4.2])
f = np.sin(x) + 0.3 * x

# exact endpoint derivatives; omit boundary= to fall back to secant slopes
bc = (np.cos(x[0]) + 0.3, np.cos(x[-1]) + 0.3)
spline, report = build_c2(GridData(x=x, f=f), BuildConfig(boundary=bc))

print("nodal derivatives and their provenance:")
for xi, fd, tag in zip(spline.x, spline.derivs.values, spline.derivs.provenance):
    print(f"  x = {xi:4.1f}   fd = {fd: .6f}   [{tag}]")

print("\nper-interval local coefficients (c1 c2 c3 c4):")
for i, row in enumerate(spline.coeffs):
    print(f"  [{x[i]:.1f}, {x[i + 1]:.1f}]  " + "  ".join(f"{c: .6f}" for c in row))

ts = np.linspace(x[0], x[-1], 7)
print("\nvalue / first / second derivative at a few points:")
for t in ts:
    print(f"  P({t:4.2f}) = {spline.value(t): .6f}   "
          f"P'({t:4.2f}) = {spline.deriv(t): .6f}   "
          f"P''({t:4.2f}) = {spline.second_deriv(t): .6f}")

print("\nsecond-derivative jumps at interior nodes (all ~0 for a C2 fit):")
for i in range(1, len(x) - 1):
    print(f"  node {i}: {c2_jump(spline, i): .3e}")
