"""Interpolating across a jump: oscillation, repair, and where order lives.

A function with a jump at x = 1 is sampled on refining grids. The plain
spline oscillates around the jump (its derivative error there stays O(1/h)),
so errors are measured on windows that keep a logarithmic distance from the
jump node: w3 drops a band around it, w4 widens that band. Away from the
jump the re-solve repair converges one order better than the plain spline,
because the plain spline's oscillation leaks into the whole grid while the
repair pins it down.

Run:  python3 demos/jump_windows.py
"""
from monospline import run_experiment


def show(rep, note):
    print(f"\n{note} (grid {rep.grid_kind}, window {rep.window_kind}, "
          f"log base {rep.base})")
    print("level " + " ".join(f"{t:>8}" for t in rep.methods))
    for j, level in enumerate(rep.order_levels):
        cells = []
        for t in rep.methods:
            v = rep.orders[t][j]
            cells.append("   exact" if v is None else f"{v:8.4f}")
        print(f"{level:<5d} " + " ".join(cells))


show(run_experiment("2u"), "equally spaced, band around the jump dropped")
show(run_experiment("2u", window_kind="w4"),
     "equally spaced, doubled band width")
show(run_experiment("2n"), "alternating 2:1 spacing, band dropped")
show(run_experiment("2n", levels=(2, 4, 6, 8, 10), window_kind="w4"),
     "alternating 2:1 spacing, doubled band width")
