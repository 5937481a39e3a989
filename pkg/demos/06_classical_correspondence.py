"""
Calibrating against classical curves
====================================

The same curvature/torsion language applies to ordinary space curves, and
the package carries a classical extractor for exactly that reason: it
anchors the quantum coefficients to numbers you can check with a ruler.

Part one runs the discrete Frenet-Serret pipeline on a circle and a helix.
Part two closes the loop: a qubit whose Bloch vector rides a small circle
of colatitude theta has squared quantum curvature 4 cot^2(theta), which is
exactly (2R)^2 times the squared geodesic curvature of that circle drawn
on a radius-R sphere -- the factor 4R^2 converting between the projective
metric and the sphere's.
"""

import numpy as np

from qucurve import (
    SpaceCurveSamples,
    classical_frenet_serret,
    curvature_bloch,
    sphere_geodesic_curvature,
)

# %%
# A circle of radius 1.7: curvature 1/1.7, torsion 0, everywhere.

R = 1.7
t = np.linspace(0.0, 2.0 * np.pi, 2001)
circle = np.stack([R * np.cos(t), R * np.sin(t), np.zeros_like(t)], axis=1)
_, kappa, tau = classical_frenet_serret(SpaceCurveSamples(t, circle))
print("circle, R = 1.7")
print(f"  kappa: max deviation from 1/R = {np.max(np.abs(kappa - 1 / R)):.2e}")
print(f"  tau:   max |tau|              = {np.max(np.abs(tau)):.2e}")

# %%
# A helix x = a cos t, y = a sin t, z = b t: constant curvature
# a/(a^2+b^2) and constant torsion b/(a^2+b^2).

a, b = 2.0, 0.5
t = np.linspace(0.0, 4.0 * np.pi, 4001)
helix = np.stack([a * np.cos(t), a * np.sin(t), b * t], axis=1)
_, kappa, tau = classical_frenet_serret(SpaceCurveSamples(t, helix))
denom = a * a + b * b
print("\nhelix, a = 2, b = 0.5")
print(f"  kappa: mean = {np.mean(kappa):.10f}   expected {a / denom:.10f}")
print(f"  tau:   mean = {np.mean(tau):.10f}   expected {b / denom:.10f}")

# %%
# The quantum/classical dictionary.  For each colatitude theta, compare the
# qubit's curvature coefficient (Bloch vector tilted theta from the field
# axis) with the geodesic curvature of the matching circle on a sphere of
# radius R.  Their ratio is 4R^2 for every theta and every R.

print("\nsphere dictionary: kappa^2_quantum / kappa_geo^2")
axis = np.array([0.0, 0.0, 1.0])
print(f"{'theta':>8s} {'R=0.5':>12s} {'R=1':>12s} {'R=2':>12s}")
for theta in (0.4, 0.9, 1.3, 2.0, 2.6):
    bloch = np.array([np.sin(theta), 0.0, np.cos(theta)])
    kq = curvature_bloch(bloch, axis)
    cells = []
    for radius in (0.5, 1.0, 2.0):
        kg = sphere_geodesic_curvature(theta, radius)
        cells.append(f"{kq / kg**2:12.8f}")
    print(f"{theta:8.2f} {' '.join(cells)}")
print("expected ratios: 4 R^2 =", [4 * r * r for r in (0.5, 1.0, 2.0)])
