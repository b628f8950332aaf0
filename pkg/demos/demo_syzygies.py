"""Covers, syzygies and projective-dimension certificates on the fixtures.

Run: python3 demos/demo_syzygies.py
"""

from quivalg import cli, decomp, homology, repmod

# The two-vertex radical-square-zero algebra: every syzygy is semisimple.
B = cli.load_algebra_file("exB.alg")
print(B)
s1 = repmod.simple(B, "1")
cover, epi = homology.projective_cover(s1)
print("cover of S1:", dict(cover.dims), "epi surjective:", epi.is_surjective())

om = homology.syzygy(s1)
print("Omega(S1) dims:", dict(om.dims))
target = repmod.direct_sum([repmod.simple(B, "1"), repmod.simple(B, "2")])[0]
print("Omega(S1) ~ S1+S2:", decomp.is_isomorphic(om, target.strip()).verdict)

# pd certificates: the simple recurs inside its own syzygy closure, and its
# dimension vector already falls outside the Cartan lattice.
r = homology.pd(s1)
print("pd(S1):", r.describe())

# Over the hereditary A2 quiver everything terminates.
a2 = cli.load_algebra_file("a2.alg")
print("pd(S1) over a2:", homology.pd(repmod.simple(a2, "1")).describe())

# The local three-loop algebra is selfinjective: nonprojectives never resolve.
A = cli.load_algebra_file("exA.alg")
print("pd(S0) over exA:", homology.pd(repmod.simple(A, "0")).describe())

# Orbit probes: exB closes on {S1, S2}; exA grows until the budget stops it.
probe = homology.syzygy_finite_probe(B, 1)
print("exB orbit closed:", probe.closed, "classes:", probe.reached)
probeA = homology.syzygy_finite_probe(A, 1)
print("exA orbit closed:", probeA.closed, "-", probeA.note)
