"""
Half-automorphisms of M(Q8, 2)
==============================

A bijection f is a half-automorphism when each f(xy) is either f(x)f(y)
or f(y)f(x). Automorphisms and anti-automorphisms are the trivial ones.
"""

from loopsmith import (
    Kind,
    chein,
    compute_H,
    enumerate_automorphisms,
    enumerate_half_automorphisms,
    gamma,
    preset,
    theorem2_witness,
)

E = chein(preset("q8"))
L = E.loop

aut = enumerate_automorphisms(L)
half = enumerate_half_automorphisms(L)
print(len(aut), half.summary())

# H fixes G and u, and only flips the coset elements of order 4
H = compute_H(E)
print(len(H), H.provenance)

for phi in H.of_kind(Kind.NONTRIVIAL)[:3]:
    moved = [L.name(x) for x in range(L.order) if phi[x] != x]
    print(moved, [E.group.name(g) for g in gamma(E, phi).members])

# a group element of order 4 with the right commuting pattern must exist
print(E.group.name(theorem2_witness(E.group)))

# S3 has none, and M(S3, 2) has no nontrivial half-automorphisms at all
print(theorem2_witness(preset("s3")), enumerate_half_automorphisms(chein(preset("s3")).loop).summary())
