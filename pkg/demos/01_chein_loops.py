"""
Building Chein loops
====================

Doubling a group G with a new element u gives a Moufang loop M(G, 2)
of twice the order. It is a group exactly when G is abelian.
"""

import numpy as np

from loopsmith import chein, is_associative, is_diassociative, is_moufang, preset

# the quaternion group, with elements named 1 i j k -1 -i -j -k
Q8 = preset("q8")
print(Q8.names)

# doubling: indices 0..7 are G, indices 8..15 are the coset Gu
E = chein(Q8)
L = E.loop
print(L.order, L.names[E.u_index])

# a few products; (iu)(ju) = j^-1 i = k
iu, ju = L.index("iu"), L.index("ju")
print(L.name(L.mul(iu, ju)))

# the table is a plain read-only numpy array
print(np.unique(L.table[0]).size == L.order)

# Moufang and diassociative, but not associative
print(is_moufang(L).holds, is_diassociative(L).holds)
check = is_associative(L)
x, y, z = check.witness
print(check.holds, "witness:", L.name(x), L.name(y), L.name(z))

# with an abelian G the double is a group
print(is_associative(chein(preset("cyclic(4)")).loop).holds)
