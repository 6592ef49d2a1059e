# # The platform group G_p
#
# Elements are upper-triangular matrices [[a, b], [0, 1]] over Z_{p^2} with
# a = 1 mod p. We store only the pair (a, b).

# In[1]:

import itertools

from spdh import Automorphism, Gp
from spdh.platform import automorphism_power

G = Gp.of(3)
print(G, "order", G.order())

# Multiplication is the matrix product read off the top row.

# In[2]:

x, y = G.element(4, 2), G.element(7, 5)
print(x, "*", y, "=", x * y)
print("inverse of", x, "is", G.inverse(x))

# The group is not abelian, and its center is {(1, kp)}.

# In[3]:

elems = list(G.elements())
witness = next((u, v) for u, v in itertools.product(elems, repeat=2) if u * v != v * u)
print("non-commuting pair:", witness)
print("center:", [z for z in elems if G.is_central(z)])

# Inner automorphisms are stored by their conjugator. phi_h^3 has a central
# conjugator at h = (4, 1), so it fixes everything.

# In[4]:

phi = Automorphism(G.element(4, 1))
print("phi((1,1)) =", phi(G.element(1, 1)))
cube = automorphism_power(phi, 3)
print("conjugator of phi^3:", cube.conjugator, "identity?", cube.is_identity())
