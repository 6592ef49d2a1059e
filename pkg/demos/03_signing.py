# # Signing and verifying
#
# Toy parameters first (p = 3 needs insecure=True, since n = 9), then a
# 31-bit prime where n = p^2 clears the 2^30 floor.

# In[1]:

import time

from spdh import Gp, SemidirectPair, encode_pk, encode_sig, keygen, sign, verify
from spdh.ring import SeededEntropy, system_entropy

G = Gp.of(3)
toy = SemidirectPair.from_conjugator(G.element(1, 1), G.element(4, 1))
key = keygen(toy, SeededEntropy(b"demo"), rounds=16, insecure=True)
sig = sign(b"hello", key, system_entropy)
print(verify(b"hello", sig, key.public), verify(b"hullo", sig, key.public))

# In[2]:

data = encode_sig(sig, key.public)
print(len(encode_pk(key.public)), "byte public key,", len(data), "byte signature")
print(data.hex())

# In[3]:

p = 2**31 - 1
Gm = Gp.of(p)
mid = SemidirectPair.from_conjugator(Gm.element(1 + 5 * p, 12345), Gm.element(1 + 7 * p, 999))
key = keygen(mid, system_entropy, rounds=64)
print("n =", key.public.n, "= p^2:", key.public.n == p * p)

start = time.perf_counter()
for k in range(100):
    m = b"message %d" % k
    assert verify(m, sign(m, key, system_entropy), key.public)
print(f"100 roundtrips in {time.perf_counter() - start:.2f} s")
