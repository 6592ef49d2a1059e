# # Attacks at desk scale
#
# Small periods fall to brute force. The telescoping identity and the
# hidden-shift instance are shown on the running pair.

# In[1]:

from spdh import Gp, SemidirectPair, keygen, s_value
from spdh.cryptanalysis import (
    SdlpInstance,
    build_hidden_shift,
    cma_game,
    solve_sdlp_bruteforce,
    telescoping_check,
)
from spdh.ring import SeededEntropy

G = Gp.of(3)
pair = SemidirectPair.from_conjugator(G.element(1, 1), G.element(4, 1))
print("x =", solve_sdlp_bruteforce(SdlpInstance(pair, G.element(1, 4))))

# Key recovery: each secret scalar is the difference of two discrete logs.

# In[2]:

key = keygen(pair, SeededEntropy(b"victim"), rounds=8, insecure=True)
pk, n = key.public, key.public.n
recovered = tuple((solve_sdlp_bruteforce(SdlpInstance(pair, Y)) - solve_sdlp_bruteforce(SdlpInstance(pair, X))) % n
                  for X, Y in zip(pk.bases, pk.targets))
print(recovered == key.secret.scalars, recovered)

# In[3]:

recovered, holds = telescoping_check(pair, 4)
print("phi^4(g) from s(4) alone:", recovered, holds)

inst = build_hidden_shift(pair, 4)
print("f(0) =", inst.f(0), " g(3) =", inst.g(3), " shift =", inst.shift, inst.holds())

# Replaying an oracle signature verifies but is not a forgery.

# In[4]:

out = cma_game(pair, lambda pk, oracle: (b"m", oracle(b"m")), SeededEntropy(b"game"))
print(out)
