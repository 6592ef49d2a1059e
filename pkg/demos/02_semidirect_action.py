# # Cycles and the Z_n action
#
# A pair (g, phi) generates s(x), the first coordinate of (g, phi)^x in
# G x| Aut(G). The values s(0), ..., s(n-1) form a cycle on which Z_n acts.

# In[1]:

from spdh import Gp, SemidirectPair, act, compute_period, enumerate_cycle, s_value
from spdh.semidirect import period_report, candidate_periods

G = Gp.of(3)
pair = SemidirectPair.from_conjugator(G.element(1, 1), G.element(4, 1))
n = compute_period(pair)
print("n =", n, period_report(pair))

# In[2]:

cycle = enumerate_cycle(pair)
for k, X in enumerate(cycle):
    print(k, X)

# Acting by [i] moves s(j) to s(i + j). The verifier never needs j.

# In[3]:

print("[2] * s(3) =", act(2, s_value(pair, 3), pair), "  s(5) =", s_value(pair, 5))

# Periods at p = 5 for every pair, against the listed candidate values.

# In[4]:

from collections import Counter

G5 = Gp.of(5)
elems = list(G5.elements())
counts = Counter(compute_period(SemidirectPair.from_conjugator(g, h)) for g in elems for h in elems[::5])
print(dict(sorted(counts.items())))
print("candidates:", sorted(candidate_periods(5)))
