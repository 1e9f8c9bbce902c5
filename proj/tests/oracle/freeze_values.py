# Independent brute-force oracle used to freeze expected values in the C++ tests.
# Enumerates spanning forests directly from the edge list and counts points naively.
import itertools, sys

def components(V, edges):
    parent = list(range(V))
    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]; a = parent[a]
        return a
    for u, v in edges:
        parent[find(u)] = find(v)
    return len({find(i) for i in range(V)})

def forests(V, edges):
    n = len(edges)
    r = V - components(V, edges)
    out = []
    for S in itertools.combinations(range(n), r):
        sub = [edges[i] for i in S]
        if any(u == v for u, v in sub):
            continue
        if components(V, sub) == V - r:
            out.append(S)
    return out

def psi_value(V, edges, x, q, fs):
    tot = 0
    for F in fs:
        prod = 1
        for i in range(len(edges)):
            if i not in F:
                prod = prod * x[i] % q
        tot += prod
    return tot % q

def counts(V, edges, q):
    fs = forests(V, edges)
    n = len(edges)
    zeros = sum(1 for x in itertools.product(range(q), repeat=n) if psi_value(V, edges, x, q, fs) == 0)
    return zeros, q**n - zeros

G = {
  'C3': (3, [(0,1),(1,2),(2,0)]),
  'B2': (2, [(0,1),(0,1)]),
  'B3': (2, [(0,1),(0,1),(0,1)]),
  'K4': (4, [(0,1),(0,2),(0,3),(1,2),(1,3),(2,3)]),
  'C4': (4, [(0,1),(1,2),(2,3),(3,0)]),
  'dumbbell3': (3, [(0,1),(1,2),(2,0),(0,0)]),
}
for name, (V, E) in G.items():
    for q in (3, 5, 7):
        if len(E) <= 4 or q <= 5:
            z, c = counts(V, E, q)
            proj = (z - 1) // (q - 1)
            print(name, q, 'zeros', z, 'complement', c, 'projective', proj)
print('forests C3', forests(3, G['C3'][1]))
print('forests K4 count', len(forests(4, G['K4'][1])))
