"""Independent Boolean-relation implementation of the three constructions.

Over the two-element base the scalar action is forced (top acts as identity,
bottom annihilates), so a module is a bare lattice, a frame is a crisp
relation R on its instants, and the constructions reduce to classical
relational algebra.  Everything here works on raw value tuples and leq
matrices; none of the package machinery is used, so agreement with the
package over the crisp base is a genuine cross-check.
"""

from itertools import product


def crisp_join(leq, items, n):
    """Least upper bound by scanning the order matrix."""
    ubs = [u for u in range(n)
           if all(leq[x][u] for x in items)]
    for u in ubs:
        if all(leq[u][v] for v in ubs):
            return u
    raise AssertionError("no least upper bound")


def crisp_meet(leq, items, n):
    lbs = [u for u in range(n)
           if all(leq[u][x] for x in items)]
    for u in lbs:
        if all(leq[v][u] for v in lbs):
            return u
    raise AssertionError("no greatest lower bound")


def crisp_bottom(leq, n):
    return crisp_join(leq, [], n)


def crisp_fj(leq, n, R):
    """The powered operator: (F x)(i) = join of x(k) over R(i, k).

    Returns a dict mapping each tuple in A^T to its image tuple.
    """
    t = len(R)
    out = {}
    for x in product(range(n), repeat=t):
        image = tuple(
            crisp_join(leq, [x[k] for k in range(t) if R[i][k]], n)
            for i in range(t))
        out[x] = image
    return out


def _is_join_preserving(vec, leq_s, ns, leq_t, nt):
    if vec[crisp_bottom(leq_s, ns)] != crisp_bottom(leq_t, nt):
        return False
    for a in range(ns):
        for b in range(ns):
            j = crisp_join(leq_s, [a, b], ns)
            if vec[j] != crisp_join(leq_t, [vec[a], vec[b]], nt):
                return False
    return True


def crisp_homs(leq_s, ns, leq_t, nt):
    """All join- and bottom-preserving maps, as sorted value tuples."""
    return sorted(vec for vec in product(range(nt), repeat=ns)
                  if _is_join_preserving(vec, leq_s, ns, leq_t, nt))


def crisp_hom_frame(leq_a, na, F, leq_l, nl):
    """Hom points and the crisp accessibility between them.

    r(alpha, beta) = 1 iff beta(x) <= alpha(F x) for every x; over the
    Boolean base the residuation meet collapses to this implication.
    """
    points = crisp_homs(leq_a, na, leq_l, nl)
    r = [[1 if all(leq_l[beta[x]][alpha[F[x]]] for x in range(na)) else 0
          for beta in points]
         for alpha in points]
    return points, r


def crisp_tensor(leq, n, R, F):
    """Saturated tuples of the tensor quotient and the collapse map.

    A tuple t is saturated when every generating pair (c, d), read in both
    orientations, satisfies d <= t implies c <= t; the pairs need no scalar
    closure because the only non-trivial scalar acts as the identity.
    The class of t is the least saturated tuple above it.
    """
    t_len = len(R)
    bot = crisp_bottom(leq, n)

    def delta(x, i):
        return tuple(x if k == i else bot for k in range(t_len))

    def smear(x, i):
        return tuple(x if R[i][k] else bot for k in range(t_len))

    def tup_join(u, v):
        return tuple(crisp_join(leq, [a, b], n) for a, b in zip(u, v))

    def tup_leq(u, v):
        return all(leq[a][b] for a, b in zip(u, v))

    pairs = set()
    for x in range(n):
        for i in range(t_len):
            d = delta(F[x], i)
            c = tup_join(smear(x, i), d)
            if c != d:
                pairs.add((c, d))
                pairs.add((d, c))

    def saturated(t):
        return all(not tup_leq(d, t) or tup_leq(c, t) for c, d in pairs)

    fixed = [t for t in product(range(n), repeat=t_len) if saturated(t)]

    def class_of(t):
        above = [s for s in fixed if tup_leq(t, s)]
        m = tuple(crisp_meet(leq, [s[i] for s in above], n)
                  for i in range(t_len))
        assert m in above
        return m

    return fixed, class_of
