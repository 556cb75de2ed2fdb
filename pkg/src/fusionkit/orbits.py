"""Arithmetic of S_k-orbits of Z_N^k and its finitely-supported variant.

An orbit is identified with its standard form, the weakly decreasing
k-tuple of residues mod N.  The raw product of two orbits counts, for each
candidate result, the diagonal orbits of solution triples x + y = z; it is
commutative but not associative in general.  The fixed product repairs
associativity by routing every factor through determinant expansion into
multiplications by orbits of the staircase family (t+1)^m t^(k-m), for
which the raw product provably has 0/1 coefficients.
"""

from __future__ import annotations

import itertools

from .partitions import conjugate, normalize, padded

ENUMERATION_LIMIT = 12  # k! paths refuse anything larger
BRUTEFORCE_LIMIT = 8


def _check_tuple(t, N: int) -> tuple:
    t = tuple(int(x) for x in t)
    if any(not 0 <= x < N for x in t):
        raise ValueError(f"entries of {t} must be residues mod {N}")
    return t


def standard_form(t, N: int) -> tuple:
    """Weakly decreasing representative of the S_k-orbit of t."""
    return tuple(sorted(_check_tuple(t, N), reverse=True))


def orbit_multiplicities(o, N: int) -> tuple:
    """Residue counts (a_0, ..., a_{N-1}) of an orbit representative."""
    o = _check_tuple(o, N)
    counts = [0] * N
    for x in o:
        counts[x] += 1
    return tuple(counts)


def rep_from_multiplicities(counts) -> tuple:
    """Standard form ((N-1)^{a_{N-1}}, ..., 1^{a_1}, 0^{a_0}) from counts."""
    entries = []
    for value in range(len(counts) - 1, -1, -1):
        entries.extend([value] * counts[value])
    return tuple(entries)


def orbit_elements(o, N: int) -> set:
    """All distinct permutations of o; size k!/prod(a_j!)."""
    o = _check_tuple(o, N)
    if len(o) > ENUMERATION_LIMIT:
        raise ValueError(f"k = {len(o)} too large for orbit enumeration")
    return set(_iter_distinct_permutations(o))


def _iter_distinct_permutations(o):
    """Distinct permutations of a tuple without generating duplicates."""
    counts = {}
    for x in o:
        counts[x] = counts.get(x, 0) + 1
    values = sorted(counts)
    k = len(o)
    slot = [0] * k

    def rec(i):
        if i == k:
            yield tuple(slot)
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                slot[i] = v
                yield from rec(i + 1)
                counts[v] += 1

    yield from rec(0)


def _check_pair(a, b, ctx):
    N, k = ctx
    a, b = _check_tuple(a, N), _check_tuple(b, N)
    if len(a) != k or len(b) != k:
        raise ValueError(
            f"orbit lengths {len(a)}, {len(b)} do not match context k = {k}"
        )
    return a, b


def _bounded_compositions(total, bounds):
    """Vectors c with sum(c) = total and 0 <= c_i <= bounds[i]."""

    def rec(i, rest, prefix):
        if i == len(bounds):
            if rest == 0:
                yield tuple(prefix)
            return
        tail = sum(bounds[i + 1 :])
        lo = max(0, rest - tail)
        for c in range(lo, min(bounds[i], rest) + 1):
            yield from rec(i + 1, rest - c, prefix + [c])

    yield from rec(0, total, [])


def raw_orbit_product(a, b, ctx) -> dict:
    """Multiset of orbits [a_hat + y] over non-redundant equations.

    Fixing the standard form a_hat splits coordinates into constant blocks,
    one per residue occurring in a_hat.  Two elements y, y' of [b] give
    redundant equations exactly when the stabilizer of a_hat maps one to the
    other, i.e. when the multiset of y-values inside each block agrees with
    that of y'.  So instead of walking all of [b], enumerate the ways of
    splitting the residue multiset of b across the blocks.
    """
    N, k = ctx
    a, b = _check_pair(a, b, ctx)
    a_counts = orbit_multiplicities(a, N)
    blocks = [(v, a_counts[v]) for v in range(N - 1, -1, -1) if a_counts[v]]
    b_counts = orbit_multiplicities(b, N)
    result: dict = {}

    def rec(i, remaining, z_counts):
        if i == len(blocks):
            rep = rep_from_multiplicities(z_counts)
            result[rep] = result.get(rep, 0) + 1
            return
        value, block_size = blocks[i]
        for assignment in _bounded_compositions(block_size, remaining):
            new_remaining = tuple(r - c for r, c in zip(remaining, assignment))
            new_z = list(z_counts)
            for r, c in enumerate(assignment):
                if c:
                    new_z[(value + r) % N] += c
            rec(i + 1, new_remaining, new_z)

    rec(0, b_counts, [0] * N)
    return result


def m_coefficient_bruteforce(a, b, c, ctx) -> int:
    """Count S_k-orbits of {(x, y, z) in [a] x [b] x [c] : x + y = z} directly.

    Every diagonal orbit has a representative with x = a_hat, and two triples
    are equivalent iff their multisets of coordinate columns coincide, so it
    suffices to scan y over [b] and deduplicate the column multisets.  Kept
    independent of the blockwise route in raw_orbit_product on purpose.
    """
    N, k = ctx
    a, b = _check_pair(a, b, ctx)
    c = _check_tuple(c, N)
    if k > BRUTEFORCE_LIMIT:
        raise ValueError(f"k = {k} too large for brute-force orbit counting")
    a_hat = standard_form(a, N)
    c_hat = standard_form(c, N)
    seen = set()
    for y in _iter_distinct_permutations(standard_form(b, N)):
        z = tuple((x + yi) % N for x, yi in zip(a_hat, y))
        if tuple(sorted(z, reverse=True)) != c_hat:
            continue
        seen.add(tuple(sorted(zip(a_hat, y))))
    return len(seen)


def special_orbit_product(a, m: int, ctx) -> dict:
    """Product of [a] with [(1^m, 0^{k-m})], built from its 0/1 description.

    Every result orbit comes from a choice of integers m_0, ..., m_{N-1}
    with sum m and 0 <= m_j <= a_j, moving m_j entries from residue j to
    residue j+1; distinct choices give distinct orbits, each with
    coefficient exactly 1.
    """
    N, k = ctx
    a = _check_tuple(a, N)
    if len(a) != k:
        raise ValueError(f"orbit length {len(a)} does not match context k = {k}")
    if not 0 <= m <= k:
        raise ValueError(f"m = {m} out of range 0..{k}")
    a_counts = orbit_multiplicities(a, N)
    out: dict = {}
    for mvec in _bounded_compositions(m, a_counts):
        c_counts = [
            a_counts[j] - mvec[j] + mvec[(j - 1) % N] for j in range(N)
        ]
        out[rep_from_multiplicities(c_counts)] = 1
    return out


def simple_current_shift(a, t: int, ctx) -> tuple:
    """Add t to every entry mod N and restandardize: [a] x [(t^k)] = [a+t]."""
    N, _ = ctx
    a = _check_tuple(a, N)
    if not 0 <= t <= N - 1:
        raise ValueError(f"shift t = {t} out of range 0..{N - 1}")
    return tuple(sorted(((x + t) % N for x in a), reverse=True))


def _staircase_form(o, N: int):
    """Decompose o as the shift by t of (1^m, 0^{k-m}), or None.

    These are exactly the orbits with at most two residue values that are
    consecutive mod N; raw and fixed products agree on them.
    """
    values = sorted(set(o))
    if len(values) == 1:
        return values[0], 0
    if len(values) == 2:
        lo, hi = values
        if hi - lo == 1:
            return lo, sum(1 for x in o if x == hi)
        if lo == 0 and hi == N - 1:
            return hi, sum(1 for x in o if x == lo)
    return None


def orbit_partition(o) -> tuple:
    """Partition attached to an orbit: conjugate of its standard form."""
    return conjugate(normalize(tuple(sorted(o, reverse=True))))


def _permutation_sign(perm) -> int:
    inversions = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def fixed_product(a, b, ctx) -> dict:
    """Associative product on orbits matching the fusion coefficients.

    Staircase factors multiply by the raw rule directly.  Any other factor
    is expanded through its homogeneous determinant: with q the partition of
    b, sum over permutations sign(sigma) times the chain of multiplications
    by [(1^{q_i - i + sigma(i)}, 0^...)], where an index outside 0..k kills
    the term.  Chains are memoized by their sorted index multiset, which is
    sound because the step products commute.
    """
    N, k = ctx
    a, b = _check_pair(a, b, ctx)
    a = standard_form(a, N)
    b = standard_form(b, N)
    sa, sb = _staircase_form(a, N), _staircase_form(b, N)
    if sb is None and sa is not None:
        a, b, sb = b, a, sa
    if sb is not None:
        t, m = sb
        return special_orbit_product(simple_current_shift(a, t, ctx), m, ctx)
    # expand the factor whose partition has fewer rows
    if len(orbit_partition(a)) < len(orbit_partition(b)):
        a, b = b, a
    q = orbit_partition(b)
    L = len(q)
    acc: dict = {}
    chains: dict = {}
    for sigma in itertools.permutations(range(L)):
        idx = tuple(q[i] - i + sigma[i] for i in range(L))
        if any(not 0 <= m <= k for m in idx):
            continue
        key = tuple(sorted(idx))
        if key not in chains:
            cur = {a: 1}
            for m in key:
                nxt: dict = {}
                for rep, mult in cur.items():
                    for res, one in special_orbit_product(rep, m, ctx).items():
                        nxt[res] = nxt.get(res, 0) + mult * one
                cur = nxt
            chains[key] = cur
        sign = _permutation_sign(sigma)
        for rep, mult in chains[key].items():
            acc[rep] = acc.get(rep, 0) + sign * mult
    bad = {rep: mult for rep, mult in acc.items() if mult < 0}
    if bad:
        raise ArithmeticError(
            f"negative multiplicities {bad} in fixed product {a} . {b}"
        )
    return {rep: mult for rep, mult in acc.items() if mult}


# -- finitely supported variant ----------------------------------------------


def trim(o) -> tuple:
    """Standard form in the finitely-supported picture: drop trailing zeros."""
    o = tuple(o)
    while o and o[-1] == 0:
        o = o[:-1]
    return o


def tensor_orbit_product(a, b, N: int, embed_length: int | None = None) -> dict:
    """Orbit product in the direct sum of countably many Z_N factors.

    Computed by embedding both factors into Z_N^K for K at least the total
    number of nonzero entries; the coefficients stabilize, so any admissible
    K gives the same answer.
    """
    if N < 2:
        raise ValueError(f"rank parameter N must be >= 2, got {N}")
    a, b = trim(_check_tuple(a, N)), trim(_check_tuple(b, N))
    support = len(a) + len(b)
    K = support if embed_length is None else int(embed_length)
    if K < support:
        raise ValueError(
            f"embedding length {K} below the support bound {support}"
        )
    K = max(K, 1)
    ctx = (N, K)
    prod = raw_orbit_product(padded(a, K), padded(b, K), ctx)
    return {trim(rep): mult for rep, mult in prod.items()}
