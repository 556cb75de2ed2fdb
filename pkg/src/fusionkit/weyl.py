"""Tableau forms of the Racah-Speiser and Kac-Walton algorithms.

Both algorithms shift the tableau contents of one factor by the other
factor's partition plus the staircase rho = (N-1, ..., 1, 0) and push the
resulting length-N sequences back into a fundamental region, accumulating
an alternating sum.  For tensor products the region is the strictly
decreasing sequences (finite Weyl group, i.e. sorting); at level k an extra
affine reflection bounds the spread of a sorted sequence s by N + k:

    r0: s |-> (s_N + (N+k), s_2, ..., s_{N-1}, s_1 - (N+k))

Sequences with a repeated entry, or with spread exactly N + k, sit on a
reflection wall and are dropped.  Every r0 application strictly decreases
the sum of squares, so the push-down terminates.
"""

from __future__ import annotations

from .partitions import padded, tableau_contents, weight_to_partition

BOX_LIMIT = 30


def _sort_desc_signed(seq):
    """(sign, sorted tuple) for a repeat-free sequence, else None."""
    if len(set(seq)) < len(seq):
        return None
    inv = sum(
        1
        for i in range(len(seq))
        for j in range(i + 1, len(seq))
        if seq[i] < seq[j]
    )
    return (-1 if inv % 2 else 1), tuple(sorted(seq, reverse=True))


def _reflect_to_fundamental(seq, wall: int):
    """Push seq into the region {sorted, spread < wall}; None if on a wall."""
    sign = 1
    cur = tuple(seq)
    while True:
        res = _sort_desc_signed(cur)
        if res is None:
            return None
        s0, s = res
        sign *= s0
        spread = s[0] - s[-1]
        if spread == wall:
            return None
        if spread < wall:
            return sign, s
        cur = (s[-1] + wall,) + s[1:-1] + (s[0] - wall,)
        sign = -sign


def _shift_vector(mu_weight, N: int) -> tuple:
    mu = padded(weight_to_partition(mu_weight), N)
    return tuple(mu[j] + (N - 1 - j) for j in range(N))


def _check_weight(w, N: int) -> tuple:
    w = tuple(int(x) for x in w)
    if len(w) != N - 1 or any(x < 0 for x in w):
        raise ValueError(f"not a dominant weight of A_{N - 1}: {w}")
    return w


def weight_multiplicities(lam, N: int, box_limit: int = BOX_LIMIT) -> dict:
    """Weight-space dimensions of the module with highest weight lam.

    Tableaux of the shape attached to lam with entries 1..N are grouped by
    content; each content maps to the weight given by its consecutive
    differences.  The total count is the dimension of the module.
    """
    lam = _check_weight(lam, N)
    shape = weight_to_partition(lam)
    out: dict = {}
    for content, count in tableau_contents(shape, N, box_limit).items():
        w = tuple(content[j] - content[j + 1] for j in range(N - 1))
        out[w] = out.get(w, 0) + count
    return out


def _alternating_sum(lam, mu, N, wall, box_limit):
    shape = weight_to_partition(lam)
    shift = _shift_vector(mu, N)
    acc: dict = {}
    for content, count in tableau_contents(shape, N, box_limit).items():
        seq = tuple(c + s for c, s in zip(content, shift))
        res = (
            _sort_desc_signed(seq)
            if wall is None
            else _reflect_to_fundamental(seq, wall)
        )
        if res is None:
            continue
        sign, s = res
        acc[s] = acc.get(s, 0) + sign * count
    out: dict = {}
    for s, mult in acc.items():
        if mult == 0:
            continue
        if mult < 0:
            raise ArithmeticError(
                f"negative multiplicity {mult} at {s}; alternating sum failed"
            )
        w = tuple(s[j] - s[j + 1] - 1 for j in range(N - 1))
        out[w] = out.get(w, 0) + mult
    return out


def racah_speiser_tensor(lam, mu, N: int, box_limit: int = BOX_LIMIT) -> dict:
    """Tensor-product decomposition of two dominant weights of A_{N-1}."""
    lam, mu = _check_weight(lam, N), _check_weight(mu, N)
    return _alternating_sum(lam, mu, N, None, box_limit)


def kac_walton_fusion(lam, mu, ctx, box_limit: int = BOX_LIMIT) -> dict:
    """Level-k fusion decomposition, by reflecting into the affine region."""
    N, k = ctx
    lam, mu = _check_weight(lam, N), _check_weight(mu, N)
    for w in (lam, mu):
        if sum(w) > k:
            raise ValueError(f"weight {w} has level {sum(w)} > k = {k}")
    return _alternating_sum(lam, mu, N, N + k, box_limit)


def module_dimension(lam, N: int, box_limit: int = BOX_LIMIT) -> int:
    """Dimension of the irreducible module with highest weight lam."""
    return sum(weight_multiplicities(lam, N, box_limit).values())
