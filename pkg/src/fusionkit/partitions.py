"""Partitions, skew shapes, tableaux, and the weight/orbit dictionaries.

Conventions used throughout the package:

* A partition is a tuple of weakly decreasing non-negative integers in
  canonical form (no trailing zeros); the empty tuple is the empty partition.
  Row 1 is the longest row of the Young diagram.
* A weight of A_{N-1} is a tuple of N-1 non-negative integers, the
  coefficients on the fundamental weights.
* An orbit representative is a weakly decreasing k-tuple of residues mod N.

The pictures are linked by conjugation: an orbit representative read as a
partition has conjugate equal to the partition attached to its weight, so a
diagram inside the (N-1) x k box can be read two ways, by rows (partition)
or by column heights (orbit).
"""

from __future__ import annotations

from typing import Iterator, NamedTuple


class FusionContext(NamedTuple):
    """Rank parameter N >= 2 and level k >= 1 for A_{N-1} at level k."""

    N: int
    k: int


def fusion_context(N, k) -> FusionContext:
    N, k = int(N), int(k)
    if N < 2:
        raise ValueError(f"rank parameter N must be >= 2, got {N}")
    if k < 1:
        raise ValueError(f"level k must be >= 1, got {k}")
    return FusionContext(N, k)


def normalize(parts) -> tuple:
    """Canonical partition form: weakly decreasing, trailing zeros trimmed."""
    parts = tuple(int(x) for x in parts)
    for i, x in enumerate(parts):
        if x < 0:
            raise ValueError(f"negative part {x} in {parts}")
        if i and parts[i - 1] < x:
            raise ValueError(f"parts not weakly decreasing: {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def padded(p, n: int) -> tuple:
    """Pad p with zeros to length n (p must not be longer than n)."""
    p = tuple(p)
    if len(p) > n:
        raise ValueError(f"partition {p} longer than {n}")
    return p + (0,) * (n - len(p))


def conjugate(p) -> tuple:
    """Transpose the Young diagram: row lengths become column heights."""
    p = normalize(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def contains(outer, inner) -> bool:
    """True iff inner_i <= outer_i for all i (inner padded with zeros)."""
    outer, inner = normalize(outer), normalize(inner)
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def skew_size(outer, inner) -> int:
    if not contains(outer, inner):
        raise ValueError(f"{inner} not contained in {outer}")
    return sum(outer) - sum(inner)


def is_row_strip(outer, inner, m: int) -> bool:
    """True iff outer/inner has exactly m boxes, at most one per column."""
    outer, inner = normalize(outer), normalize(inner)
    if not contains(outer, inner) or skew_size(outer, inner) != m:
        return False
    inner = padded(inner, len(outer))
    # one box per column <=> rows interlace: outer_{i+1} <= inner_i
    return all(outer[i + 1] <= inner[i] for i in range(len(outer) - 1))


def is_column_strip(outer, inner, m: int) -> bool:
    """True iff outer/inner has exactly m boxes, at most one per row."""
    outer, inner = normalize(outer), normalize(inner)
    if not contains(outer, inner) or skew_size(outer, inner) != m:
        return False
    inner = padded(inner, len(outer))
    return all(outer[i] - inner[i] <= 1 for i in range(len(outer)))


def is_cylindric_row_strip(outer, inner, m: int, ctx) -> bool:
    """Row strip satisfying the wrap-around bound outer_1 - inner_N <= k."""
    N, k = ctx
    outer, inner = normalize(outer), normalize(inner)
    if len(outer) > N:
        raise ValueError(f"outer partition {outer} has more than {N} rows")
    if not is_row_strip(outer, inner, m):
        return False
    first = outer[0] if outer else 0
    return first - padded(inner, N)[N - 1] <= k


def equivalent(p, q, N: int) -> bool:
    """True iff p and q have equal consecutive differences up to row N.

    Equivalently q_i = p_i + c for a single integer c, with both padded to
    length N.
    """
    p, q = padded(normalize(p), N), padded(normalize(q), N)
    return all(p[i] - p[i + 1] == q[i] - q[i + 1] for i in range(N - 1))


def reduce_full_columns(p, N: int) -> tuple:
    """Strip columns of height N: subtract the N-th part from every part."""
    p = padded(normalize(p), N)
    c = p[N - 1]
    return normalize(tuple(x - c for x in p))


# -- weight <-> partition <-> orbit dictionaries ----------------------------


def weight_to_partition(w) -> tuple:
    """Partial sums (sum_{j>=1} a_j, sum_{j>=2} a_j, ..., a_{N-1}), trimmed."""
    w = tuple(int(x) for x in w)
    if any(x < 0 for x in w):
        raise ValueError(f"weight coefficients must be >= 0: {w}")
    return normalize(tuple(sum(w[j:]) for j in range(len(w))))


def partition_to_weight(p, N: int) -> tuple:
    """Consecutive differences of p padded to length N; constant on ~-classes."""
    p = padded(normalize(p), N)
    return tuple(p[j] - p[j + 1] for j in range(N - 1))


def weight_level(w) -> int:
    return sum(w)


def weight_to_orbit(w, ctx) -> tuple:
    """Standard-form orbit ((N-1)^{a_{N-1}}, ..., 1^{a_1}, 0^{a_0}), a_0 = k - sum."""
    N, k = ctx
    w = tuple(int(x) for x in w)
    if len(w) != N - 1:
        raise ValueError(f"weight {w} has {len(w)} coefficients, expected {N - 1}")
    if any(x < 0 for x in w):
        raise ValueError(f"weight coefficients must be >= 0: {w}")
    a0 = k - sum(w)
    if a0 < 0:
        raise ValueError(f"weight {w} has level {sum(w)} > k = {k}")
    entries = []
    for value in range(N - 1, 0, -1):
        entries.extend([value] * w[value - 1])
    entries.extend([0] * a0)
    return tuple(entries)


def orbit_to_partition(o) -> tuple:
    """Conjugate of the orbit representative read as a partition."""
    return conjugate(normalize(o))


def orbit_to_weight(o, ctx) -> tuple:
    N, _ = ctx
    return partition_to_weight(orbit_to_partition(o), N)


def partition_to_orbit(p, ctx) -> tuple:
    N, _ = ctx
    return weight_to_orbit(partition_to_weight(p, N), ctx)


def level_k_weights(N: int, k: int) -> Iterator[tuple]:
    """All weights (a_1, ..., a_{N-1}) with sum <= k, in lexicographic order."""

    def rec(prefix, remaining, slots):
        if slots == 0:
            yield prefix
            return
        for a in range(remaining + 1):
            yield from rec(prefix + (a,), remaining - a, slots - 1)

    yield from rec((), k, N - 1)


def partitions_in_box(rows: int, cols: int) -> Iterator[tuple]:
    """All partitions with at most `rows` parts, each at most `cols`."""

    def rec(prefix, bound, slots):
        yield prefix
        if slots == 0:
            return
        for x in range(bound, 0, -1):
            yield from rec(prefix + (x,), x, slots - 1)

    yield from rec((), cols, rows)


# -- tableaux ----------------------------------------------------------------


def _skew_grid(outer, inner):
    """Row spans [(start, stop), ...] of the skew cells, absolute 0-based columns."""
    outer = normalize(outer)
    inner = padded(normalize(inner), len(outer)) if outer else ()
    if not contains(outer, inner):
        raise ValueError(f"{inner} not contained in {outer}")
    return [(inner[r], outer[r]) for r in range(len(outer))]


def iter_skew_tableaux(outer, inner, content) -> Iterator[dict]:
    """Yield fillings of outer/inner with content[i] copies of value i+1.

    A filling maps (row, col) -> value, rows weakly increasing left to
    right, columns strictly increasing with the row index.  Cells are filled
    row by row, left to right, so enumeration order is deterministic.
    """
    spans = _skew_grid(outer, inner)
    content = tuple(int(x) for x in content)
    if any(x < 0 for x in content):
        raise ValueError(f"content entries must be >= 0: {content}")
    total = sum(stop - start for start, stop in spans)
    if total != sum(content):
        raise ValueError(
            f"shape {outer}/{inner} has {total} boxes but content {content} "
            f"has {sum(content)}"
        )
    cells = [(r, c) for r, (start, stop) in enumerate(spans) for c in range(start, stop)]
    remaining = list(content)
    grid: dict = {}

    def fill(idx):
        if idx == len(cells):
            yield dict(grid)
            return
        r, c = cells[idx]
        lo = 1
        if (r, c - 1) in grid:
            lo = max(lo, grid[(r, c - 1)])
        if (r - 1, c) in grid:
            lo = max(lo, grid[(r - 1, c)] + 1)
        for v in range(lo, len(remaining) + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            grid[(r, c)] = v
            yield from fill(idx + 1)
            del grid[(r, c)]
            remaining[v - 1] += 1

    yield from fill(0)


def count_skew_tableaux(outer, inner, content) -> int:
    """Plain skew Kostka number: tableaux of the shape with the given content."""
    return sum(1 for _ in iter_skew_tableaux(outer, inner, content))


def _satisfies_cylindric(grid, outer, ctx) -> bool:
    N, k = ctx
    nu = padded(normalize(outer), N)
    for p in range(1, nu[N - 1] + 1):
        top = grid.get((N - 1, p - 1))
        bottom = grid.get((0, k + p - 1))
        if top is not None and bottom is not None and top >= bottom:
            return False
    return True


def count_cylindric_tableaux(outer, inner, content, ctx) -> int:
    """Fusion skew Kostka number K^{(N,k)} of the shape and content.

    Counts tableaux where additionally, for each column p <= nu_N, the entry
    in row N column p is strictly less than the entry in row 1 column k+p
    (vacuous when either cell is missing).
    """
    N, k = ctx
    outer = normalize(outer)
    if len(outer) > N:
        raise ValueError(f"outer partition {outer} has more than {N} rows")
    return sum(
        1
        for grid in iter_skew_tableaux(outer, inner, content)
        if _satisfies_cylindric(grid, outer, ctx)
    )


def tableau_contents(shape, max_entry: int, box_limit: int = 30) -> dict:
    """Content multiset of all tableaux of a straight shape, entries 1..max_entry.

    Returns {content tuple of length max_entry: number of tableaux}.  The
    total count is the dimension of the irreducible module labelled by the
    shape.
    """
    shape = normalize(shape)
    if sum(shape) > box_limit:
        raise ValueError(f"shape {shape} exceeds the {box_limit}-box guard")
    spans = _skew_grid(shape, ())
    cells = [(r, c) for r, (start, stop) in enumerate(spans) for c in range(start, stop)]
    counts: dict = {}
    content = [0] * max_entry
    grid: dict = {}

    def fill(idx):
        if idx == len(cells):
            key = tuple(content)
            counts[key] = counts.get(key, 0) + 1
            return
        r, c = cells[idx]
        lo = 1
        if (r, c - 1) in grid:
            lo = max(lo, grid[(r, c - 1)])
        if (r - 1, c) in grid:
            lo = max(lo, grid[(r - 1, c)] + 1)
        for v in range(lo, max_entry + 1):
            grid[(r, c)] = v
            content[v - 1] += 1
            fill(idx + 1)
            content[v - 1] -= 1
            del grid[(r, c)]

    fill(0)
    return counts
