"""The level-k fusion ring of A_{N-1} in its Schur-polynomial realization.

Basis elements are the partitions inside the (N-1) x k box.  Multiplication
by a one-row factor h_m follows the level-k Pieri rule (row strips inside
the N x k box, full columns stripped afterwards); a general product expands
one factor as its homogeneous Jacobi-Trudi determinant, with h_m = 0
whenever m is outside 0..k, and iterates the Pieri rule over each
determinant term.  Signed intermediates must cancel to a non-negative
result; that cancellation is asserted on every product.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .orbits import raw_orbit_product
from .partitions import (
    count_cylindric_tableaux,
    normalize,
    padded,
    partition_to_orbit,
    partitions_in_box,
    reduce_full_columns,
)

TABLE_CAP = 200


def _check_basis_element(p, ctx) -> tuple:
    N, k = ctx
    p = normalize(p)
    if len(p) > N - 1 or (p and p[0] > k):
        raise ValueError(f"partition {p} not inside the {N - 1} x {k} box")
    return p


def basis(ctx) -> list:
    """Canonical basis partitions in graded lexicographic order."""
    N, k = ctx
    return sorted(partitions_in_box(N - 1, k), key=lambda p: (sum(p), p))


def pieri_h(p, m: int, ctx) -> dict:
    """Multiply by h_m: sum over nu in the N x k box with nu/p an m-row strip."""
    N, k = ctx
    p = _check_basis_element(p, ctx)
    if not 0 <= m <= k:
        raise ValueError(f"m = {m} out of range 0..{k}")
    pp = padded(p, N)
    out: dict = {}

    def rec(i, prev, rest, acc):
        if i == N:
            if rest == 0:
                key = reduce_full_columns(acc, N)
                out[key] = out.get(key, 0) + 1
            return
        hi = min(prev, pp[i] + rest)
        if i > 0:
            hi = min(hi, pp[i - 1])  # at most one new box per column
        for x in range(pp[i], hi + 1):
            rec(i + 1, x, rest - (x - pp[i]), acc + (x,))

    rec(0, k, m, ())
    return out


def pieri_e(p, m: int, ctx) -> dict:
    """Multiply by e_m: column strips with the nu_1 - nu_N <= k restriction."""
    N, k = ctx
    p = _check_basis_element(p, ctx)
    if not 0 <= m <= N:
        raise ValueError(f"m = {m} out of range 0..{N}")
    pp = padded(p, N)
    out: dict = {}
    for rows in itertools.combinations(range(N), m):
        nu = list(pp)
        for r in rows:
            nu[r] += 1
        if any(nu[i] < nu[i + 1] for i in range(N - 1)):
            continue
        if nu[0] - nu[N - 1] > k:
            continue
        key = reduce_full_columns(tuple(nu), N)
        out[key] = out.get(key, 0) + 1
    return out


def _iterate_pieri_h(start: dict, ms, ctx) -> dict:
    cur = dict(start)
    for m in ms:
        nxt: dict = {}
        for p, mult in cur.items():
            for q, one in pieri_h(p, m, ctx).items():
                nxt[q] = nxt.get(q, 0) + mult * one
        cur = nxt
    return cur


def multiply(p, q, ctx) -> dict:
    """Product of two basis elements, via Jacobi-Trudi iteration.

    The factor with fewer rows is expanded: sum over permutations sigma of
    sign(sigma) h_{q_i - i + sigma(i)}, each term acting on the other factor
    through iterated Pieri rules.  Terms with an index outside 0..k vanish.
    Chains are memoized by their sorted index multiset.
    """
    N, k = ctx
    p, q = _check_basis_element(p, ctx), _check_basis_element(q, ctx)
    if not q:
        return {p: 1}
    if not p:
        return {q: 1}
    if len(p) < len(q):
        p, q = q, p
    L = len(q)
    acc: dict = {}
    chains: dict = {}
    for sigma in itertools.permutations(range(L)):
        idx = tuple(q[i] - i + sigma[i] for i in range(L))
        if any(not 0 <= m <= k for m in idx):
            continue
        key = tuple(sorted(idx))
        if key not in chains:
            chains[key] = _iterate_pieri_h({p: 1}, key, ctx)
        sign = 1 if _inversions(sigma) % 2 == 0 else -1
        for r, mult in chains[key].items():
            acc[r] = acc.get(r, 0) + sign * mult
    bad = {r: mult for r, mult in acc.items() if mult < 0}
    if bad:
        raise ArithmeticError(
            f"negative multiplicities {bad} in product {p} * {q} at {tuple(ctx)}"
        )
    return {r: mult for r, mult in acc.items() if mult}


def _inversions(perm) -> int:
    return sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )


def multiply_by_h_sequence(p, eps, ctx) -> dict:
    """Product with h_{eps_1} ... h_{eps_r} in one pass, via cylindric tableaux.

    The coefficient of nu is the fusion skew Kostka number of nu/p with
    content eps; equals iterating pieri_h factor by factor.
    """
    N, k = ctx
    p = _check_basis_element(p, ctx)
    eps = tuple(int(x) for x in eps)
    if any(not 0 <= e <= k for e in eps):
        raise ValueError(f"content entries must lie in 0..{k}: {eps}")
    total = sum(eps)
    pp = padded(p, N)
    out: dict = {}

    def rec(i, prev, rest, acc):
        if i == N:
            if rest:
                return
            nu = normalize(acc)
            if (nu[0] if nu else 0) - acc[N - 1] > k:
                return
            count = count_cylindric_tableaux(nu, p, eps, ctx)
            if count:
                key = reduce_full_columns(nu, N)
                out[key] = out.get(key, 0) + count
            return
        for x in range(pp[i], min(prev, pp[i] + rest) + 1):
            rec(i + 1, x, rest - (x - pp[i]), acc + (x,))

    rec(0, pp[0] + total, total, ())
    return out


def simple_current_power(p, t: int, ctx) -> tuple:
    """Apply the simple current h_k t times; each step is a single term."""
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    N, k = ctx
    p = _check_basis_element(p, ctx)
    for _ in range(t):
        (p,) = pieri_h(p, k, ctx).keys()
    return p


# -- classical (level-free) products, for tensor decompositions --------------


def pieri_h_tensor(p, m: int, N: int) -> dict:
    """Classical Pieri rule: row strips with at most N rows, no width bound."""
    p = normalize(p)
    if len(p) > N - 1:
        raise ValueError(f"partition {p} has more than {N - 1} rows")
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    pp = padded(p, N)
    out: dict = {}

    def rec(i, prev, rest, acc):
        if i == N:
            if rest == 0:
                key = reduce_full_columns(acc, N)
                out[key] = out.get(key, 0) + 1
            return
        hi = min(prev, pp[i] + rest)
        if i > 0:
            hi = min(hi, pp[i - 1])
        for x in range(pp[i], hi + 1):
            rec(i + 1, x, rest - (x - pp[i]), acc + (x,))

    rec(0, pp[0] + m, m, ())
    return out


def tensor_multiply(p, q, N: int) -> dict:
    """Tensor-product multiplicities via the classical Jacobi-Trudi iteration."""
    p, q = normalize(p), normalize(q)
    if len(p) > N - 1 or len(q) > N - 1:
        raise ValueError(f"factors must have at most {N - 1} rows")
    if not q:
        return {p: 1}
    if not p:
        return {q: 1}
    if len(p) < len(q):
        p, q = q, p
    L = len(q)
    acc: dict = {}
    chains: dict = {}
    for sigma in itertools.permutations(range(L)):
        idx = tuple(q[i] - i + sigma[i] for i in range(L))
        if any(m < 0 for m in idx):
            continue
        key = tuple(sorted(idx))
        if key not in chains:
            cur = {p: 1}
            for m in key:
                nxt: dict = {}
                for r, mult in cur.items():
                    for s, one in pieri_h_tensor(r, m, N).items():
                        nxt[s] = nxt.get(s, 0) + mult * one
                cur = nxt
            chains[key] = cur
        sign = 1 if _inversions(sigma) % 2 == 0 else -1
        for r, mult in chains[key].items():
            acc[r] = acc.get(r, 0) + sign * mult
    bad = {r: mult for r, mult in acc.items() if mult < 0}
    if bad:
        raise ArithmeticError(f"negative multiplicities {bad} in {p} * {q}")
    return {r: mult for r, mult in acc.items() if mult}


# -- tables and axioms --------------------------------------------------------


@dataclass(frozen=True)
class FusionTable:
    """Dense structure constants N[a][b][c] over an ordered basis."""

    N: int
    k: int
    basis: tuple
    constants: tuple

    def index(self, p) -> int:
        return self.basis.index(normalize(p))

    def coefficient(self, p, q, r) -> int:
        return self.constants[self.index(p)][self.index(q)][self.index(r)]

    def to_json_dict(self) -> dict:
        n = len(self.basis)
        pairs = []
        for a in range(n):
            for b in range(n):
                pairs.append(
                    [[c, m] for c, m in enumerate(self.constants[a][b]) if m]
                )
        return {
            "schema": "fusionkit/table/v1",
            "N": self.N,
            "k": self.k,
            "basis": [list(p) for p in self.basis],
            "constants": pairs,
        }

    @classmethod
    def from_json_dict(cls, data) -> "FusionTable":
        if data.get("schema") != "fusionkit/table/v1":
            raise ValueError(f"unsupported schema {data.get('schema')!r}")
        base = tuple(tuple(p) for p in data["basis"])
        n = len(base)
        if len(data["constants"]) != n * n:
            raise ValueError("constants length does not match basis size")
        constants = []
        flat = data["constants"]
        for a in range(n):
            row = []
            for b in range(n):
                dense = [0] * n
                for c, m in flat[a * n + b]:
                    dense[c] = m
                row.append(tuple(dense))
            constants.append(tuple(row))
        return cls(int(data["N"]), int(data["k"]), base, tuple(constants))


def full_table(ctx, cap: int = TABLE_CAP) -> FusionTable:
    """Structure constants of every basis pair; symmetric pairs computed once."""
    N, k = ctx
    base = tuple(basis(ctx))
    n = len(base)
    if n > cap:
        raise ValueError(f"basis size {n} exceeds cap {cap}")
    index = {p: i for i, p in enumerate(base)}
    constants = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            dense = [0] * n
            for r, mult in multiply(base[a], base[b], ctx).items():
                dense[index[r]] = mult
            constants[a][b] = tuple(dense)
            constants[b][a] = tuple(dense)
    return FusionTable(N, k, base, tuple(tuple(row) for row in constants))


@dataclass
class AxiomReport:
    """Outcome of the fusion-algebra axiom checks, with failure witnesses."""

    checks: list

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c[1]]


def verify_fusion_axioms(table: FusionTable) -> AxiomReport:
    """Check the defining properties of a fusion algebra on a dense table."""
    t = table.constants
    n = len(table.basis)
    checks = []

    witness = next(
        (
            (a, b, c, t[a][b][c])
            for a in range(n)
            for b in range(n)
            for c in range(n)
            if not isinstance(t[a][b][c], int) or t[a][b][c] < 0
        ),
        None,
    )
    checks.append(("non-negative integer constants", witness is None, witness))

    witness = next(
        (
            (a, b, c, t[a][b][c], t[b][a][c])
            for a in range(n)
            for b in range(n)
            for c in range(n)
            if t[a][b][c] != t[b][a][c]
        ),
        None,
    )
    checks.append(("commutativity", witness is None, witness))

    witness = None
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for e in range(n):
                    left = sum(t[a][b][d] * t[d][c][e] for d in range(n))
                    right = sum(t[b][c][d] * t[a][d][e] for d in range(n))
                    if left != right:
                        witness = (a, b, c, e, left, right)
                        break
                if witness:
                    break
            if witness:
                break
        if witness:
            break
    checks.append(("associativity", witness is None, witness))

    omega = next(
        (
            a
            for a in range(n)
            if all(
                t[a][b][c] == (1 if b == c else 0)
                for b in range(n)
                for c in range(n)
            )
        ),
        None,
    )
    checks.append(("identity element", omega is not None, None))

    if omega is None:
        checks.append(("conjugation is a permutation with C^2 = I", False, "no identity"))
        checks.append(("total symmetry of N_{a,b,c}", False, "no identity"))
        return AxiomReport(checks)

    sigma = [None] * n
    ok = True
    witness = None
    for a in range(n):
        images = [b for b in range(n) if t[a][b][omega]]
        if len(images) != 1 or t[a][images[0]][omega] != 1:
            ok, witness = False, (a, images)
            break
        sigma[a] = images[0]
    if ok and (sorted(sigma) != list(range(n)) or any(sigma[sigma[a]] != a for a in range(n))):
        ok, witness = False, ("sigma", sigma)
    checks.append(("conjugation is a permutation with C^2 = I", ok, witness))

    witness = None
    if ok:
        witness = next(
            (
                (a, b, c)
                for a in range(n)
                for b in range(n)
                for c in range(n)
                if not (
                    t[a][b][sigma[c]] == t[c][b][sigma[a]] == t[a][c][sigma[b]]
                )
            ),
            None,
        )
        checks.append(("total symmetry of N_{a,b,c}", witness is None, witness))
    else:
        checks.append(("total symmetry of N_{a,b,c}", False, "no conjugation"))
    return AxiomReport(checks)


# -- small-rank closed-form cross-checks --------------------------------------


def gepner_witten_a1(a: int, b: int, c: int, k: int) -> int:
    """Closed-form A_1 level-k fusion coefficient.

    The factor labels a, b must lie in 0..k; the result label c may be any
    non-negative integer (the parity and interval conditions give 0 beyond
    the basis range).
    """
    for x in (a, b):
        if not 0 <= x <= k:
            raise ValueError(f"label {x} out of range 0..{k}")
    if c < 0:
        raise ValueError(f"label {c} must be >= 0")
    if (a + b - c) % 2 != 0:
        return 0
    return 1 if abs(a - b) <= c <= min(a + b, 2 * k - a - b) else 0


def fw_a2_relation_check(ctx) -> list:
    """Violations of raw = C(fusion + 1, 2) over all A_2 level-k triples."""
    N, k = ctx
    if N != 3:
        raise ValueError(f"this relation is specific to N = 3, got N = {N}")
    base = basis(ctx)
    orbits = {p: partition_to_orbit(p, ctx) for p in base}
    violations = []
    for p in base:
        for q in base:
            fus = multiply(p, q, ctx)
            raw = raw_orbit_product(orbits[p], orbits[q], ctx)
            for r in base:
                predicted = comb(fus.get(r, 0) + 1, 2)
                actual = raw.get(orbits[r], 0)
                if predicted != actual:
                    violations.append((p, q, r, actual, predicted))
    return violations
