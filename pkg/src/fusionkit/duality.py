"""Simple-current orbits, quotient fusion algebras, and rank-level duality.

The simple currents act on the orbit basis by adding a constant residue;
their orbits ("SC-orbits") index the quotient algebra obtained by
identifying every simple current with the identity.  Partition conjugation
on representatives with a zero entry implements the isomorphism between the
(N, k) and (k, N) quotients.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fusion import multiply
from .orbits import simple_current_shift
from .partitions import (
    fusion_context,
    orbit_to_partition,
    padded,
    partition_to_orbit,
    weight_to_orbit,
    level_k_weights,
)


def sc_orbit(a, ctx) -> frozenset:
    """Closure of {a} under shifting by every residue t."""
    N, _ = ctx
    return frozenset(simple_current_shift(a, t, ctx) for t in range(N))


def canonical_sc_representative(members) -> tuple:
    """Lexicographically smallest member with a zero entry."""
    with_zero = [m for m in members if 0 in m]
    if not with_zero:
        raise ValueError(f"no member of {sorted(members)} has a zero entry")
    return min(with_zero)


def rank_level_dual(a, ctx) -> tuple:
    """Conjugate-partition image of an orbit with a zero entry, in O(k, N).

    The orbit ((N-1)^{a_{N-1}}, ..., 1^{a_1}, 0^{a_0}) with a_0 > 0 maps to
    the N-tuple (sum_{i>=1} a_i, sum_{i>=2} a_i, ..., a_{N-1}, 0, ...) whose
    entries are residues mod k.  Applying the map twice restandardizes back
    to the original orbit.
    """
    N, k = ctx
    if 0 not in a:
        raise ValueError(
            f"orbit {a} has no zero entry; shift within its SC-orbit first"
        )
    return padded(orbit_to_partition(a), N)


@dataclass(frozen=True)
class QuotientTable:
    """Structure constants of the simple-current quotient algebra."""

    N: int
    k: int
    classes: tuple  # tuple of frozensets of orbit representatives
    reps: tuple  # canonical representative per class
    constants: tuple  # constants[A][B][C]

    def class_index(self, orbit) -> int:
        for i, members in enumerate(self.classes):
            if orbit in members:
                return i
        raise KeyError(f"orbit {orbit} not in any class")


def _class_product(rep_a, rep_b, classes, ctx) -> tuple:
    """Class-summed fusion coefficients of two fixed orbit representatives."""
    N, _ = ctx
    pa, pb = orbit_to_partition(rep_a), orbit_to_partition(rep_b)
    expansion = multiply(pa, pb, ctx)
    by_orbit = {partition_to_orbit(r, ctx): m for r, m in expansion.items()}
    return tuple(
        sum(by_orbit.get(member, 0) for member in members) for members in classes
    )


def quotient_table(ctx, check_well_defined: bool = True) -> QuotientTable:
    """Quotient structure constants over SC-orbit classes.

    Constants are read off by fixing representatives and summing target
    multiplicities over each target class.  Independence of the chosen
    representatives is asserted, not assumed.
    """
    ctx = fusion_context(*ctx)
    N, k = ctx
    orbits = [weight_to_orbit(w, ctx) for w in level_k_weights(N, k)]
    seen = set()
    classes = []
    for o in sorted(orbits):
        if o in seen:
            continue
        members = sc_orbit(o, ctx)
        seen |= members
        classes.append(members)
    classes.sort(key=lambda ms: canonical_sc_representative(ms))
    classes = tuple(classes)
    reps = tuple(canonical_sc_representative(ms) for ms in classes)

    constants = []
    for A, members_a in enumerate(classes):
        row = []
        for B, members_b in enumerate(classes):
            value = _class_product(reps[A], reps[B], classes, ctx)
            if check_well_defined:
                for other_a in sorted(members_a):
                    for other_b in sorted(members_b):
                        alt = _class_product(other_a, other_b, classes, ctx)
                        if alt != value:
                            raise ArithmeticError(
                                f"quotient product not well defined at "
                                f"classes {A}, {B}: representatives "
                                f"{other_a}, {other_b} give {alt} != {value}"
                            )
            row.append(value)
        constants.append(tuple(row))
    return QuotientTable(N, k, classes, reps, tuple(constants))


def verify_rank_level_duality(N: int, k: int, check_well_defined: bool = True) -> dict:
    """Transport the (N, k) quotient constants along conjugation to (k, N).

    Returns {"N", "k", "classes", "isomorphic", "witness"}; the witness names
    the first mismatch when the transport fails.
    """
    ctx = fusion_context(N, k)
    dual_ctx = fusion_context(k, N)
    t1 = quotient_table(ctx, check_well_defined)
    t2 = quotient_table(dual_ctx, check_well_defined)
    report = {
        "N": N,
        "k": k,
        "classes": len(t1.classes),
        "isomorphic": False,
        "witness": None,
    }
    if len(t1.classes) != len(t2.classes):
        report["witness"] = (
            f"class counts differ: {len(t1.classes)} vs {len(t2.classes)}"
        )
        return report

    image = []
    for rep in t1.reps:
        dual = rank_level_dual(rep, ctx)
        image.append(t2.class_index(dual))
    if sorted(image) != list(range(len(t2.classes))):
        report["witness"] = f"conjugation does not permute classes: {image}"
        return report

    n = len(t1.classes)
    for A in range(n):
        for B in range(n):
            for C in range(n):
                left = t1.constants[A][B][C]
                right = t2.constants[image[A]][image[B]][image[C]]
                if left != right:
                    report["witness"] = (
                        f"constant mismatch at classes ({A}, {B}, {C}): "
                        f"{left} vs {right}"
                    )
                    return report
    report["isomorphic"] = True
    return report
