"""Homology groups of the cup complex and the derived numerical invariants.

The two-periodic homology is reported through its even and odd parts; the
common rank h is an integer for rank >= 1 and 1/2 by convention for rank 0
(rational homology spheres).
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .cup_complex import boundary_matrix, build_mod3_complexes, empty_boundary_into
from .exact_linalg import is_prime, rank_over_field, smith_normal_form, _divisibility_chain
from .forms import FormError, reduce_mod_p
from .report import CheckReport


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group: free rank plus a divisibility chain.

    Torsion entries are >= 2 and each divides the next, so the rendering is
    injective on isomorphism classes.
    """

    free_rank: int
    torsion: tuple = ()

    @classmethod
    def from_parts(cls, free_rank, moduli):
        """Normalize arbitrary moduli: drop units, force d_1 | d_2 | ... order."""
        chain = [d for d in _divisibility_chain([m for m in moduli if m]) if d > 1]
        return cls(free_rank, tuple(chain))

    def render(self):
        if self.free_rank == 0 and not self.torsion:
            return "0"
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts)


def direct_sum(groups):
    free = sum(g.free_rank for g in groups)
    moduli = [d for g in groups for d in g.torsion]
    return AbelianGroup.from_parts(free, moduli)


@dataclass(frozen=True)
class CupHomologyResult:
    rank: int
    by_degree: tuple  # AbelianGroup per exterior degree 0..rank
    even: AbelianGroup
    odd: AbelianGroup
    h_ev: int
    h_odd: int
    h: Fraction


def homology_group(d_out, d_in):
    """ker(d_out)/im(d_in) at the degree where d_out starts and d_in ends.

    Free rank is dim - rank(d_out) - rank(d_in); torsion is the nonunit part
    of the invariant factors of d_in.  A nonzero composite is a hard error:
    the complex itself is broken.
    """
    dim = d_out.matrix.cols
    if d_in.matrix.rows != dim:
        raise ValueError("boundary maps do not meet in a common degree")
    if d_out.matrix.rows and d_in.matrix.cols:
        if not d_out.matrix.mul(d_in.matrix).is_zero():
            raise RuntimeError(
                f"d_{d_out.source_degree} o d_{d_in.source_degree} != 0: not a chain complex")
    snf_in = smith_normal_form(d_in.matrix)
    free = dim - rank_over_field(d_out.matrix, 0) - snf_in.rank
    return AbelianGroup.from_parts(free, [d for d in snf_in.invariant_factors if d > 1])


def cup_homology(f):
    """Full integral homology, split by exterior degree and by parity."""
    b = f.rank
    groups = [None] * (b + 1)
    for cx in build_mod3_complexes(f):
        for pos, k in enumerate(cx.degrees):
            d_out = cx.boundaries[pos - 1] if pos >= 1 else boundary_matrix(f, k)
            d_in = cx.boundaries[pos] if pos < len(cx.boundaries) else empty_boundary_into(f, k)
            groups[k] = homology_group(d_out, d_in)
    even = direct_sum(groups[0::2])
    odd = direct_sum(groups[1::2])
    h = Fraction(1, 2) if b == 0 else Fraction(even.free_rank)
    return CupHomologyResult(rank=b, by_degree=tuple(groups), even=even, odd=odd,
                             h_ev=even.free_rank, h_odd=odd.free_rank, h=h)


def _degree_ranks(f, characteristic):
    """rank of every boundary map over the given field, indexed by source degree."""
    ranks = {}
    for k in range(3, f.rank + 1):
        ranks[k] = rank_over_field(boundary_matrix(f, k).matrix, characteristic)
    return ranks


def h_rank(f):
    """The invariant h as an exact rational, skipping torsion bookkeeping.

    Rank-only path: h equals the sum over even degrees k of
    C(b, k) - rank(d_k) - rank(d_{k+3}).
    """
    b = f.rank
    if b == 0:
        return Fraction(1, 2)
    ranks = _degree_ranks(f, 0)
    h = 0
    for k in range(0, b + 1, 2):
        h += comb(b, k) - ranks.get(k, 0) - ranks.get(k + 3, 0)
    return Fraction(h)


def mod_p_degree_dims(f, p):
    """F_p dimension of the mod-p homology in each exterior degree."""
    if not is_prime(p):
        raise FormError(f"{p} is not prime")
    g = reduce_mod_p(f, p)
    ranks = _degree_ranks(g, p)
    return [comb(g.rank, k) - ranks.get(k, 0) - ranks.get(k + 3, 0)
            for k in range(g.rank + 1)]


def h_mod_p(f, p):
    """The mod-p invariant h_p; rejects rank 0 (use the 1/2 convention of h)."""
    if f.rank == 0:
        raise FormError("h_p is defined through the rank; rank 0 uses h = 1/2")
    dims = mod_p_degree_dims(f, p)
    even = sum(dims[0::2])
    odd = sum(dims[1::2])
    if even != odd:
        raise RuntimeError(f"mod-{p} parity ranks differ ({even} != {odd}): bug")
    return even


@dataclass(frozen=True)
class KpValue:
    """k_p = log2(2 h_p), carried exactly via the pair (h_p, 2 h_p)."""

    p: int
    h_p: Fraction
    doubled: int
    log2_text: str

    @property
    def value(self):
        return math.log2(self.doubled)


def k_p(f, p):
    """Connected-sum-additive invariant log2(2 h_p); p = 1 means h itself."""
    if p == 1:
        hp = h_rank(f)
    elif f.rank == 0:
        # Mod-p homology of a rank-0 form is Z/p in even degrees only; the
        # same 1/2 convention applies for every p.
        hp = Fraction(1, 2)
    else:
        hp = Fraction(h_mod_p(f, p))
    doubled = int(2 * hp)
    if doubled & (doubled - 1) == 0:
        text = str(doubled.bit_length() - 1)
    else:
        text = f"{math.log2(doubled):.12f}"
    return KpValue(p=p, h_p=hp, doubled=doubled, log2_text=text)


def uct_check(f, p):
    """Universal-coefficients consistency between integral and mod-p results.

    In each degree k the F_p dimension must equal the free rank plus the
    p-torsion counts of degree k and of degree k - 3 (its predecessor inside
    the same mod-3 complex).
    """
    if not is_prime(p):
        raise FormError(f"{p} is not prime")
    rep = CheckReport(f"universal coefficients mod {p} on rank {f.rank}")
    integral = cup_homology(f)
    dims = mod_p_degree_dims(f, p)

    def t_p(k):
        if k < 0:
            return 0
        return sum(1 for d in integral.by_degree[k].torsion if d % p == 0)

    for k in range(f.rank + 1):
        expect = integral.by_degree[k].free_rank + t_p(k) + t_p(k - 3)
        rep.add(f"degree {k}", dims[k] == expect,
                "" if dims[k] == expect else f"dim_Fp {dims[k]} != {expect}")
    return rep
