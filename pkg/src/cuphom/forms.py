"""Alternating 3-form inputs: documents, built-in families, connected sums.

A form is the pair (rank b, coefficients a_ijk on strictly increasing
triples); by Sullivan's realization theorem every such pair is the triple
cup product form of some closed 3-manifold, so nothing here ever needs a
triangulation.
"""

import json
from dataclasses import dataclass
from functools import cached_property

from .exact_linalg import is_prime

# Blades fit in a machine-word bitmask below this rank; chain groups of
# size 2^63 are far beyond reach anyway.
MAX_RANK = 63


class FormError(ValueError):
    """Malformed form document or invalid family/operation parameters."""


@dataclass(frozen=True)
class ThreeForm:
    """Sparse alternating 3-form on a rank-b free abelian group.

    ``terms`` is a lex-sorted tuple of (i, j, k, a) with 1 <= i < j < k <= b
    and a != 0.
    """

    rank: int
    terms: tuple

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 0:
            raise FormError(f"rank must be a nonnegative integer, got {self.rank!r}")
        if self.rank > MAX_RANK:
            raise FormError(f"rank {self.rank} exceeds the supported maximum {MAX_RANK}")
        seen = set()
        for term in self.terms:
            if len(term) != 4 or not all(isinstance(x, int) for x in term):
                raise FormError(f"term {term!r} is not an integer quadruple [i, j, k, a]")
            i, j, k, a = term
            if not i < j < k:
                raise FormError(f"triple ({i}, {j}, {k}) is not strictly increasing")
            if i < 1 or k > self.rank:
                raise FormError(f"triple ({i}, {j}, {k}) out of range 1..{self.rank}")
            if a == 0:
                raise FormError(f"stored coefficient for ({i}, {j}, {k}) is zero")
            if (i, j, k) in seen:
                raise FormError(f"duplicate triple ({i}, {j}, {k})")
            seen.add((i, j, k))
        if list(self.terms) != sorted(self.terms):
            object.__setattr__(self, "terms", tuple(sorted(self.terms)))

    @classmethod
    def from_coeffs(cls, rank, coeffs):
        """Build a form from a {(i, j, k): a} mapping, dropping zeros."""
        terms = tuple(sorted((i, j, k, a) for (i, j, k), a in coeffs.items() if a))
        return cls(rank, terms)

    @cached_property
    def coeffs(self):
        return {(i, j, k): a for i, j, k, a in self.terms}

    @property
    def is_zero(self):
        return not self.terms


def parse_form(text):
    """Parse a canonical form document (see :func:`serialize_form`)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormError(f"form document is not valid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise FormError("form document must be a JSON object")
    extra = set(doc) - {"rank", "terms"}
    if extra:
        raise FormError(f"unexpected keys in form document: {sorted(extra)}")
    if "rank" not in doc or "terms" not in doc:
        raise FormError('form document needs both "rank" and "terms"')
    rank = doc["rank"]
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise FormError(f'"rank" must be an integer, got {rank!r}')
    if not isinstance(doc["terms"], list):
        raise FormError('"terms" must be an array of [i, j, k, a] quadruples')
    seen = set()
    terms = []
    for entry in doc["terms"]:
        if (not isinstance(entry, list) or len(entry) != 4
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in entry)):
            raise FormError(f"term {entry!r} is not an integer quadruple [i, j, k, a]")
        i, j, k, a = entry
        if (i, j, k) in seen:
            raise FormError(f"duplicate triple ({i}, {j}, {k})")
        seen.add((i, j, k))
        if a != 0:
            terms.append((i, j, k, a))
    return ThreeForm(rank, tuple(sorted(terms)))


def serialize_form(f):
    """Canonical UTF-8 document: lex-sorted terms, 2-space indent, final newline.

    ``parse_form(serialize_form(f))`` reproduces ``f`` bit-exactly.
    """
    doc = {"rank": f.rank, "terms": [list(t) for t in f.terms]}
    return json.dumps(doc, indent=2) + "\n"


def trivial(b):
    """The zero form on rank b (connected sums of S^1 x S^2)."""
    if b < 0:
        raise FormError("rank must be nonnegative")
    return ThreeForm(b, ())


def torus3(n):
    """Rank 3 with a single triple product of value n; n = 0 gives the zero form."""
    return ThreeForm(3, ((1, 2, 3, n),) if n else ())


def surface_circle(g):
    """Product of a genus-g surface with a circle: mu = s ^ omega.

    Index 1 is the circle class; indices (2i, 2i+1) are the i-th symplectic
    pair of the surface.
    """
    if g < 1:
        raise FormError("genus must be at least 1")
    return ThreeForm(2 * g + 1, tuple((1, 2 * i, 2 * i + 1, 1) for i in range(1, g + 1)))


def mapping_torus(w, v0):
    """Surface mapping torus with invariant symplectic rank 2w and null rank v0."""
    if w < 0 or v0 < 0:
        raise FormError("mapping torus parameters must be nonnegative")
    return ThreeForm(1 + 2 * w + v0, tuple((1, 2 * i, 2 * i + 1, 1) for i in range(1, w + 1)))


FAMILIES = {
    "trivial": (trivial, ("b",)),
    "torus3": (torus3, ("n",)),
    "surface_circle": (surface_circle, ("g",)),
    "mapping_torus": (mapping_torus, ("w", "v0")),
}


def builtin_family(name, **params):
    """Instantiate one of the built-in example families by name."""
    if name not in FAMILIES:
        raise FormError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}")
    fn, wanted = FAMILIES[name]
    missing = [p for p in wanted if p not in params]
    extra = [p for p in params if p not in wanted]
    if missing or extra:
        raise FormError(f"family {name!r} takes parameters {list(wanted)}")
    return fn(*(params[p] for p in wanted))


def connected_sum(f1, f2):
    """Block sum: triples of f1 verbatim, triples of f2 shifted past rank(f1)."""
    b1 = f1.rank
    if b1 + f2.rank > MAX_RANK:
        raise FormError(f"combined rank {b1 + f2.rank} exceeds {MAX_RANK}")
    shifted = tuple((i + b1, j + b1, k + b1, a) for i, j, k, a in f2.terms)
    return ThreeForm(b1 + f2.rank, f1.terms + shifted)


def reduce_mod_p(f, p):
    """Coefficients reduced into [0, p); triples that vanish mod p are dropped."""
    if not is_prime(p):
        raise FormError(f"{p} is not prime")
    return ThreeForm.from_coeffs(f.rank, {t: a % p for (t, a) in f.coeffs.items()})


def negate(f):
    return ThreeForm(f.rank, tuple((i, j, k, -a) for i, j, k, a in f.terms))


def permute_indices(f, perm):
    """Relabel basis indices by a permutation of 1..rank.

    Each triple is re-sorted and picks up the sign of that reordering, i.e.
    the form transforms as an alternating tensor.
    """
    if sorted(perm) != list(range(1, f.rank + 1)):
        raise FormError("perm must be a permutation of 1..rank")
    coeffs = {}
    for (i, j, k), a in f.coeffs.items():
        img = [perm[i - 1], perm[j - 1], perm[k - 1]]
        sign = 1
        # Three elements: bubble-sort parity.
        for x in range(2):
            for y in range(2 - x):
                if img[y] > img[y + 1]:
                    img[y], img[y + 1] = img[y + 1], img[y]
                    sign = -sign
        coeffs[tuple(img)] = sign * a
    return ThreeForm.from_coeffs(f.rank, coeffs)
