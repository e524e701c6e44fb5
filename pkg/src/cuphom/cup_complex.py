"""Boundary matrices of the contraction differential and mod-3 subcomplexes.

The differential drops exterior degree by 3, so the degree-graded complex
splits into three subcomplexes indexed by degree mod 3; homology in a fixed
grading of the two-periodic complex is the direct sum of their homologies.
"""

from dataclasses import dataclass
from math import comb

from .exact_linalg import IntegerMatrix
from .exterior import blade_basis, contract
from .report import CheckReport


@dataclass(frozen=True)
class BoundaryMatrix:
    """Matrix of the differential from exterior degree k to k - 3.

    Rows and columns follow :func:`blade_basis` order; for k < 3 the matrix
    has zero rows.
    """

    source_degree: int
    target_degree: int
    matrix: IntegerMatrix


@dataclass(frozen=True)
class Mod3Complex:
    residue: int
    degrees: tuple
    boundaries: tuple  # boundaries[i] maps degrees[i + 1] -> degrees[i]


def boundary_matrix(f, k):
    """Differential out of exterior degree k, as a dense integer matrix."""
    b = f.rank
    if k < 0 or k > b:
        raise ValueError(f"degree {k} out of range 0..{b}")
    rows = blade_basis(b, k - 3)
    cols = blade_basis(b, k)
    row_index = {blade: i for i, blade in enumerate(rows)}
    data = [[0] * len(cols) for _ in rows]
    coeffs = f.coeffs
    for c, blade in enumerate(cols):
        for rest, val in contract(coeffs, blade).items():
            data[row_index[rest]][c] = val
    return BoundaryMatrix(k, k - 3, IntegerMatrix(len(rows), len(cols), data))


def empty_boundary_into(f, k):
    """Zero-column placeholder for the (nonexistent) map from degree k + 3."""
    return BoundaryMatrix(k + 3, k, IntegerMatrix(comb(f.rank, k), 0,
                                                  [[] for _ in range(comb(f.rank, k))]))


def build_mod3_complexes(f):
    """The three subcomplexes covering degrees 0..rank exactly once."""
    out = []
    for residue in range(3):
        degrees = tuple(range(residue, f.rank + 1, 3))
        boundaries = tuple(boundary_matrix(f, k) for k in degrees[1:])
        out.append(Mod3Complex(residue, degrees, boundaries))
    return tuple(out)


def verify_d_squared(f):
    """Check that consecutive boundary maps compose to zero.

    A failure signals an implementation bug, never bad input: the composite
    is contraction by mu ^ mu, which vanishes identically.
    """
    rep = CheckReport(f"d-squared on rank {f.rank}")
    for cx in build_mod3_complexes(f):
        for i in range(len(cx.boundaries) - 1):
            prod = cx.boundaries[i].matrix.mul(cx.boundaries[i + 1].matrix)
            k = cx.degrees[i + 2]
            bad = [(k, r, c) for r, row in enumerate(prod.data)
                   for c, v in enumerate(row) if v]
            rep.add(f"d_{k - 3} o d_{k} = 0", not bad,
                    "" if not bad else f"nonzero at {bad[:5]}")
    if not rep.items:
        rep.add("no composable pairs", True, "vacuous")
    return rep


def render_matrix_grid(M):
    """Plain-text dump: one row per line, space-separated integers."""
    return "\n".join(" ".join(str(v) for v in row) for row in M.data) + "\n"


def dump_boundary_matrices(f, directory):
    """Write every boundary matrix as a text grid for external cross-checks."""
    import os

    os.makedirs(directory, exist_ok=True)
    paths = []
    for k in range(3, f.rank + 1):
        path = os.path.join(directory, f"boundary_{k}.txt")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(render_matrix_grid(boundary_matrix(f, k).matrix))
        paths.append(path)
    return paths
