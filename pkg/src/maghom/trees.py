"""Tree-specific structure of magnitude chain complexes.

On a tree, every basis sequence determines a unique walk through its
vertices in order, so each component MC_{*,l}(a, b) splits further into one
summand per walk of length exactly l.  A walk's summand is governed by its
turning points: positions i with x_{i-1} = x_{i+1} (equivalently, where the
triangle inequality through x_i is strict).  The summand is the relative
chain complex of the full simplex on positions 1..l-1 modulo the simplices
missing at least one turning point, shifted up by two degrees.

With m turning points that pair is: everything (m = 0, the subcomplex is
empty), contractible (0 < m < l-1), or the simplex modulo its boundary
sphere (m = l-1).  Only the sphere case contributes homology in degrees
k >= 3, one Z in degree k = l.  Summing over all walks: MH_{k,l} of a tree
is Z^(2 * number of edges) when k = l and zero otherwise (k, l >= 3), since
the walks with m = l-1 are exactly the alternating walks along one edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import enumerate_walks
from .homology import ZERO_GROUP, HomologyGroup
from .magnitude import magnitude_homology_direct
from .simplicial import SimplicialComplex, SimplicialPair


def _require_tree(g):
    if not g.is_tree():
        raise ValueError(
            f"expected a tree, got a connected graph with {g.num_edges} edges "
            f"on {g.num_vertices} vertices"
        )


@dataclass(frozen=True)
class TreePathComponent:
    """One per-walk summand: the walk and its turning-point positions."""

    walk: tuple
    phi: tuple

    @property
    def steps(self):
        return len(self.walk) - 1


def turning_points(g, walk):
    """Positions where the walk strictly loses length when skipped.

    Position i (interior) is a turning point when d(x_{i-1}, x_{i+1}) is
    strictly below d(x_{i-1}, x_i) + d(x_i, x_{i+1}); on a tree this happens
    exactly when x_{i-1} = x_{i+1}.
    """
    return tuple(
        i
        for i in range(1, len(walk) - 1)
        if g.distance(walk[i - 1], walk[i + 1])
        < g.distance(walk[i - 1], walk[i]) + g.distance(walk[i], walk[i + 1])
    )


def decompose_tree_component(g, key):
    """The per-walk summands of MC_{*,l}(a, b) on a tree.

    One component per walk from a to b of length exactly l, in lexicographic
    order; shorter walks carry no sequences of length l and are dropped.
    """
    _require_tree(g)
    a, b, l = key
    out = []
    for walk in enumerate_walks(g, a, b, l):
        if len(walk) - 1 == l:
            out.append(TreePathComponent(walk=walk, phi=turning_points(g, walk)))
    return out


def build_delta_pair(component, l):
    """The pair (full simplex on positions 1..l-1, faces missing a turning point).

    The relative basis in degree n is the set of (n+1)-subsets of positions
    containing every turning point; reading those positions from the walk
    and closing with the endpoints is exactly the per-walk magnitude basis
    two degrees up.
    """
    positions = list(range(1, l))
    required = set(component.phi)
    everything = [
        s for size in range(1, l) for s in combinations(positions, size)
    ]
    total = SimplicialComplex(positions, everything)
    sub = SimplicialComplex(
        positions, [s for s in everything if not required <= set(s)]
    )
    return SimplicialPair(total, sub)


def classify_delta(component, l):
    """Homotopy type of the subcomplex: 'empty', 'contractible', or 'sphere'.

    With m turning points out of l-1 positions: m = 0 leaves the subcomplex
    empty, m = l-1 makes it the boundary sphere of the full simplex (of
    dimension l-3), and anything in between deformation-retracts to a point.
    Only the sphere case has relative homology in positive degrees: one Z in
    relative degree l-2, hence magnitude degree l.
    """
    m = len(component.phi)
    if m == 0:
        return "empty"
    if m == l - 1:
        return "sphere"
    return "contractible"


def tree_magnitude_closed_form(g, l, k):
    """Whole-tree magnitude homology in closed form, valid for k, l >= 3.

    Z^(2 * number of edges) when k = l, zero otherwise.
    """
    _require_tree(g)
    if l < 3 or k < 3:
        raise ValueError(f"the closed form covers k, l >= 3, got k={k}, l={l}")
    if k == l:
        return HomologyGroup(2 * g.num_edges, ())
    return ZERO_GROUP


def tree_homology_by_pair(g, key, kmax=None):
    """MH_{k,l}(a, b) on a tree for 0 <= k <= kmax via the decomposition.

    Degrees k >= 3 count the sphere-type walk summands (each contributes one
    Z at k = l); degrees 0..2 sit outside the decomposition's range and are
    delegated to the direct route.  Requires l >= 3.
    """
    _require_tree(g)
    if key.l < 3:
        raise ValueError(f"the tree decomposition needs l >= 3, got {key.l}")
    if kmax is None:
        kmax = key.l
    out = list(magnitude_homology_direct(g, key, kmax=min(kmax, 2)))
    if kmax <= 2:
        return out
    spheres = sum(
        1
        for component in decompose_tree_component(g, key)
        if classify_delta(component, key.l) == "sphere"
    )
    for k in range(3, kmax + 1):
        if k == key.l and spheres:
            out.append(HomologyGroup(spheres, ()))
        else:
            out.append(ZERO_GROUP)
    return out


# -- helpers used by the validation suite -------------------------------------


def tree_geodesic(g, u, v):
    """The unique shortest walk between two vertices of a tree."""
    _require_tree(g)
    walk = [u]
    while walk[-1] != v:
        current = walk[-1]
        target = g.distance(current, v)
        step = next(y for y in g.neighbors(current) if g.distance(y, v) == target - 1)
        walk.append(step)
    return tuple(walk)


def path_of_sequence(g, seq):
    """The unique shortest walk through the sequence's vertices in order."""
    walk = [seq[0]]
    for i in range(len(seq) - 1):
        walk.extend(tree_geodesic(g, seq[i], seq[i + 1])[1:])
    return tuple(walk)
