"""Block decomposition of multifusion rings.

A ring whose unit decomposes as a sum of projectors p_0, ..., p_{s-1}
splits into blocks B(i, j) = { x : p_i x p_j = x }, exactly like a ring
of matrices.  Labels are assigned blocks, blocks assemble into
indecomposable components (union-find over "B(i, j) is nonempty"), and
each diagonal block B(i, i) is itself a fusion ring with simple unit
(the corner ring).  Corners inside one component are Morita-related;
the witness we can see at ring level is the row/column label sets and
the matching global dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AmbiguousBlock, InputError
from .fusion import FusionRing, fp_dimensions


def unit_summands_check(ring: FusionRing) -> list[tuple]:
    """Violations of the projector axioms for the unit summands.

    Checks p_u p_u = p_u, p_u p_v = 0 for u != v, and p_u* = p_u, all at
    the fusion-coefficient level.  Empty list means pass.
    """
    bad: list[tuple] = []
    unit = ring.unit
    for u in unit:
        if ring.dual[u] != u:
            bad.append((u, "not self-dual"))
        for v in unit:
            expected_diag = 1 if u == v else 0
            for k in range(ring.rank):
                want = expected_diag if k == u else 0
                if ring.n(u, v, k) != want:
                    bad.append((u, v, k))
    return bad


@dataclass(frozen=True)
class BlockDecomposition:
    ring: FusionRing
    block_of: dict  # label index -> (row unit position, column unit position)
    components: tuple  # tuple of sorted tuples of unit positions

    @property
    def unit_count(self) -> int:
        return len(self.ring.unit)

    def component_of_unit(self, pos: int) -> int:
        for ci, comp in enumerate(self.components):
            if pos in comp:
                return ci
        raise InputError(f"unit position {pos} out of range")

    def component_of_label(self, x: int) -> int:
        return self.component_of_unit(self.block_of[x][0])

    def block_labels(self, i: int, j: int) -> list[int]:
        return [x for x in range(self.ring.rank) if self.block_of[x] == (i, j)]

    def to_json_dict(self) -> dict:
        return {
            "components": [list(c) for c in self.components],
            "blocks": {
                self.ring.labels[x]: list(self.block_of[x])
                for x in range(self.ring.rank)
            },
            "corners": [
                corner_ring(self, i).to_json_dict() for i in range(self.unit_count)
            ],
        }


def block_partition(ring: FusionRing) -> BlockDecomposition:
    """Assign each label its (row, column) unit projectors.

    Raises AmbiguousBlock when a label is not picked out by exactly one
    left and one right projector, or when the matrix-style block rule
    B(i, j) * B(k, l) = 0 for j != k fails against the fusion tensor.
    """
    violations = unit_summands_check(ring)
    if violations:
        raise AmbiguousBlock(f"unit summands are not orthogonal projectors: {violations[0]}")
    unit = ring.unit
    position = {u: p for p, u in enumerate(unit)}
    block_of: dict[int, tuple[int, int]] = {}
    for x in range(ring.rank):
        lefts = [u for u in unit if ring.n(u, x, x) == 1]
        rights = [u for u in unit if ring.n(x, u, x) == 1]
        if len(lefts) != 1 or len(rights) != 1:
            raise AmbiguousBlock(
                f"label {ring.labels[x]} is supported by {len(lefts)} left and "
                f"{len(rights)} right unit projectors"
            )
        block_of[x] = (position[lefts[0]], position[rights[0]])

    # matrix calculus: x in B(i, j), y in B(k, l) can only multiply when
    # j = k, and then the product lies in B(i, l)
    for (x, y, z), v in ring.fusion.items():
        (i, j), (k, l) = block_of[x], block_of[y]
        if j != k:
            raise AmbiguousBlock(
                f"nonzero product across mismatched blocks: "
                f"{ring.labels[x]} in block ({i},{j}) times {ring.labels[y]} in block ({k},{l})"
            )
        if block_of[z] != (i, l):
            raise AmbiguousBlock(
                f"product {ring.labels[x]} * {ring.labels[y]} leaves its block: "
                f"{ring.labels[z]} sits in block {block_of[z]}, expected ({i}, {l})"
            )

    parent = list(range(len(unit)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for i, j in block_of.values():
        union(i, j)
    groups: dict[int, list[int]] = {}
    for p in range(len(unit)):
        groups.setdefault(find(p), []).append(p)
    components = tuple(tuple(sorted(g)) for _, g in sorted(groups.items()))
    return BlockDecomposition(ring=ring, block_of=block_of, components=components)


def corner_ring(dec: BlockDecomposition, i: int) -> FusionRing:
    """The simple-unit fusion ring carried by the diagonal block B(i, i)."""
    ring = dec.ring
    keep = dec.block_labels(i, i)
    index = {x: t for t, x in enumerate(keep)}
    labels = tuple(ring.labels[x] for x in keep)
    unit_label = ring.unit[i]
    fusion = {
        (index[x], index[y], index[z]): v
        for (x, y, z), v in ring.fusion.items()
        if x in index and y in index and z in index
    }
    dual = tuple(index[ring.dual[x]] for x in keep)
    return FusionRing(labels=labels, unit=(index[unit_label],), dual=dual, fusion=fusion)


@dataclass(frozen=True)
class MoritaWitness:
    corner: int
    row_labels: tuple  # labels in the chosen corner's row of blocks
    col_labels: tuple  # labels in the chosen corner's column of blocks
    corner_dims: tuple  # global FP dimension of every corner in the component

    @property
    def dims_agree(self) -> bool:
        return max(self.corner_dims) - min(self.corner_dims) <= 1e-6

    def to_json_dict(self) -> dict:
        return {
            "corner": self.corner,
            "row_labels": list(self.row_labels),
            "col_labels": list(self.col_labels),
            "corner_dims": list(self.corner_dims),
            "dims_agree": self.dims_agree,
        }


def morita_witness(dec: BlockDecomposition, i: int) -> MoritaWitness:
    """Row/column bimodule label sets witnessing corner equivalence.

    Within the component of corner i, every corner has the same global
    FP dimension; the union of row blocks B(i, j) and the union of
    column blocks B(j, i), j running over the component, realize the
    equivalence at ring level.
    """
    comp = dec.components[dec.component_of_unit(i)]
    ring = dec.ring
    rows = [x for x in range(ring.rank) if dec.block_of[x][0] == i and dec.block_of[x][1] in comp]
    cols = [x for x in range(ring.rank) if dec.block_of[x][1] == i and dec.block_of[x][0] in comp]
    dims = []
    for j in comp:
        corner = corner_ring(dec, j)
        dims.append(float(sum(d * d for d in fp_dimensions(corner))))
    return MoritaWitness(
        corner=i,
        row_labels=tuple(ring.labels[x] for x in rows),
        col_labels=tuple(ring.labels[x] for x in cols),
        corner_dims=tuple(dims),
    )
