"""Post-order numbered, as-balanced-as-possible binary trees over ranks."""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from src.exceptions.topology import TopologyExceptions


logger = logging.getLogger(__name__)


class TreeId(str, Enum):
    A = "A"
    B = "B"


@dataclass(frozen=True)
class TreeNode:
    rank: int
    tree_id: TreeId
    parent: Optional[int]
    child_first: Optional[int]
    child_second: Optional[int]
    depth: int
    """smallest rank of the subtree rooted here"""
    lo: int

    @property
    def is_root(self) -> bool:
        return self.parent is None

    @property
    def is_leaf(self) -> bool:
        return self.child_first is None and self.child_second is None

    @property
    def children(self) -> tuple[int, ...]:
        return tuple(c for c in (self.child_first, self.child_second) if c is not None)


@dataclass(frozen=True)
class DualTreeTopology:
    """
    Two post-order trees, A over the lower ceil(p/2) ranks and B over the rest,
    whose roots are each other's dual.

    A single tree over all ranks (used by the reduce-then-broadcast baselines)
    is the same structure flagged `single`; a dual layout over p=1 also has
    no `root_b`.
    """
    p: int
    nodes: tuple[TreeNode, ...]
    root_a: int
    root_b: Optional[int] = None
    single: bool = False

    def node(self, i: int) -> TreeNode:
        TopologyExceptions.raise_exception_rank_out_of_range(self.p, i)
        return self.nodes[i]

    def dual_of(self, i: int) -> Optional[int]:
        if self.root_b is None:
            return None
        if i == self.root_a:
            return self.root_b
        if i == self.root_b:
            return self.root_a
        return None

    def neighbours(self, i: int) -> frozenset[int]:
        node = self.node(i)
        linked = set(node.children)
        if node.parent is not None:
            linked.add(node.parent)
        dual = self.dual_of(i)
        if dual is not None:
            linked.add(dual)
        return frozenset(linked)

    def tree_ranks(self, tree_id: TreeId) -> range:
        if tree_id == TreeId.A:
            return range(0, self.root_a + 1)
        if self.root_b is None:
            return range(0)
        return range(self.root_a + 1, self.root_b + 1)

    @property
    def is_dual(self) -> bool:
        return not self.single

    @property
    def height(self) -> int:
        return max(n.depth for n in self.nodes)

    def dump(self) -> str:
        """One line per rank: rank tree parent child_first child_second depth."""
        def cell(v: Optional[int]) -> str:
            return "-" if v is None else str(v)

        lines = ["# rank tree parent child_first child_second depth"]
        for n in self.nodes:
            lines.append(
                f"{n.rank} {n.tree_id.value} {cell(n.parent)} "
                f"{cell(n.child_first)} {cell(n.child_second)} {n.depth}"
            )
        return "\n".join(lines) + "\n"


def _build_tree(
    lo: int,
    hi: int,
    tree_id: TreeId,
    nodes: dict[int, TreeNode],
    parent: Optional[int] = None,
    depth: int = 0,
) -> Optional[int]:
    """
    Root the contiguous range [lo, hi] at hi. The first child hi-1 roots the
    upper ceil((n-1)/2) ranks, the second child the lower floor((n-1)/2).
    """
    if lo > hi:
        return None

    rest = hi - lo
    upper = (rest + 1) // 2
    lower = rest - upper

    child_first = _build_tree(hi - upper, hi - 1, tree_id, nodes, hi, depth + 1) if upper else None
    child_second = _build_tree(lo, lo + lower - 1, tree_id, nodes, hi, depth + 1) if lower else None

    nodes[hi] = TreeNode(
        rank=hi,
        tree_id=tree_id,
        parent=parent,
        child_first=child_first,
        child_second=child_second,
        depth=depth,
        lo=lo,
    )
    return hi


def build_dual_trees(p: int) -> DualTreeTopology:
    TopologyExceptions.raise_exception_procs_not_positive(p)

    nodes: dict[int, TreeNode] = {}
    split = (p + 1) // 2
    root_a = _build_tree(0, split - 1, TreeId.A, nodes)
    root_b = _build_tree(split, p - 1, TreeId.B, nodes)

    logger.debug(f"dual trees p={p}: roots {root_a} and {root_b}")
    return DualTreeTopology(
        p=p,
        nodes=tuple(nodes[i] for i in range(p)),
        root_a=root_a,
        root_b=root_b,
    )


def build_single_tree(p: int) -> DualTreeTopology:
    TopologyExceptions.raise_exception_procs_not_positive(p)

    nodes: dict[int, TreeNode] = {}
    root = _build_tree(0, p - 1, TreeId.A, nodes)
    return DualTreeTopology(p=p, nodes=tuple(nodes[i] for i in range(p)), root_a=root, single=True)


def subtree_range(t: DualTreeTopology, i: int) -> tuple[int, int]:
    node = t.node(i)
    return node.lo, node.rank


def depth_of(t: DualTreeTopology, i: int) -> int:
    return t.node(i).depth
