"""Pipeline blocks of an m-element vector."""

from dataclasses import dataclass

from src.exceptions.blocks import BlockExceptions


@dataclass(frozen=True)
class BlockPartition:
    """
    m elements in b = ceil(m/B) blocks of B elements, the last one possibly
    short. Blocks with index j < 0 or j >= b exist virtually and hold no
    elements; the protocol uses them to fill and drain the pipeline.
    """
    m: int
    block_size: int

    @property
    def b(self) -> int:
        return -(-self.m // self.block_size)

    def extent(self, j: int) -> tuple[int, int]:
        if j < 0 or j >= self.b:
            return min(max(j, 0) * self.block_size, self.m), 0
        offset = j * self.block_size
        return offset, min(self.block_size, self.m - offset)

    def length(self, j: int) -> int:
        return self.extent(j)[1]

    def slice(self, j: int) -> slice:
        offset, length = self.extent(j)
        return slice(offset, offset + length)

    def extents(self) -> list[tuple[int, int]]:
        return [self.extent(j) for j in range(self.b)]


def make_partition(m: int, block_size: int) -> BlockPartition:
    BlockExceptions.raise_exception_bad_partition(m, block_size)
    return BlockPartition(m=m, block_size=block_size)


def partition_by_count(m: int, b: int) -> BlockPartition:
    """
    Partition into at most b blocks of ceil(m/b) elements. The resulting count
    can come out lower than b (m=10, b=6 gives 5 blocks of 2).
    """
    BlockExceptions.raise_exception_block_count_not_positive(b)
    return make_partition(m, max(1, -(-m // b)))


def block_extent(part: BlockPartition, j: int) -> tuple[int, int]:
    return part.extent(j)
