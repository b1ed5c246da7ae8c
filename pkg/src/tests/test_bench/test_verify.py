import pytest

from src.bench.verify import Mismatch, block_sizes, first_failure, verify
from src.models.state import DualOrientation


class TestVerify:
    def test_mat2_passes(self, config_factory):
        outcome = verify(config_factory(counts=[12], operator="mat2"))
        assert len(outcome) == 3 * 3
        assert all(r.passed for r in outcome)
        assert all(r.describe().startswith("PASS") for r in outcome)

    @pytest.mark.parametrize("procs", [1, 2])
    def test_small_worlds(self, config_factory, procs: int):
        outcome = verify(config_factory(procs=procs, counts=[0, 1, 7], operator="affine"))
        assert all(r.passed for r in outcome)

    def test_default_block_sizes(self, config_factory):
        cfg = config_factory(counts=[12])
        assert block_sizes(cfg, 12) == [1, 3, 12]
        assert block_sizes(cfg, 0) == [1, 3]
        assert block_sizes(config_factory(block_size=4), 12) == [4]

    def test_fault_identifies_rank_and_block(self, config_factory):
        cfg = config_factory(counts=[12], block_size=4, algorithms="doubly", fault=(0, 0))
        outcome = verify(cfg)
        assert first_failure(outcome) == Mismatch(algorithm="doubly", rank=0, block=0)
        assert len(outcome[0].mismatches) == 6
        assert outcome[0].describe().startswith("FAIL")
        assert "rank 0: block 0 differs" in outcome[0].describe()

    def test_swapped_roots_fail(self, config_factory):
        cfg = config_factory(counts=[5], block_size=2, algorithms="doubly", operator="mat2")
        assert first_failure(verify(cfg, orientation=DualOrientation.SWAPPED)) is not None

    def test_inexact_skipped(self, config_factory):
        (result,) = verify(config_factory(counts=[5], block_size=2, algorithms="doubly", operator="fsum"))
        assert result.passed
        assert result.describe().startswith("SKIP")
