import numpy as np
import pytest

from src.exceptions.base import DeadlockError
from src.models.reducer import get_operator, sequential_fold_oracle
from src.models.state import DualOrientation
from src.protocol import allreduce, make_world
from src.tests.conftest import assert_all_equal
from src.utils.workers import allreduce_concurrent, run_concurrent


class TestRuntime:
    @pytest.mark.parametrize("algorithm", ["doubly", "single", "pipelined", "naive"])
    @pytest.mark.parametrize("p", [1, 2, 6, 13, 30])
    async def test_matches_oracle(self, p: int, algorithm: str):
        op = get_operator("mat2")
        inputs = op.random_inputs(p, 24, seed=p)
        results = await allreduce_concurrent(inputs, op, 5, algorithm=algorithm)
        assert_all_equal(results, sequential_fold_oracle(op, inputs))

    async def test_matches_simulator(self, affine_op):
        inputs = affine_op.random_inputs(14, 40, seed=7)
        simulated, _, _ = allreduce(inputs, affine_op, 3)
        concurrent = await allreduce_concurrent(inputs, affine_op, 3)
        for a, b in zip(simulated, concurrent):
            assert np.array_equal(a, b)

    async def test_swapped_orientation_detected(self, mat2_op):
        inputs = mat2_op.random_inputs(6, 5)
        results = await allreduce_concurrent(inputs, mat2_op, 2, orientation=DualOrientation.SWAPPED)
        expected = sequential_fold_oracle(mat2_op, inputs)
        assert any(not np.array_equal(y, expected) for y in results)

    async def test_empty_vector(self, sum_op):
        results = await allreduce_concurrent(sum_op.random_inputs(6, 0), sum_op, 4)
        assert all(y.shape == (0, 1) for y in results)

    async def test_counters(self, sum_op):
        world = make_world("doubly", sum_op.random_inputs(6, 12), 4, sum_op)
        await run_concurrent(world, "doubly")
        assert all(s.done for s in world)
        assert sum(s.elements_sent for s in world) == sum(s.elements_received for s in world)

    async def test_stall_raises(self, sum_op, stalled: str):
        world = make_world("doubly", sum_op.random_inputs(2, 4), 2, sum_op)
        with pytest.raises(DeadlockError):
            await run_concurrent(world, stalled, timeout=0.2)
