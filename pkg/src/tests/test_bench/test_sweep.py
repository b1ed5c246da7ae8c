import csv
import io

import pytest
from pydantic import ValidationError

from settings import settings
from src.bench.sweep import exponential_counts, ordered_algorithms, run_sweep, sweep_header
from src.costmodel import optimal_blocks
from src.exceptions.base import ConfigurationError, InvalidArgumentError


def rows(text: str) -> list[dict[str, str]]:
    return list(csv.DictReader(io.StringIO(text)))


class TestCounts:
    def test_decades(self):
        assert exponential_counts(0, 250) == [0, 1, 2, 8, 15, 21, 25, 87, 150, 212, 250]

    def test_bounds(self):
        assert exponential_counts(5, 100) == [8, 15, 21, 25, 87, 100]
        assert exponential_counts(0, 0) == [0]
        assert exponential_counts(7, 7) == [7]

    def test_ascending(self):
        counts = exponential_counts(0, 8388608)
        assert counts == sorted(set(counts))
        assert counts[-1] == 8388608


class TestSweep:
    def test_header(self, config_factory):
        cfg = config_factory(counts=[0], algorithms="doubly,naive,pipelined")
        text = run_sweep(cfg)
        assert text.splitlines()[0].split(",") == sweep_header(["naive", "pipelined", "doubly"])

    def test_ordered_algorithms(self):
        assert ordered_algorithms(["single", "doubly", "naive"]) == ["naive", "doubly", "single"]

    def test_empty_vector_row(self, config_factory):
        (row,) = rows(run_sweep(config_factory(counts=[0], block_size=4)))
        assert row["count"] == "0"
        assert row["blocks"] == "0"
        assert row["h"] == "3:exact"
        assert (row["doubly"], row["pipelined"], row["naive"]) == ("0.000000",) * 3
        assert row["ratio"] == "-"
        assert row["status"] == "OK"

    def test_ratio_tracks_model(self, config_factory):
        cfg = config_factory(procs=30, counts=[126], block_size=2, algorithms="doubly,pipelined")
        (row,) = rows(run_sweep(cfg))
        assert row["blocks"] == "63"
        assert row["doubly"] == "597.000000"
        assert row["pipelined"] == "789.000000"
        assert row["predicted_doubly"] == "609.000000"
        assert row["predicted_reduce_bcast"] == "804.000000"
        simulated = float(row["ratio"])
        predicted = float(row["predicted_reduce_bcast"]) / float(row["predicted_doubly"])
        assert simulated == pytest.approx(predicted, rel=0.05)
        assert 1.0 <= simulated <= 4 / 3 * 1.05

    def test_native_column_is_model_estimate(self, config_factory):
        cfg = config_factory(procs=30, counts=[126], block_size=2, algorithms="doubly")
        (row,) = rows(run_sweep(cfg))
        estimate = optimal_blocks(5, 126, cfg.cost).closed_form
        assert float(row["native_model_estimate"]) == pytest.approx(estimate, abs=1e-5)

    def test_blocks_derive_size(self, config_factory):
        cfg = config_factory(counts=[10, 100], blocks=4, algorithms="doubly")
        first, second = rows(run_sweep(cfg))
        assert (first["block_size"], first["blocks"]) == ("3", "4")
        assert (second["block_size"], second["blocks"]) == ("25", "4")

    def test_upper_bound_label(self, config_factory):
        (row,) = rows(run_sweep(config_factory(procs=13, counts=[5], block_size=2)))
        assert row["h"] == "4:upper-bound"
        assert row["status"] == "OK"

    def test_inexact_operator(self, config_factory):
        (row,) = rows(run_sweep(config_factory(counts=[9], block_size=2, operator="fsum")))
        assert row["status"] == "UNVERIFIED"

    def test_fault_fails_row(self, config_factory):
        cfg = config_factory(counts=[12], block_size=4, algorithms="doubly", fault=(0, 0))
        (row,) = rows(run_sweep(cfg))
        assert row["status"] == "FAIL"

    def test_deterministic_file(self, config_factory, tmp_path):
        first, second = tmp_path / "first.csv", tmp_path / "second.csv"
        for path in (first, second):
            text = run_sweep(config_factory(counts=[0, 1, 24, 100], block_size=3, operator="affine", reps=2, csv=path))
            assert path.read_text() == text
        assert first.read_bytes() == second.read_bytes()

    def test_unknown_operator(self, config_factory):
        with pytest.raises(InvalidArgumentError):
            run_sweep(config_factory(counts=[1], operator="xor"))


class TestConfig:
    def test_counts_must_ascend(self, config_factory):
        with pytest.raises(ValidationError):
            config_factory(counts=[5, 1])

    @pytest.mark.parametrize("field", ["block_size", "blocks", "reps", "procs"])
    def test_positive(self, config_factory, field: str):
        with pytest.raises(ValidationError):
            config_factory(**{field: 0})

    def test_empty_algorithms(self, config_factory):
        with pytest.raises(ConfigurationError):
            config_factory(algorithms=",")

    def test_fallback_block_size(self, config_factory):
        assert config_factory().block_size_for(10) == settings.block_size
        assert config_factory(block_size=4, blocks=2).block_size_for(10) == 5

    @pytest.mark.parametrize("m, blocks, expected", [(10, 6, 2), (10, 3, 4), (0, 3, 1), (7, 20, 1)])
    def test_blocks_follow_partition(self, config_factory, m: int, blocks: int, expected: int):
        assert config_factory(blocks=blocks).block_size_for(m) == expected
