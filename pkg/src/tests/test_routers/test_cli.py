import csv
import io
import json

import pytest

from src.handler import ExitCode, handle_exception
from src.exceptions.base import DeadlockError, ProtocolError


class TestVerifyCommand:
    def test_pass(self, cli):
        code, out, _ = cli("verify", "--procs", "6", "--elements", "12", "--op", "mat2")
        assert code == ExitCode.OK
        assert out.splitlines()[-1] == "9/9 passed"

    def test_single_process(self, cli):
        code, out, _ = cli("verify", "--procs", "1", "--elements", "0,5", "--block-size", "2")
        assert code == ExitCode.OK
        assert "FAIL" not in out

    def test_fault(self, cli):
        code, out, _ = cli(
            "verify", "--procs", "6", "--elements", "12", "--block-size", "4",
            "--alg", "doubly", "--inject-fault", "0:0",
        )
        assert code == ExitCode.VERIFICATION_FAILED
        assert "rank 0: block 0 differs" in out
        assert out.splitlines()[-1] == "0/1 passed"

    def test_report(self, cli):
        code, out, _ = cli("verify", "--procs", "6", "--elements", "12", "--block-size", "4", "--alg", "doubly", "--report")
        assert code == ExitCode.OK
        assert "steps: 15" in out
        assert "formula_offset: 0" in out


class TestRunCommand:
    def test_stdout(self, cli):
        code, out, _ = cli("run", "--procs", "6", "--elements", "0,12", "--block-size", "4", "--alpha", "1", "--beta", "1")
        assert code == ExitCode.OK
        table = list(csv.DictReader(io.StringIO(out)))
        assert [row["count"] for row in table] == ["0", "12"]
        assert all(row["status"] == "OK" for row in table)

    def test_csv_is_reproducible(self, cli, tmp_path):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for path in paths:
            code, out, _ = cli("run", "--procs", "7", "--sweep", "0:30", "--blocks", "3", "--op", "affine", "--csv", str(path))
            assert code == ExitCode.OK
            assert out == ""
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_fault(self, cli):
        code, _, _ = cli("run", "--procs", "6", "--elements", "12", "--block-size", "4", "--inject-fault", "0:0")
        assert code == ExitCode.VERIFICATION_FAILED


class TestModelCommand:
    def test_table(self, cli):
        code, out, _ = cli("model", "--procs", "6", "--elements", "300", "--alpha", "1", "--beta", "1")
        assert code == ExitCode.OK
        (row,) = csv.DictReader(io.StringIO(out))
        assert (row["h"], row["h_label"], row["b_doubly"]) == ("3", "exact", "24")
        assert row["time_doubly"] == "1053.000000"

    def test_height_override(self, cli):
        code, out, _ = cli("model", "--height", "5", "--elements", "1000000000", "--alpha", "1", "--beta", "1")
        assert code == ExitCode.OK
        (row,) = csv.DictReader(io.StringIO(out))
        assert row["h_label"] == "given"
        assert float(row["ratio"]) == pytest.approx(4 / 3, rel=0.01)


class TestTopologyCommand:
    def test_dual(self, cli):
        code, out, _ = cli("dump-topology", "--procs", "6")
        assert code == ExitCode.OK
        assert out.splitlines()[1:] == [
            "0 A 2 - - 1",
            "1 A 2 - - 1",
            "2 A - 1 0 0",
            "3 B 5 - - 1",
            "4 B 5 - - 1",
            "5 B - 4 3 0",
        ]

    def test_single(self, cli):
        code, out, _ = cli("dump-topology", "--procs", "3", "--alg", "pipelined")
        assert code == ExitCode.OK
        assert out.splitlines()[-1] == "2 A - 1 0 0"


class TestErrors:
    @pytest.mark.parametrize(
        "argv, expected",
        [
            (("run", "--procs", "0", "--elements", "4"), ExitCode.CONFIGURATION),
            (("run", "--block-size", "0", "--elements", "4"), ExitCode.CONFIGURATION),
            (("run", "--sweep", "9:1"), ExitCode.CONFIGURATION),
            (("run", "--elements", "4", "--inject-fault", "x"), ExitCode.CONFIGURATION),
            (("run", "--elements", "4", "--op", "xor"), ExitCode.INVALID_ARGUMENT),
            (("verify", "--elements", "4", "--alg", "ring"), ExitCode.INVALID_ARGUMENT),
            (("model", "--height", "1", "--elements", "4"), ExitCode.INVALID_ARGUMENT),
            (("model", "--procs", "6", "--elements", "-5"), ExitCode.INVALID_ARGUMENT),
            (("verify", "--procs", "6", "--elements", "4", "--inject-fault", "99:0"), ExitCode.CONFIGURATION),
        ],
    )
    def test_exit_codes(self, cli, argv: tuple[str, ...], expected: ExitCode):
        code, _, err = cli(*argv)
        assert code == expected
        assert "code_error" in json.loads(err.splitlines()[-1])

    def test_handler_codes(self, capsys):
        assert handle_exception(DeadlockError(name="stuck")) == ExitCode.DEADLOCK
        assert handle_exception(ProtocolError(name="short block")) == ExitCode.PROTOCOL
        assert json.loads(capsys.readouterr().err.splitlines()[-1])["code_error"] == "ProtocolError"

    def test_handler_reraises_foreign(self):
        with pytest.raises(KeyError):
            handle_exception(KeyError("x"))
