import pytest

from src.cli import main


@pytest.fixture
def cli(capsys):
    """Run the command line and return (exit code, stdout, stderr)."""
    def invoke(*argv: str) -> tuple[int, str, str]:
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return invoke
