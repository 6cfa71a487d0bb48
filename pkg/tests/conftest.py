import io

import pytest

from matchgame.cli import main


@pytest.fixture
def run_cli(capsys, monkeypatch):
    """Run the CLI in-process; returns (exit_code, stdout, stderr)."""

    def run(args, stdin_text=""):
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
        try:
            code = main(list(args))
        except SystemExit as exc:
            code = exc.code
        out, err = capsys.readouterr()
        return code, out, err

    return run
