"""Replay the golden (argv, expected-stdout) corpus under tests/cli_golden.

Each record in a corpus file is a line "$ <argv>" followed by the expected
stdout, byte for byte.  Every table identity is reproducible as a single
invocation this way.
"""

import contextlib
import io
import shlex
from pathlib import Path

import pytest

from springerbc.cli import run

GOLDEN_DIR = Path(__file__).parent / "cli_golden"


def iter_records(path):
    argv = None
    expected = []
    for line in path.read_text().splitlines(keepends=True):
        if line.startswith("$ "):
            if argv is not None:
                yield argv, "".join(expected)
            argv = shlex.split(line[2:])
            expected = []
        else:
            expected.append(line)
    if argv is not None:
        yield argv, "".join(expected)


@pytest.mark.parametrize(
    "path", sorted(GOLDEN_DIR.glob("*.txt")), ids=lambda p: p.stem
)
def test_golden_corpus(path):
    records = list(iter_records(path))
    assert records, path
    for argv, expected in records:
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = run(argv)
        assert code == 0, argv
        assert buf.getvalue() == expected, argv
