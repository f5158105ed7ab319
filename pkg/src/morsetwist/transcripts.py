"""Executable documentation support.

Docs contain fenced ``console`` blocks of the form::

    ```console
    $ morsetwist homology --example rp2 --system unit-rep
    H_0 = Z/2
    H_1 = 0
    H_2 = Z
    ```

``extract`` pulls every such block out of a markdown file; ``run`` executes
each command (replacing the ``morsetwist`` entry point with the current
interpreter so tests never depend on PATH) and checks the printed output
verbatim.  Redirections of the form ``> file`` are honored inside the
working directory, so a transcript can write a file and feed it to a later
command.
"""

from __future__ import annotations

import shlex
import subprocess
import sys
from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class Transcript:
    source: str
    line: int
    command: str
    expected_output: str


class TranscriptMismatch(AssertionError):
    pass


def extract(path) -> list:
    """All console transcripts in a markdown file, in order."""
    text = Path(path).read_text()
    out = []
    in_block = False
    command = None
    buf: list[str] = []
    start = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not in_block:
            if stripped == "```console":
                in_block = True
            continue
        if stripped == "```":
            if command is not None:
                out.append(Transcript(str(path), start, command,
                                      "\n".join(buf)))
            in_block = False
            command = None
            buf = []
            continue
        if line.startswith("$ "):
            if command is not None:
                out.append(Transcript(str(path), start, command,
                                      "\n".join(buf)))
            command = line[2:].strip()
            buf = []
            start = lineno
        elif command is not None:
            buf.append(line)
    return out


def run(t: Transcript, cwd) -> str:
    """Execute one transcript command in cwd; returns observed stdout."""
    parts = shlex.split(t.command)
    redirect = None
    if ">" in parts:
        i = parts.index(">")
        redirect = parts[i + 1]
        parts = parts[:i]
    if parts[0] != "morsetwist":
        raise ValueError(f"transcript must invoke morsetwist: {t.command}")
    cmd = [sys.executable, "-m", "morsetwist"] + parts[1:]
    proc = subprocess.run(cmd, cwd=cwd, capture_output=True, text=True)
    out = proc.stdout
    if redirect is not None:
        (Path(cwd) / redirect).write_text(out)
        out = ""
    return out.rstrip("\n")


def check(t: Transcript, cwd):
    observed = run(t, cwd)
    if observed != t.expected_output:
        raise TranscriptMismatch(
            f"{t.source}:{t.line}: transcript drifted\n"
            f"$ {t.command}\n--- expected ---\n{t.expected_output}\n"
            f"--- observed ---\n{observed}")
