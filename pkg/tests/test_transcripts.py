"""Docs are executable: every console block is run verbatim.

Blocks within one markdown file share a working directory, so an early
command can write a file (via `> file` redirection or `-o`) that a later
command consumes.  Support files from docs/examples/ are staged into the
working directory first.
"""

import shutil
from pathlib import Path

import pytest

from morsetwist import transcripts

DOCS = Path(__file__).resolve().parent.parent / "docs"
DOC_FILES = sorted(DOCS.glob("*.md"))


def test_docs_exist():
    assert DOC_FILES, "no markdown docs found"


@pytest.mark.parametrize("doc", DOC_FILES, ids=lambda p: p.name)
def test_doc_transcripts(doc, tmp_path):
    ts = transcripts.extract(doc)
    if doc.name in ("walkthrough.md", "formats.md"):
        assert ts, f"{doc.name} has no console transcripts"
    for support in (DOCS / "examples").glob("*"):
        shutil.copy(support, tmp_path / support.name)
    for t in ts:
        transcripts.check(t, tmp_path)


def test_every_cli_command_appears_in_some_transcript():
    commands = {"validate", "homology", "cohomology", "novikov", "euler",
                "obstructions", "from-triangulation", "example"}
    seen = set()
    for doc in DOC_FILES:
        for t in transcripts.extract(doc):
            seen.add(t.command.split()[1])
    assert commands <= seen, f"untested commands: {commands - seen}"


def test_conventions_table_states_the_weight_rule():
    text = (DOCS / "conventions.md").read_text()
    assert "t^(+a)" in text and "t^(−a)" in text


def test_mismatch_is_reported(tmp_path):
    t = transcripts.Transcript(
        source="synthetic", line=1,
        command="morsetwist euler --example rp2",
        expected_output="definitely wrong")
    with pytest.raises(transcripts.TranscriptMismatch):
        transcripts.check(t, tmp_path)
