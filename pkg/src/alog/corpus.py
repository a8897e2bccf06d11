"""Regression corpus of the worked example programs.

Each ``.alog`` file carries its expectations in header comments::

    % expect: {p(a), p(b)}     one line per answer set
    % expect: none             the program has no answer sets
    % mode: solver             optional; oracle, solver or both (default)
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import List, Optional, Union

from .parser import parse_literal_set

_EXPECT_RE = re.compile(r"^%\s*expect:\s*(.*?)\s*$")
_MODE_RE = re.compile(r"^%\s*mode:\s*(\w+)\s*$")


@dataclass(frozen=True)
class CorpusCase:
    name: str
    source: str
    expected: tuple
    mode: str = "both"


def read_case(path: Path) -> CorpusCase:
    text = path.read_text(encoding="utf-8")
    expected, mode, saw_none = [], "both", False
    for line in text.splitlines():
        m = _EXPECT_RE.match(line)
        if m:
            if m.group(1) == "none":
                saw_none = True
            else:
                expected.append(parse_literal_set(m.group(1)))
            continue
        m = _MODE_RE.match(line)
        if m:
            mode = m.group(1)
    if not expected and not saw_none:
        raise ValueError(f"{path.name}: no '% expect:' line")
    return CorpusCase(path.stem, text, tuple(expected), mode)


def bundled_corpus_dir() -> Path:
    return Path(str(resources.files("alog") / "corpus"))


def load_corpus(directory: Optional[Union[str, Path]] = None) -> List[CorpusCase]:
    directory = Path(directory) if directory is not None else bundled_corpus_dir()
    return [read_case(p) for p in sorted(directory.glob("*.alog"))]
