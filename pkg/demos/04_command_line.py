"""# The alog command

`alog ground`, `alog solve` and `alog corpus` wrap the library. Here they
are driven through `main` so the script runs without a shell."""

import tempfile
from pathlib import Path

from alog.cli import main

tmp = Path(tempfile.mkdtemp())
prog = tmp / "ta.alog"
prog.write_text("need_ta(C) :- card{X : enrolled(C,X)} > 2.\n"
                "enrolled(c, s1). enrolled(c, s2). enrolled(c, s3). enrolled(d, s1).\n")

"""## Grounding"""

main(["ground", str(prog)])

"""## Solving

Exit code 10 means an answer set exists, 20 means none does."""

code = main(["solve", str(prog), "--mode", "both", "--format", "jsonl"])
print("exit code", code)

"""## The bundled corpus"""

print("exit code", main(["corpus"]))
