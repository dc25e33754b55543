#!/usr/bin/env python3
"""Tour of the command-line surface.

Runs each subcommand in-process against the bundled fixture files and a
generated graph, printing the commands with their JSON (or .sg / DOT)
output.  The same commands work from a shell as ``sigdef <subcommand> ...``
once the package is installed.
"""

from pathlib import Path

from sigdef.cli import main

HERE = Path(__file__).parent
TRIANGLE = str(HERE / "fig_triangle.sg")
WORKED = str(HERE / "worked_example.sg")


def show(*argv: str) -> None:
    print(f"$ sigdef {' '.join(argv)}")
    code = main(list(argv))
    print(f"(exit {code})")
    print()


show("chromatic", TRIANGLE)
show("deficiency", TRIANGLE)
show("maxdef", WORKED, "--assume-chromatic-3")
show("cover-check", WORKED, "--cover", "b1,a2,b3,a4,a5,a6,a7")
show("switching-range", TRIANGLE)
show("switch", TRIANGLE, "--set", "w")
show("gen", "--pairs", "3", "--neg-prob", "0.4", "--seed", "7")
show("dot", TRIANGLE, "--cover", "v")
show("crosscheck", "--count", "50", "--max-pairs", "6", "--seed", "1")
