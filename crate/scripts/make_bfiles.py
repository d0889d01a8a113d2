#!/usr/bin/env python3
"""Write stand-in OEIS b-files for the offline test suite.

Each sequence is expanded from the rational generating function recorded in
its OEIS entry, by power-series division over the integers. Real b-files
downloaded from oeis.org can replace these files unchanged.
"""
import pathlib
import sys

# name -> (numerator, denominator, first index), coefficients lowest degree first
SEQUENCES = {
    "A000045": ([0, 1], [1, -1, -1], 0),            # x/(1-x-x^2)
    "A000931": ([1, 0, -1], [1, 0, -1, -1], 0),     # (1-x^2)/(1-x^2-x^3)
    "A028495": ([1, 0, -1], [1, -1, -2, 1], 0),     # (1-x^2)/(1-x-2x^2+x^3)
    "A052535": ([1, 0, -1], [1, -1, -2, 0, 1], 0),  # (1-x)(1+x)/(1-x-2x^2+x^4)
}


def expand(num, den, terms):
    out = []
    for i in range(terms):
        acc = num[i] if i < len(num) else 0
        for j in range(1, min(i, len(den) - 1) + 1):
            acc -= den[j] * out[i - j]
        out.append(acc // den[0])
    return out


def main(target, terms=151):
    target = pathlib.Path(target)
    target.mkdir(parents=True, exist_ok=True)
    for name, (num, den, first) in SEQUENCES.items():
        values = expand(num, den, terms)
        lines = [f"# {name}: locally expanded from its generating function"]
        lines += [f"{first + i} {v}" for i, v in enumerate(values)]
        (target / f"b{name[1:]}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "crates/cli/tests/data/bfiles")
