#!/usr/bin/env python3
"""Regenerate tests/golden with plain Python integers.

    make_golden.py [--listing FILE]

With --listing, the move sequences are re-read from the LaTeX listing
(`q_i = (& L_{..} ...)`) and compared with data/q*.mov first.
"""
import argparse
import re
import sys
from pathlib import Path

root = Path(__file__).resolve().parent.parent
out = root / "tests" / "golden"
out.mkdir(parents=True, exist_ok=True)

parser = argparse.ArgumentParser()
parser.add_argument("--listing", type=Path)
args = parser.parse_args()


def from_mov(i):
    text = (root / "data" / ("q%d.mov" % i)).read_text()
    text = "\n".join(line.split("#")[0] for line in text.splitlines())
    return [(tok[0], int(tok[1:])) for tok in text.split()]


def from_listing(text, i):
    start = text.index("q_%d = (&" % i)
    end = text.index(")", start + 8)
    return [(s, int(k)) for s, k in re.findall(r"([LR])_\{(\d+)\}", text[start + 6:end])]


def pair(x, y):
    return sum(x[2 * k] * y[2 * k + 1] - x[2 * k + 1] * y[2 * k] for k in range(len(x) // 2))


def twist(d, x, e=1):
    p = pair(x, d)
    return tuple(a + e * p * b for a, b in zip(x, d))


def run(t, q):
    t = list(t)
    for s, k in q:
        k -= 1
        if s == "L":
            t[k], t[k + 1] = twist(t[k], t[k + 1]), t[k]
        else:
            t[k], t[k + 1] = t[k + 1], twist(t[k + 1], t[k], -1)
    return t


def matrix(t):
    return [[pair(a, b) for b in t] for a in t]


def csv(m):
    return "".join(",".join(str(v) for v in row) + "\n" for row in m)


c = [(1, 0, 0, 0), (0, 1, 0, 0), (1, 0, 1, 0), (0, 0, 0, 1), (0, 0, 1, 0)]
tuples = {
    1: [c[i] for i in [0, 1, 2, 3, 4, 4, 3, 2, 1, 0]] * 2,
    2: c[:4] * 5,
    3: c * 6,
}
lists = {i: from_mov(i) for i in (1, 2, 3)}
if args.listing:
    text = args.listing.read_text()
    for i in (1, 2, 3):
        if from_listing(text, i) != lists[i]:
            sys.exit("q%d.mov differs from the listing" % i)
blocks = {}
for i in (1, 2, 3):
    moved = run(tuples[i] + [c[0]], lists[i])
    (out / ("lemma%d.csv" % i)).write_text(csv(matrix(moved)))
    blocks[i] = moved[:-1]

first = None
for n in range(1, 101):
    t = list(blocks[1])
    for i, mult in ((1, 1), (2, 2), (3, 3)):
        t += [twist(c[0], x, mult * n) for x in blocks[i]]
    m = matrix(t)
    if all(m[a][b] != 0 for a in range(len(t)) for b in range(len(t)) if a != b):
        first = n
        break
(out / "twisted.txt").write_text("length %d\nN %s\n" % (len(t), first))
sys.stdout.write("moves %s, twisted N %s\n" % ([len(lists[i]) for i in (1, 2, 3)], first))
