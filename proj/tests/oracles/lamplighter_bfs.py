#!/usr/bin/env python3
"""Independent brute-force oracle for H wr Z with H = Z/k (k = 0 means H = Z).

Elements are (frozenset of (pos, val)), shift).  Right multiplication by the
generators a^{+-1} (lamp at the cursor) and s^{+-1} (cursor move).  Used to
freeze golden values asserted by the C++ test suite.
"""
import sys


def bfs(k, radius):
    start = ((), 0)
    seen = {start: 0}
    frontier = [start]
    sizes = [1]
    for r in range(1, radius + 1):
        nxt = []
        for lamps, n in frontier:
            d = dict(lamps)
            for step in (1, -1):
                cand = (lamps, n + step)
                if cand not in seen:
                    seen[cand] = r
                    nxt.append(cand)
            for delta in ((1, -1) if k == 0 else {1 % k, (k - 1) % k}):
                e = dict(d)
                v = e.get(n, 0) + delta
                if k:
                    v %= k
                if v:
                    e[n] = v
                else:
                    e.pop(n, None)
                cand = (tuple(sorted(e.items())), n)
                if cand not in seen:
                    seen[cand] = r
                    nxt.append(cand)
        frontier = nxt
        sizes.append(sizes[-1] + len(nxt))
    return seen, sizes


if __name__ == "__main__":
    seen2, s2 = bfs(2, 8)
    print("Z/2 ball sizes", s2)
    seen3, s3 = bfs(3, 6)
    print("Z/3 ball sizes", s3)
    print("len ({1:1},0)", seen2[(((1, 1),), 0)])
    print("len ({-1:1,1:1},0)", seen2[(((-1, 1), (1, 1)), 0)])
    print("len ({0:1},0)", seen2[(((0, 1),), 0)])
    seenz, sz = bfs(0, 7)
    print("Z ball sizes", sz)
    print("len Z ({2:-3},2)", seenz[(((2, -3),), 2)])
    print("len Z ({-1:2,1:1},-1)", seenz[(((-1, 2), (1, 1)), -1)])
