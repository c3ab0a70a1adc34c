#!/usr/bin/env python3
"""Regenerate data/realforms.json.

Writes one record per real form of every simple complex Lie algebra of rank
<= 8 (isomorphic low-rank duplicates removed).  Node numbering is Bourbaki.
The `expect` block holds dim k and the real rank taken from the standard
maximal-compact-subalgebra formulas; the loader recomputes both from the
Satake diagram and refuses the file on any mismatch.
"""
import json
import sys


def forms(fam, n):
    nodes = range(1, n + 1)
    out = []

    def add(name, black, arrows, dim_k, rank):
        rec = {"name": name, "type": f"{fam}{n}", "black": sorted(black),
               "arrows": [list(a) for a in arrows]}
        if rank == 0:
            rec["compact"] = True
        rec["expect"] = {"dim_k": dim_k, "real_rank": rank}
        out.append(rec)

    if fam == "A":
        m = n + 1
        add(f"su({m})", set(nodes), [], m * m - 1, 0)
        add(f"sl({m},R)", set(), [], m * (m - 1) // 2, n)
        if m % 2 == 0 and m >= 4:
            add(f"su*({m})", {i for i in nodes if i % 2 == 1}, [], (m // 2) * (m + 1), m // 2 - 1)
        for p in range(1, m // 2 + 1):
            q = m - p
            if p == q == 1:
                continue  # su(1,1) = sl(2,R)
            arrows = [(i, m - i) for i in range(1, p + 1) if i < m - i]
            add(f"su({p},{q})", {i for i in nodes if p < i < m - p}, arrows, p * p + q * q - 1, p)
    elif fam == "B":
        m = 2 * n + 1
        for p in range(0, n + 1):
            q = m - p
            name = f"so({m})" if p == 0 else f"so({p},{q})"
            add(name, {i for i in nodes if i > p}, [], p * (p - 1) // 2 + q * (q - 1) // 2, p)
    elif fam == "C":
        add(f"sp({n})", set(nodes), [], n * (2 * n + 1), 0)
        add(f"sp({2 * n},R)", set(), [], n * n, n)
        for p in range(1, n // 2 + 1):
            q = n - p
            black = {i for i in nodes if (i <= 2 * p and i % 2 == 1) or i > 2 * p}
            add(f"sp({p},{q})", black, [], p * (2 * p + 1) + q * (2 * q + 1), p)
    elif fam == "D":
        m = 2 * n
        add(f"so({m})", set(nodes), [], m * (m - 1) // 2, 0)
        for p in range(1, n + 1):
            q = m - p
            k = p * (p - 1) // 2 + q * (q - 1) // 2
            if n == 4 and p == 2:
                # so(2,6) = so*(8); drawn with the so*(8) colouring
                add("so(2,6)", {1, 3}, [], k, 2)
            elif p <= n - 2:
                add(f"so({p},{q})", {i for i in nodes if i > p}, [], k, p)
            elif p == n - 1:
                add(f"so({p},{q})", set(), [(n - 1, n)], k, p)
            else:
                add(f"so({p},{q})", set(), [], k, p)
        if n >= 5:
            if n % 2 == 0:
                add(f"so*({m})", {i for i in nodes if i % 2 == 1}, [], n * n, n // 2)
            else:
                add(f"so*({m})", {i for i in range(1, n - 1) if i % 2 == 1}, [(n - 1, n)], n * n, (n - 1) // 2)
    elif (fam, n) == ("E", 6):
        add("e6(6)", set(), [], 36, 6)
        add("e6(2)", set(), [(1, 6), (3, 5)], 38, 4)
        add("e6(-14)", {3, 4, 5}, [(1, 6)], 46, 2)
        add("e6(-26)", {2, 3, 4, 5}, [], 52, 2)
        add("e6(-78)", set(nodes), [], 78, 0)
    elif (fam, n) == ("E", 7):
        add("e7(7)", set(), [], 63, 7)
        add("e7(-5)", {2, 5, 7}, [], 69, 4)
        add("e7(-25)", {2, 3, 4, 5}, [], 79, 3)
        add("e7(-133)", set(nodes), [], 133, 0)
    elif (fam, n) == ("E", 8):
        add("e8(8)", set(), [], 120, 8)
        add("e8(-24)", {2, 3, 4, 5}, [], 136, 4)
        add("e8(-248)", set(nodes), [], 248, 0)
    elif (fam, n) == ("F", 4):
        add("f4(4)", set(), [], 24, 4)
        add("f4(-20)", {1, 2, 3}, [], 36, 1)
        add("f4(-52)", set(nodes), [], 52, 0)
    elif (fam, n) == ("G", 2):
        add("g2(2)", set(), [], 6, 2)
        add("g2(-14)", set(nodes), [], 14, 0)
    return out


def main():
    types = ([("A", i) for i in range(1, 9)] + [("B", i) for i in range(2, 9)]
             + [("C", i) for i in range(3, 9)] + [("D", i) for i in range(4, 9)]
             + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)])
    records = [r for t in types for r in forms(*t)]
    doc = {"format": "kleinsieve-realforms", "version": 1, "realforms": records}
    lines = ['{', '  "format": "kleinsieve-realforms",', '  "version": 1,', '  "realforms": [']
    for i, r in enumerate(records):
        sep = "," if i + 1 < len(records) else ""
        lines.append("    " + json.dumps(r, separators=(", ", ": ")) + sep)
    lines += ["  ]", "}"]
    json.loads("\n".join(lines)) == doc or sys.exit("round trip failed")
    print("\n".join(lines))


if __name__ == "__main__":
    main()
