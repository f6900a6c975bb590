"""Small shared helpers: deterministic sorting of heterogeneous ids."""

from __future__ import annotations


def sort_key(x):
    """Total order on the nested tuples/strings/ints used as cell ids.

    Ids in this package are ints, strings, or tuples thereof; Python
    cannot compare across those types, so we tag them.
    """
    if x is None:
        return (-1, 0)
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, int):
        return (0, x)
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, tuple):
        return (2, tuple(sort_key(e) for e in x))
    if isinstance(x, frozenset):
        return (3, tuple(sorted(sort_key(e) for e in x)))
    raise TypeError(f"unsortable id: {x!r}")


def ssorted(xs):
    return sorted(xs, key=sort_key)


class UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        if p != x:
            p = self.parent[x] = self.find(p)
        return p

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # keep the smaller representative for determinism
            if sort_key(ry) < sort_key(rx):
                rx, ry = ry, rx
            self.parent[ry] = rx

    def classes(self):
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return {r: ssorted(m) for r, m in out.items()}
