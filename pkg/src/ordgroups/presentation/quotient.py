"""Homomorphisms to symmetric groups, found by exhaustive search.

Permutations are tuples of images of 0..d-1 and compose left to right, so
the image of a word is the product of its letters' images read in order.
The first generator runs over one representative per cycle type (every
homomorphism is conjugate to one of these); the others run over all of S_d
in lexicographic order.
"""
from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .words import Presentation


def perm_inverse(p: Sequence[int]) -> tuple:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def perm_then(p: Sequence[int], q: Sequence[int]) -> tuple:
    """Apply p, then q."""
    return tuple(q[i] for i in p)


def is_permutation(p, degree: int) -> bool:
    return (
        isinstance(p, (list, tuple))
        and len(p) == degree
        and all(isinstance(x, int) and not isinstance(x, bool) for x in p)
        and sorted(p) == list(range(degree))
    )


def _letter_images(images: Sequence[tuple]) -> dict:
    table = {}
    for k, img in enumerate(images, 1):
        table[k] = tuple(img)
        table[-k] = perm_inverse(img)
    return table


def word_image(w, images: Sequence[tuple]) -> tuple:
    table = _letter_images(images)
    d = len(images[0]) if images else 0
    out = tuple(range(d))
    for x in w:
        out = perm_then(out, table[x])
    return out


def _fixes_all(table: dict, w, d: int) -> bool:
    for i in range(d):
        j = i
        for x in w:
            j = table[x][j]
        if j != i:
            return False
    return True


def satisfies_relators(p: Presentation, images: Sequence[tuple]) -> bool:
    table = _letter_images(images)
    d = len(images[0]) if images else 0
    return all(_fixes_all(table, r, d) for r in p.relators)


def partitions(n: int, largest: int | None = None) -> Iterator[tuple]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def cycle_type_representative(shape: Sequence[int]) -> tuple:
    img, start = [], 0
    for k in shape:
        img.extend(start + (i + 1) % k for i in range(k))
        start += k
    return tuple(img)


def homomorphisms(p: Presentation, degree: int) -> Iterator[tuple]:
    """Generator images (one per generator) satisfying every relator, in search order."""
    if p.ngens == 0:
        return
    firsts = [cycle_type_representative(s) for s in partitions(degree)]
    rest = list(itertools.permutations(range(degree)))
    for first in firsts:
        for others in itertools.product(rest, repeat=p.ngens - 1):
            images = (first,) + others
            if satisfies_relators(p, images):
                yield images


def _separates(images, u, v, mode: str) -> bool:
    a, b = word_image(u, images), word_image(v, images)
    if mode == "distinct":
        return a != b
    if mode == "noncommuting":
        return perm_then(a, b) != perm_then(b, a)
    raise ValueError(f"unknown mode {mode!r}")


def search_quotient(p: Presentation, u, v, degree_cap: int, mode: str = "distinct"):
    """Least (degree, images) in search order separating u and v, or None."""
    if degree_cap < 2:
        raise ValueError("degree_cap must be at least 2")
    for d in range(2, degree_cap + 1):
        for images in homomorphisms(p, d):
            if _separates(images, u, v, mode):
                return d, images
    return None


def check_quotient(p: Presentation, images, u, v, mode: str) -> bool:
    """Replay a stored witness: every image a permutation, relators hold, targets separated."""
    if not isinstance(images, (list, tuple)) or len(images) != p.ngens or not images:
        return False
    d = len(images[0]) if isinstance(images[0], (list, tuple)) else -1
    if d < 1 or not all(is_permutation(img, d) for img in images):
        return False
    images = tuple(tuple(img) for img in images)
    return satisfies_relators(p, images) and _separates(images, u, v, mode)


class QuotientFilter:
    """All homomorphisms to S_d for small d, used to discard words that cannot be trivial."""

    def __init__(self, p: Presentation, max_degree: int = 4, limit: int = 64):
        self.tables = []
        for d in range(2, max_degree + 1):
            for images in homomorphisms(p, d):
                if any(img != tuple(range(d)) for img in images):
                    self.tables.append((d, _letter_images(images)))
                if len(self.tables) >= limit:
                    return

    def may_be_trivial(self, w) -> bool:
        return all(_fixes_all(table, w, d) for d, table in self.tables)
