"""Words over named generators and finite presentations.

Words are tuples of nonzero ints: ``k`` is the k-th generator (1-based) and
``-k`` its inverse.  In text, an uppercase name denotes the inverse
(``A`` for ``a^-1``, ``S1`` for ``s1^-1``), ``^n`` raises the preceding
generator or parenthesised group to an integer power, ``1`` is the empty
word and whitespace is ignored.  A relation ``u = v`` is stored as the
relator ``u v^-1``; chains ``u = v = w`` give one relator per ``=``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from ..errors import MalformedPresentation, MalformedWord

Word = tuple


def free_reduce(letters: Iterable[int]) -> Word:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def power(w: Sequence[int], k: int) -> Word:
    base = tuple(w) if k >= 0 else inverse(w)
    return free_reduce(base * abs(k))


def concat(*words: Sequence[int]) -> Word:
    return free_reduce(x for w in words for x in w)


def cyclic_reduce(w: Sequence[int]) -> Word:
    w = free_reduce(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def rotations(w: Sequence[int]) -> list:
    w = tuple(w)
    return [w[k:] + w[:k] for k in range(len(w))] or [()]


def commutator(u: Sequence[int], v: Sequence[int]) -> Word:
    """u v u^-1 v^-1."""
    return concat(u, v, inverse(u), inverse(v))


def exponent_sums(w: Sequence[int], ngens: int) -> list:
    e = [0] * ngens
    for x in w:
        e[abs(x) - 1] += 1 if x > 0 else -1
    return e


def letter_key(x: int):
    """Generators before inverses, then by index: a < b < A < B."""
    return (x < 0, abs(x))


def word_key(w: Sequence[int]):
    return (len(w), tuple(letter_key(x) for x in w))


def all_words(ngens: int, max_len: int, include_empty: bool = False) -> list:
    """Freely reduced words up to ``max_len``, sorted by :func:`word_key`."""
    letters = sorted((s * k for k in range(1, ngens + 1) for s in (1, -1)), key=letter_key)
    out, layer = ([()] if include_empty else []), [()]
    for _ in range(max_len):
        layer = [w + (x,) for w in layer for x in letters if not w or w[-1] != -x]
        out.extend(layer)
    return out


@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple
    name: str = ""

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise MalformedPresentation("duplicate generator names")
        for g in gens:
            if not re.fullmatch(r"[a-z][a-z0-9_]*", g):
                raise MalformedPresentation(f"generator names must be lowercase identifiers: {g!r}")
        rels = []
        for r in self.relators:
            r = free_reduce(int(x) for x in r)
            if any(x == 0 or abs(x) > len(gens) for x in r):
                raise MalformedPresentation(f"relator uses an unknown generator: {r}")
            if not r:
                raise MalformedPresentation("relator is trivial after free reduction")
            rels.append(r)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def ngens(self) -> int:
        return len(self.generators)

    # --- text ---------------------------------------------------------------

    def _tokens(self):
        toks = []
        for i, g in enumerate(self.generators, 1):
            toks.append((g, i))
            toks.append((g.upper(), -i))
        return sorted(toks, key=lambda t: -len(t[0]))

    def parse_word(self, text: str) -> Word:
        text = re.sub(r"\s+", "", text)
        toks = self._tokens()
        pos = 0

        def group() -> list:
            nonlocal pos
            out: list[int] = []
            while pos < len(text) and text[pos] != ")":
                if text[pos] == "(":
                    pos += 1
                    item = group()
                    if pos >= len(text) or text[pos] != ")":
                        raise MalformedWord(f"unbalanced parenthesis in {text!r}")
                    pos += 1
                else:
                    for name, letter in toks:
                        if text.startswith(name, pos):
                            item = [letter]
                            pos += len(name)
                            break
                    else:
                        if text[pos] == "1":
                            item = []
                            pos += 1
                        else:
                            raise MalformedWord(f"unknown symbol at {text[pos:]!r}")
                m = re.match(r"\^(-?\d+)", text[pos:])
                if m:
                    item = list(power(item, int(m.group(1))))
                    pos += m.end()
                out.extend(item)
            return out

        w = group()
        if pos != len(text):
            raise MalformedWord(f"unbalanced parenthesis in {text!r}")
        return free_reduce(w)

    def format_word(self, w: Sequence[int]) -> str:
        if not w:
            return "1"
        names = [self.generators[abs(x) - 1] if x > 0 else self.generators[abs(x) - 1].upper() for x in w]
        sep = "" if all(len(g) == 1 for g in self.generators) else " "
        return sep.join(names)

    def parse_relation(self, text: str) -> list:
        parts = [self.parse_word(s) for s in text.split("=")]
        if len(parts) == 1:
            return parts
        return [concat(a, inverse(b)) for a, b in zip(parts, parts[1:])]

    @classmethod
    def from_relations(cls, generators: Sequence[str], relations: Sequence[str], name: str = "") -> "Presentation":
        shell = cls(tuple(generators), (), name)
        rels = [r for text in relations for r in shell.parse_relation(text)]
        return cls(shell.generators, tuple(rels), name)

    @classmethod
    def parse(cls, text: str) -> "Presentation":
        """Read the ``.pres`` format: ``name:``, ``generators:``, then one relation per line."""
        gens, rels, name = None, [], ""
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, _, rest = line.partition(":")
            key = key.strip().lower()
            if _ and key == "generators":
                gens = rest.split()
            elif _ and key == "name":
                name = rest.strip()
            elif _ and key in ("relations", "relators"):
                if rest.strip():
                    rels.append(rest.strip())
            else:
                rels.append(line)
        if gens is None:
            raise MalformedPresentation("missing 'generators:' line")
        return cls.from_relations(gens, rels, name)

    @classmethod
    def load(cls, path) -> "Presentation":
        return cls.parse(Path(path).read_text())

    def to_text(self) -> str:
        lines = []
        if self.name:
            lines.append(f"name: {self.name}")
        lines.append("generators: " + " ".join(self.generators))
        lines.append("relators:")
        lines.extend(self.format_word(r) for r in self.relators)
        return "\n".join(lines) + "\n"

    def to_json(self):
        return {"name": self.name, "generators": list(self.generators), "relators": [list(r) for r in self.relators]}

    @classmethod
    def from_json(cls, obj) -> "Presentation":
        return cls(tuple(obj["generators"]), tuple(tuple(r) for r in obj["relators"]), obj.get("name", ""))

    # --- Tietze-style derived presentations -----------------------------------

    def with_equalities(self, equalities: Sequence) -> tuple:
        """Impose equalities ``lhs = rhs`` and return (presentation, word map).

        An equality whose left side is a single generator not occurring on the
        right is applied by substitution to relators and to later
        equalities; the word map performs the same substitution.  Other
        equalities are appended as relators.  Relators that become trivial,
        and repeated relators, are dropped.
        """
        subst: dict[int, Word] = {}

        def apply(w):
            out = []
            for x in w:
                i = abs(x)
                if i in subst:
                    out.extend(subst[i] if x > 0 else inverse(subst[i]))
                else:
                    out.append(x)
            return free_reduce(out)

        extra = []
        for lhs, rhs in equalities:
            lhs, rhs = apply(lhs), apply(rhs)
            if len(lhs) == 1 and lhs[0] > 0 and all(abs(x) != lhs[0] for x in rhs):
                subst = {k: free_reduce(_sub_one(v, lhs[0], rhs)) for k, v in subst.items()}
                subst[lhs[0]] = rhs
            else:
                extra.append(concat(lhs, inverse(rhs)))
        rels = [apply(r) for r in self.relators] + [apply(r) for r in extra]
        rels = list(dict.fromkeys(r for r in rels if r))
        return Presentation(self.generators, tuple(rels), self.name), apply


def _sub_one(w, gen: int, rhs: Word) -> list:
    out = []
    for x in w:
        if abs(x) == gen:
            out.extend(rhs if x > 0 else inverse(rhs))
        else:
            out.append(x)
    return out
