"""Free-group word algebra.

A word is a tuple of nonzero ints: +i stands for the i-th generator a_i,
-i for its inverse.  Text syntax: lowercase = generator ('a' = 1, 'b' = 2,
...), uppercase = inverse, so "abAB" is the commutator a b a^-1 b^-1.
Generators past 26 are written "a3"/"A3" style with an explicit index.
"""

from __future__ import annotations

import re

Word = tuple[int, ...]

_TOKEN = re.compile(r"([a-zA-Z])([0-9]*)")


def parse_word(text: str) -> Word:
    """Parse the text syntax above into a Word.  Whitespace is ignored."""
    text = "".join(text.split())
    letters = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ValueError(f"bad character {text[pos]!r} at position {pos} in word")
        ch, digits = m.group(1), m.group(2)
        if digits:
            if ch not in ("a", "A"):
                raise ValueError(f"numeric generator must use 'a'/'A', got {ch}{digits}")
            idx = int(digits)
            if idx < 1:
                raise ValueError(f"generator index must be >= 1, got {idx}")
        else:
            idx = ord(ch.lower()) - ord("a") + 1
        letters.append(idx if ch.islower() else -idx)
        pos = m.end()
    return tuple(letters)


def format_word(w: Word) -> str:
    """Inverse of parse_word."""
    out = []
    for x in w:
        idx = abs(x)
        if idx <= 26:
            ch = chr(ord("a") + idx - 1)
            out.append(ch if x > 0 else ch.upper())
        else:
            out.append(f"a{idx}" if x > 0 else f"A{idx}")
    return "".join(out)


def word_alphabet(w: Word) -> int:
    """Smallest alphabet size containing every letter of w."""
    return max((abs(x) for x in w), default=0)


def invert(w: Word) -> Word:
    return tuple(-x for x in reversed(w))


def free_reduce(w: Word) -> Word:
    """The unique freely reduced word equal to w; idempotent."""
    stack: list[int] = []
    for x in w:
        if x == 0:
            raise ValueError("letters must be nonzero")
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def is_reduced(w: Word) -> bool:
    return all(w[i] != -w[i + 1] for i in range(len(w) - 1))


def is_cyclically_reduced(w: Word) -> bool:
    if not is_reduced(w):
        return False
    return len(w) < 2 or w[0] != -w[-1]


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Return (core, conjugator) with w = conjugator . core . conjugator^-1.

    The core is cyclically reduced; the identity holds after free reduction.
    """
    r = list(free_reduce(w))
    conj: list[int] = []
    while len(r) >= 2 and r[0] == -r[-1]:
        conj.append(r[0])
        r = r[1:-1]
    return tuple(r), tuple(conj)


def primitive_root(w: Word) -> tuple[Word, int]:
    """Write w = root^exp as a literal letter sequence with exp maximal.

    Requires w nonempty and cyclically reduced.
    """
    if not w:
        raise ValueError("primitive_root: empty word")
    if not is_cyclically_reduced(w):
        raise ValueError("primitive_root: word must be cyclically reduced")
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d], n // d
    raise AssertionError("unreachable: d = n always works")


def is_simple(w: Word) -> bool:
    """True iff w is not a proper power v^p with p > 1."""
    return primitive_root(w)[1] == 1


def require_simple_cyclic(w: Word) -> None:
    """Shared precondition of the cycle-counting operations."""
    if not w:
        raise ValueError("word must be nonempty")
    if not is_cyclically_reduced(w):
        raise ValueError(
            f"word {format_word(w)!r} is not cyclically reduced; "
            "apply cyclic_reduce first"
        )
    if not is_simple(w):
        root, p = primitive_root(w)
        raise ValueError(
            f"word {format_word(w)!r} is the proper power {format_word(root)!r}^{p}; "
            "use its primitive root"
        )
