"""Permutations on the letters 1..n, cycle notation, and the perfect-matching stream.

All external representations are 1-based.  Compiled kernels work on 0-based
numpy copies obtained with :meth:`Permutation.to_array`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from mapenum.errors import MapEnumError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class PermutationError(MapEnumError, ValueError):
    pass


class Permutation:
    """A bijection of ``{1, ..., n}`` stored as its image sequence.

    ``images[i - 1]`` is the image of letter ``i``.  Instances are immutable
    and hashable.

    >>> p = Permutation.from_string("(1 2 3)(4 5)")
    >>> p(3), p(5)
    (1, 4)
    >>> str(p.inverse())
    '(1 3 2)(4 5)'
    """

    __slots__ = ("_images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise PermutationError(f"not a bijection on 1..{n}: {images}")
        self._images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int | None = None) -> "Permutation":
        cycles = [tuple(c) for c in cycles]
        letters = [x for c in cycles for x in c]
        if len(letters) != len(set(letters)):
            raise PermutationError(f"cycles are not disjoint: {cycles}")
        if n is None:
            n = max(letters, default=0)
        images = list(range(1, n + 1))
        for c in cycles:
            for i, x in enumerate(c):
                if not 1 <= x <= n:
                    raise PermutationError(f"letter {x} outside 1..{n}")
                images[x - 1] = c[(i + 1) % len(c)]
        return cls(images)

    @classmethod
    def from_string(cls, text: str, n: int | None = None) -> "Permutation":
        """Parse cycle notation such as ``"(1 2 3)(4 5 6)"``.

        When ``n`` is omitted the size is the largest letter mentioned, so
        trailing fixed points must be written out as 1-cycles.
        """
        stripped = _CYCLE_RE.sub("", text).strip()
        if stripped:
            raise PermutationError(f"unparsable cycle notation: {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(text):
            tokens = body.replace(",", " ").split()
            if not tokens:
                raise PermutationError(f"empty cycle in {text!r}")
            cycles.append([int(t) for t in tokens])
        return cls.from_cycles(cycles, n)

    @classmethod
    def from_array(cls, arr) -> "Permutation":
        """Build from a 0-based image array."""
        return cls(int(x) + 1 for x in arr)

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    @property
    def size(self) -> int:
        return len(self._images)

    def __len__(self) -> int:
        return len(self._images)

    def __call__(self, letter: int) -> int:
        return self._images[letter - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, x in enumerate(self._images, start=1):
            inv[x - 1] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self._images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        return cycle_decomposition(self).cycles

    def cycle_count(self) -> int:
        return cycle_decomposition(self).cycle_count

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles()))

    def to_array(self) -> np.ndarray:
        return np.asarray(self._images, dtype=np.int64) - 1

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())

    def __repr__(self) -> str:
        return f"Permutation.from_string({str(self)!r})"


@dataclass(frozen=True)
class CycleDecomposition:
    """Canonical cycles: each rotated to start at its least letter, sorted by it."""

    cycles: list[tuple[int, ...]]

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)


def compose(outer: Permutation, inner: Permutation) -> Permutation:
    """Return ``outer o inner``, i.e. ``x -> outer(inner(x))``."""
    if outer.size != inner.size:
        raise PermutationError(f"size mismatch: {outer.size} vs {inner.size}")
    o = outer.images
    return Permutation(o[x - 1] for x in inner.images)


def cycle_decomposition(p: Permutation) -> CycleDecomposition:
    images = p.images
    seen = [False] * len(images)
    cycles = []
    for start in range(1, len(images) + 1):
        if seen[start - 1]:
            continue
        cycle = []
        x = start
        while not seen[x - 1]:
            seen[x - 1] = True
            cycle.append(x)
            x = images[x - 1]
        cycles.append(tuple(cycle))
    return CycleDecomposition(cycles)


def conjugate(p: Permutation, r: Permutation) -> Permutation:
    """Return ``r o p o r^-1``; the cycle ``(a b ...)`` becomes ``(r(a) r(b) ...)``."""
    if p.size != r.size:
        raise PermutationError(f"size mismatch: {p.size} vs {r.size}")
    return compose(r, compose(p, r.inverse()))


def orbit_is_full(generators: Sequence[Permutation], n_letters: int) -> bool:
    """True iff the group generated by ``generators`` is transitive on 1..n_letters."""
    if n_letters <= 1:
        return True
    for g in generators:
        if g.size != n_letters:
            raise PermutationError(f"generator of size {g.size}, expected {n_letters}")
    seen = bytearray(n_letters + 1)
    seen[1] = 1
    stack = [1]
    reached = 1
    while stack:
        x = stack.pop()
        for g in generators:
            y = g.images[x - 1]
            if not seen[y]:
                seen[y] = 1
                reached += 1
                if reached == n_letters:
                    return True
                stack.append(y)
    return reached == n_letters


@dataclass(frozen=True)
class Matching:
    """A perfect matching of ``{1, ..., 2E}``, i.e. a fixed-point-free involution.

    ``pairs`` holds ``(a, b)`` with ``a < b``, sorted by ``a``.
    """

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted((min(a, b), max(a, b)) for a, b in self.pairs))
        letters = sorted(x for pr in pairs for x in pr)
        if letters != list(range(1, 2 * len(pairs) + 1)):
            raise PermutationError(f"not a perfect matching: {self.pairs}")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def from_permutation(cls, p: Permutation) -> "Matching":
        pairs = []
        for a in range(1, p.size + 1):
            b = p(a)
            if b == a or p(b) != a:
                raise PermutationError(f"{p} is not a fixed-point-free involution")
            if a < b:
                pairs.append((a, b))
        return cls(tuple(pairs))

    @property
    def size(self) -> int:
        return 2 * len(self.pairs)

    def to_permutation(self) -> Permutation:
        return Permutation.from_cycles(self.pairs, self.size)

    def __str__(self) -> str:
        return "".join(f"({a} {b})" for a, b in self.pairs)


def double_factorial(n: int) -> int:
    """``n!! = n (n-2) (n-4) ...``, with ``(-1)!! = 0!! = 1``."""
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def _check_prefix(n_letters: int, prefix: Sequence[tuple[int, int]]) -> list[int]:
    if n_letters < 2 or n_letters % 2:
        raise PermutationError(f"matchings need an even number of letters >= 2, got {n_letters}")
    partner = [0] * (n_letters + 1)
    for a, b in prefix:
        a, b = min(a, b), max(a, b)
        if not 1 <= a < b <= n_letters or partner[a] or partner[b]:
            raise PermutationError(f"invalid prefix pair ({a}, {b})")
        first_free = partner.index(0, 1)
        if a != first_free:
            raise PermutationError(f"prefix pair ({a}, {b}) does not start at the least free letter {first_free}")
        partner[a], partner[b] = b, a
    return partner


def iter_involutions(
    n_letters: int,
    prefix: Sequence[tuple[int, int]] = (),
    out: list[int] | None = None,
) -> Iterator[list[int]]:
    """Stream fixed-point-free involutions into one scratch list.

    The list ``out`` (length ``n_letters + 1``, index 0 unused) is overwritten
    at every step and yielded; ``out[a]`` is the partner of ``a``.  Order is the
    canonical one: the least unmatched letter is paired with each larger free
    letter in increasing order.  A ``prefix`` of canonical pairs pins the
    start of the recursion, so sub-streams for different first pairs can be
    produced independently.
    """
    partner = _check_prefix(n_letters, prefix)
    if out is None:
        out = [0] * (n_letters + 1)
    out[:] = partner
    base = len(prefix)
    depth_total = n_letters // 2
    if base == depth_total:
        yield out
        return
    a_stack = [0] * depth_total
    b_stack = [0] * depth_total
    d = base
    a = out.index(0, 1)
    a_stack[d] = b_stack[d] = a
    while True:
        a, b = a_stack[d], b_stack[d]
        if b != a:
            out[a] = out[b] = 0
        b += 1
        while b <= n_letters and out[b]:
            b += 1
        if b > n_letters:
            d -= 1
            if d < base:
                return
            continue
        b_stack[d] = b
        out[a], out[b] = b, a
        if d == depth_total - 1:
            yield out
        else:
            d += 1
            na = a + 1
            while out[na]:
                na += 1
            a_stack[d] = b_stack[d] = na


def matchings(n_letters: int, prefix: Sequence[tuple[int, int]] = ()) -> Iterator[Matching]:
    """Yield every perfect matching of 1..n_letters exactly once, in canonical order.

    >>> [str(m) for m in matchings(4)]
    ['(1 2)(3 4)', '(1 3)(2 4)', '(1 4)(2 3)']
    """
    for partner in iter_involutions(n_letters, prefix):
        yield Matching(tuple((a, partner[a]) for a in range(1, n_letters + 1) if a < partner[a]))


def matching_prefixes(n_letters: int, depth: int) -> list[tuple[tuple[int, int], ...]]:
    """All canonical prefixes of ``depth`` pairs, in stream order.

    Concatenating the sub-streams of these prefixes reproduces the full stream.
    """
    depth = min(depth, n_letters // 2)
    out: list[tuple[tuple[int, int], ...]] = []

    def rec(prefix, used):
        if len(prefix) == depth:
            out.append(tuple(prefix))
            return
        a = next(x for x in range(1, n_letters + 1) if x not in used)
        for b in range(a + 1, n_letters + 1):
            if b in used:
                continue
            rec(prefix + [(a, b)], used | {a, b})

    _check_prefix(n_letters, ())
    rec([], frozenset())
    return out
