"""Classical Costas sequences and their periodicity properties.

A sequence here is a permutation of 1..n given as a plain list/tuple of ints.
The difference triangle row k holds a[i+k] - a[i]; the sequence is Costas
when no row repeats a value.  On top of that sit three successively stronger
properties: singly periodic (every cyclic rotation is Costas), circular
(circular differences are distinct mod n+1, row by row), and shifting (each
circular difference row mod n+1 is itself a cyclic rotation of the sequence).
The exponential construction a_i = alpha^(i+c) mod p realizes the strongest
of these for every primitive root alpha of an odd prime p.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .numbers import is_prime, is_primitive_root

ENUMERATION_CAP = 8


def as_sequence(terms: Iterable[int]) -> tuple[int, ...]:
    """Validate and normalize a permutation of 1..n."""
    seq = tuple(int(t) for t in terms)
    n = len(seq)
    if n == 0:
        raise ValueError("empty sequence")
    if sorted(seq) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {list(seq)}")
    return seq


def difference_triangle(terms: Sequence[int]) -> list[list[int]]:
    """Rows k = 1..n-1 of a[i+k] - a[i] (plain integer differences)."""
    seq = as_sequence(terms)
    n = len(seq)
    return [[seq[i + k] - seq[i] for i in range(n - k)] for k in range(1, n)]


def is_costas(terms: Sequence[int]) -> bool:
    """True iff no difference-triangle row contains a repeat."""
    seq = as_sequence(terms)
    n = len(seq)
    for k in range(1, n):
        row = [seq[i + k] - seq[i] for i in range(n - k)]
        if len(set(row)) != len(row):
            return False
    return True


def is_singly_periodic(terms: Sequence[int]) -> bool:
    """True iff all n cyclic rotations are Costas."""
    seq = as_sequence(terms)
    n = len(seq)
    return all(is_costas(seq[r:] + seq[:r]) for r in range(n))


def circular_difference_rows(terms: Sequence[int]) -> list[list[int]]:
    """Rows k = 1..n-1 of (a[(i+k) mod n] - a[i]) mod (n+1)."""
    seq = as_sequence(terms)
    n = len(seq)
    return [
        [(seq[(i + k) % n] - seq[i]) % (n + 1) for i in range(n)] for k in range(1, n)
    ]


def is_circular(terms: Sequence[int]) -> bool:
    """True iff every circular difference row is repeat-free mod n+1."""
    seq = as_sequence(terms)
    n = len(seq)
    for k in range(1, n):
        row = [(seq[(i + k) % n] - seq[i]) % (n + 1) for i in range(n)]
        if len(set(row)) != n:
            return False
    return True


def has_shifting_property(terms: Sequence[int]) -> bool:
    """True iff every circular difference row mod n+1 is a rotation of the sequence."""
    seq = as_sequence(terms)
    n = len(seq)
    rotations = {tuple(seq[r:] + seq[:r]) for r in range(n)}
    for row in circular_difference_rows(seq):
        if tuple(row) not in rotations:
            return False
    return True


def welch_sequence(p: int, alpha: int, c: int = 0) -> tuple[int, ...]:
    """The length p-1 sequence alpha^(i+c) mod p, representatives in 1..p-1."""
    if not is_prime(p) or p < 3:
        raise ValueError(f"p must be an odd prime, got {p}")
    if not is_primitive_root(alpha, p):
        raise ValueError(f"{alpha} is not a primitive root mod {p}")
    return tuple(pow(alpha, i + c, p) for i in range(p - 1))


def welch_family(p: int) -> set[tuple[int, ...]]:
    """All welch_sequence(p, alpha, c) over primitive roots alpha and c in [0, p-2]."""
    from .numbers import primitive_roots

    return {
        welch_sequence(p, alpha, c)
        for alpha in primitive_roots(p)
        for c in range(p - 1)
    }


def enumerate_costas(n: int, cap: int = ENUMERATION_CAP) -> Iterator[tuple[int, ...]]:
    """All Costas sequences of length n in lexicographic order.

    Backtracking keeps one seen-set per triangle row and prunes a partial
    sequence as soon as any new difference repeats within its row.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise ValueError(f"length {n} above enumeration cap {cap}")
    yield from _costas_completions(n, [])


def _costas_completions(n: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
    rows = [set() for _ in range(n)]
    seq: list[int] = []
    used = [False] * (n + 1)

    def place(v: int) -> bool:
        i = len(seq)
        new = [v - seq[i - k] for k in range(1, i + 1)]
        for k, d in enumerate(new, start=1):
            if d in rows[k]:
                return False
        for k, d in enumerate(new, start=1):
            rows[k].add(d)
        seq.append(v)
        used[v] = True
        return True

    def unplace():
        v = seq.pop()
        used[v] = False
        i = len(seq)
        for k in range(1, i + 1):
            rows[k].discard(v - seq[i - k])

    for v in prefix:
        if used[v] or not place(v):
            raise ValueError(f"prefix {prefix} is not extendable")

    def walk() -> Iterator[tuple[int, ...]]:
        if len(seq) == n:
            yield tuple(seq)
            return
        for v in range(1, n + 1):
            if not used[v] and place(v):
                yield from walk()
                unplace()

    yield from walk()


def _count_worker(args: tuple[int, int]) -> list[tuple[int, ...]]:
    n, first = args
    return list(_costas_completions(n, [first]))


def enumerate_costas_parallel(n: int, threads: int, cap: int = ENUMERATION_CAP) -> list[tuple[int, ...]]:
    """Same output as enumerate_costas, partitioned by first element."""
    if n > cap:
        raise ValueError(f"length {n} above enumeration cap {cap}")
    if threads <= 1 or n == 1:
        return list(enumerate_costas(n, cap))
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=threads) as pool:
        chunks = pool.map(_count_worker, [(n, first) for first in range(1, n + 1)])
    out: list[tuple[int, ...]] = []
    for chunk in chunks:
        out.extend(chunk)
    return out


def render_grid(terms: Sequence[int]) -> str:
    """Dot matrix of the sequence, origin at the bottom left."""
    seq = as_sequence(terms)
    n = len(seq)
    lines = []
    for value in range(n, 0, -1):
        lines.append(" ".join("1" if seq[i] == value else "." for i in range(n)))
    return "\n".join(lines)
