"""Exhaustive counting and enumeration of pattern-avoiding fillings.

The engine places columns left to right.  Its state is the prefix of placed
rows plus, depending on the counting regime, the remaining row capacities
(fixed content) or the set of still-empty rows (at-least-one-per-row).  A
branch is pruned as soon as the newest column completes an occurrence of a
forbidden pattern (exact, since every occurrence has a rightmost column) or
the remaining capacities can no longer be scheduled into the remaining
columns (rows have deadlines because column heights weakly decrease).

All counts are exact Python integers.
"""

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .core import (
    BadComposition,
    Composition,
    FerrersShape,
    Filling,
    Word,
    format_composition,
    format_patterns,
    format_shape,
    make_composition,
    make_shape,
    validate_pattern,
)
from .matcher import LastColumnChecker, avoids_all

UNCONSTRAINED = "unconstrained"
POSITIVE_ROWS = "positive-rows"


def canonical_patterns(patterns) -> tuple[Word, ...]:
    """Validate, deduplicate and sort a pattern collection."""
    unique = {validate_pattern(p) for p in patterns}
    return tuple(sorted(unique, key=lambda p: (len(p), p)))


def _count_engine(shape, patterns, caps=None, positive=False, first_row=None) -> int:
    heights = shape.heights
    width = shape.width
    rows = shape.rows
    m = shape.n_rows
    checkers = [LastColumnChecker(p) for p in patterns]
    placed: list[int] = []
    remaining = list(caps) if caps is not None else None
    filled = [0] * (m + 1)

    def feasible(done: int) -> bool:
        # Hall condition: rows >= t can only be fed by columns <= rows[t-1].
        need = 0
        for t in range(m, 0, -1):
            if remaining is not None:
                need += remaining[t - 1]
            elif filled[t] == 0:
                need += 1
            if need and need > rows[t - 1] - done:
                return False
        return True

    def rec(j: int) -> int:
        if j == width:
            return 1
        h = heights[j]
        done = j + 1
        total = 0
        if j == 0 and first_row is not None:
            candidates = (first_row,) if first_row <= h else ()
        else:
            candidates = range(1, h + 1)
        for row in candidates:
            if remaining is not None:
                if remaining[row - 1] == 0:
                    continue
                remaining[row - 1] -= 1
            filled[row] += 1
            placed.append(row)
            ok = True
            if remaining is not None or positive:
                ok = feasible(done)
            if ok:
                for checker in checkers:
                    if checker.fires(placed, j, row, h):
                        ok = False
                        break
            if ok:
                total += rec(done)
            placed.pop()
            filled[row] -= 1
            if remaining is not None:
                remaining[row - 1] += 1
        return total

    return rec(0)


def _iter_engine(shape, patterns, caps=None, positive=False) -> Iterator[tuple[int, ...]]:
    heights = shape.heights
    width = shape.width
    rows = shape.rows
    m = shape.n_rows
    checkers = [LastColumnChecker(p) for p in patterns]
    placed: list[int] = []
    remaining = list(caps) if caps is not None else None
    filled = [0] * (m + 1)

    def feasible(done: int) -> bool:
        need = 0
        for t in range(m, 0, -1):
            if remaining is not None:
                need += remaining[t - 1]
            elif filled[t] == 0:
                need += 1
            if need and need > rows[t - 1] - done:
                return False
        return True

    def rec(j: int) -> Iterator[tuple[int, ...]]:
        if j == width:
            yield tuple(placed)
            return
        h = heights[j]
        done = j + 1
        for row in range(1, h + 1):
            if remaining is not None:
                if remaining[row - 1] == 0:
                    continue
                remaining[row - 1] -= 1
            filled[row] += 1
            placed.append(row)
            ok = True
            if remaining is not None or positive:
                ok = feasible(done)
            if ok:
                for checker in checkers:
                    if checker.fires(placed, j, row, h):
                        ok = False
                        break
            if ok:
                yield from rec(done)
            placed.pop()
            filled[row] -= 1
            if remaining is not None:
                remaining[row - 1] += 1

    return rec(0)


def _count_worker(args) -> int:
    shape_rows, patterns, caps, positive, first_row = args
    shape = make_shape(shape_rows)
    return _count_engine(shape, patterns, caps=caps, positive=positive, first_row=first_row)


def _dispatch_count(shape, patterns, caps=None, positive=False, jobs=1) -> int:
    if jobs <= 1:
        return _count_engine(shape, patterns, caps=caps, positive=positive)
    # Split on the first column's row choices; summing the subtree counts is
    # identical to the sequential run.
    first_rows = [
        r for r in range(1, shape.heights[0] + 1) if caps is None or caps[r - 1] > 0
    ]
    if len(first_rows) <= 1:
        return _count_engine(shape, patterns, caps=caps, positive=positive)
    tasks = [(shape.rows, tuple(patterns), caps, positive, r) for r in first_rows]
    with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
        return sum(pool.map(_count_worker, tasks))


def _check_content(shape: FerrersShape, content) -> Composition:
    comp = make_composition(content)
    if len(comp) != shape.n_rows:
        raise BadComposition(
            f"composition has {len(comp)} parts but the shape {shape.n_rows} rows"
        )
    if sum(comp) != shape.width:
        raise BadComposition(
            f"composition sums to {sum(comp)} but the shape has {shape.width} columns"
        )
    return comp


def count_fillings(shape: FerrersShape, content, patterns, jobs: int = 1) -> int:
    """Number of avoiding fillings with exactly content[i] 1's in row i."""
    comp = _check_content(shape, content)
    patterns = canonical_patterns(patterns)
    return _dispatch_count(shape, patterns, caps=list(comp), jobs=jobs)


def count_all_fillings(shape: FerrersShape, patterns, jobs: int = 1) -> int:
    """Number of avoiding fillings with unconstrained row contents."""
    patterns = canonical_patterns(patterns)
    return _dispatch_count(shape, patterns, jobs=jobs)


def count_positive_fillings(shape: FerrersShape, patterns, jobs: int = 1) -> int:
    """Number of avoiding fillings with at least one 1 in every row."""
    if shape.n_rows > shape.width:
        return 0
    patterns = canonical_patterns(patterns)
    return _dispatch_count(shape, patterns, positive=True, jobs=jobs)


def count_words(n: int, m: int, patterns, jobs: int = 1) -> int:
    """Number of avoiding words of length n over the alphabet {1..m}."""
    if n < 1 or m < 1:
        raise BadComposition(f"need positive length and alphabet size, got {n}, {m}")
    return count_all_fillings(make_shape((n,) * m), patterns, jobs=jobs)


def count_words_direct(n: int, m: int, patterns) -> int:
    """Oracle twin of count_words: iterate all m**n words and test each one."""
    from .matcher import word_contains

    patterns = canonical_patterns(patterns)
    total = 0
    for word in product(range(1, m + 1), repeat=n):
        if not any(word_contains(word, x) for x in patterns):
            total += 1
    return total


def brute_count_fillings(shape: FerrersShape, patterns, content=None, positive=False) -> int:
    """Oracle twin of the engine: filter the full product of column choices."""
    patterns = canonical_patterns(patterns)
    comp = _check_content(shape, content) if content is not None else None
    total = 0
    for cols in product(*(range(1, h + 1) for h in shape.heights)):
        if comp is not None or positive:
            counts = [0] * shape.n_rows
            for row in cols:
                counts[row - 1] += 1
            if comp is not None and tuple(counts) != comp:
                continue
            if positive and any(c == 0 for c in counts):
                continue
        if avoids_all(Filling(shape, cols), patterns):
            total += 1
    return total


def enumerate_fillings(
    shape: FerrersShape, patterns, content=None, positive=False
) -> Iterator[Filling]:
    """Stream the avoiding fillings in lexicographic order of col_to_row."""
    patterns = canonical_patterns(patterns)
    caps = None
    if content is not None:
        caps = list(_check_content(shape, content))
    elif positive and shape.n_rows > shape.width:
        return
    for cols in _iter_engine(shape, patterns, caps=caps, positive=positive and content is None):
        yield Filling(shape, cols)


def compositions(total: int, parts: int, positive: bool = True) -> Iterator[Composition]:
    """All compositions of ``total`` into ``parts`` parts, lexicographically."""
    if parts < 1:
        raise BadComposition(f"need at least one part, got {parts}")
    lo = 1 if positive else 0

    def rec(prefix: tuple[int, ...], left: int, k: int) -> Iterator[Composition]:
        if k == 1:
            if left >= lo:
                yield prefix + (left,)
            return
        for v in range(lo, left - lo * (k - 1) + 1):
            yield from rec(prefix + (v,), left - v, k - 1)

    yield from rec((), total, parts)


# --- count records and the persistent result cache -------------------------


def content_text(content) -> str:
    """Canonical text for a content constraint (composition or regime name)."""
    if content == UNCONSTRAINED or content == POSITIVE_ROWS:
        return content
    return format_composition(content)


@dataclass(frozen=True)
class CountRecord:
    """One counted set: shape, content constraint, pattern set, cardinality."""

    shape: FerrersShape
    content: object  # Composition, UNCONSTRAINED, or POSITIVE_ROWS
    patterns: tuple[Word, ...]
    count: int

    def key(self) -> tuple[str, str, str]:
        return (
            format_shape(self.shape),
            content_text(self.content),
            format_patterns(canonical_patterns(self.patterns)) if self.patterns else "",
        )

    def to_json(self) -> dict:
        shape_text, content, patterns = self.key()
        return {"shape": shape_text, "content": content, "patterns": patterns, "count": self.count}


class ResultCache:
    """Append-only JSONL cache of count records, keyed by the text encodings."""

    def __init__(self, path: str):
        self.path = path
        self._known: dict[tuple[str, str, str], int] = {}
        if os.path.exists(path):
            with open(path, "r", encoding="utf-8") as handle:
                for line in handle:
                    line = line.strip()
                    if not line:
                        continue
                    row = json.loads(line)
                    key = (row["shape"], row["content"], row["patterns"])
                    self._known.setdefault(key, row["count"])

    def get(self, key: tuple[str, str, str]):
        return self._known.get(key)

    def add(self, record: CountRecord) -> None:
        key = record.key()
        if key in self._known:
            return
        self._known[key] = record.count
        with open(self.path, "a", encoding="utf-8") as handle:
            handle.write(json.dumps(record.to_json()) + "\n")


def counted(shape: FerrersShape, content, patterns, cache=None, jobs: int = 1) -> CountRecord:
    """Count one set under any regime, consulting/filling the cache if given."""
    patterns = canonical_patterns(patterns)
    record = CountRecord(shape, content, patterns, -1)
    if cache is not None:
        hit = cache.get(record.key())
        if hit is not None:
            return CountRecord(shape, content, patterns, hit)
    if content == UNCONSTRAINED:
        n = count_all_fillings(shape, patterns, jobs=jobs)
    elif content == POSITIVE_ROWS:
        n = count_positive_fillings(shape, patterns, jobs=jobs)
    else:
        n = count_fillings(shape, content, patterns, jobs=jobs)
    record = CountRecord(shape, content, patterns, n)
    if cache is not None:
        cache.add(record)
    return record
