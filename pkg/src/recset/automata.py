"""Deterministic finite automata over digit alphabets and the integer sets they recognize.

A Dfa may be partial: a missing transition rejects immediately.  Completion
(adding a single non-final sink) is an explicit internal step where a total
transition function is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import islice
from typing import Iterator

from .errors import ValidationError
from .numeration import DigitWord, encode


@dataclass(frozen=True)
class Dfa:
    """A deterministic automaton over digits 0..alphabet_size-1.

    States are the integers 0..state_count-1.  `transitions` maps
    (state, digit) to a state and may omit pairs; omitted pairs reject.
    """

    alphabet_size: int
    state_count: int
    initial: int
    finals: frozenset[int]
    transitions: dict[tuple[int, int], int]

    def __post_init__(self):
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(self, "transitions", dict(self.transitions))
        if self.alphabet_size < 2:
            raise ValidationError(f"alphabet size must be >= 2, got {self.alphabet_size}")
        if self.state_count < 1:
            raise ValidationError(f"state count must be >= 1, got {self.state_count}")
        if not 0 <= self.initial < self.state_count:
            raise ValidationError(f"initial state {self.initial} out of range")
        for s in self.finals:
            if not 0 <= s < self.state_count:
                raise ValidationError(f"final state {s} out of range")
        for (s, d), t in self.transitions.items():
            if not 0 <= s < self.state_count or not 0 <= t < self.state_count:
                raise ValidationError(f"transition ({s},{d})->{t} references a missing state")
            if not 0 <= d < self.alphabet_size:
                raise ValidationError(f"transition digit {d} out of range")

    @cached_property
    def rows(self) -> tuple[dict[int, int], ...]:
        """Per-state view of the transition map: rows[s][digit] -> state."""
        rows: list[dict[int, int]] = [{} for _ in range(self.state_count)]
        for (s, d), t in self.transitions.items():
            rows[s][d] = t
        return tuple(rows)

    @property
    def is_complete(self) -> bool:
        return len(self.transitions) == self.state_count * self.alphabet_size

    def step(self, state: int, digit: int) -> int | None:
        return self.transitions.get((state, digit))

    def walk(self, state: int, word) -> int | None:
        """Follow a digit word; None as soon as a transition is missing."""
        for d in word:
            if not 0 <= d < self.alphabet_size:
                raise ValidationError(f"digit {d} out of range for alphabet size {self.alphabet_size}")
            nxt = self.transitions.get((state, d))
            if nxt is None:
                return None
            state = nxt
        return state


def empty_dfa(alphabet_size: int) -> Dfa:
    """Canonical automaton of the empty language: one non-final state, no transitions."""
    return Dfa(alphabet_size, 1, 0, frozenset(), {})


def accepts(dfa: Dfa, word) -> bool:
    """True iff the word drives the automaton from its initial state into a final state."""
    if isinstance(word, DigitWord) and word.base != dfa.alphabet_size:
        raise ValidationError(f"word base {word.base} does not match alphabet size {dfa.alphabet_size}")
    end = dfa.walk(dfa.initial, word)
    return end is not None and end in dfa.finals


def _reachable(dfa: Dfa) -> set[int]:
    seen = {dfa.initial}
    stack = [dfa.initial]
    while stack:
        s = stack.pop()
        for t in dfa.rows[s].values():
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return seen


def _coaccessible(dfa: Dfa) -> set[int]:
    preds: list[list[int]] = [[] for _ in range(dfa.state_count)]
    for (s, _d), t in dfa.transitions.items():
        preds[t].append(s)
    seen = set(dfa.finals)
    stack = list(dfa.finals)
    while stack:
        s = stack.pop()
        for r in preds[s]:
            if r not in seen:
                seen.add(r)
                stack.append(r)
    return seen


def is_empty_language(dfa: Dfa) -> bool:
    """True iff the automaton accepts no word at all."""
    return not (_reachable(dfa) & dfa.finals)


def trim(dfa: Dfa) -> Dfa:
    """Keep exactly the states that are reachable from the initial state and can reach a final state.

    The language is unchanged.  When nothing survives, the canonical empty
    automaton is returned.  Surviving states keep their relative order, so an
    already-trim automaton comes back unchanged.
    """
    keep = _reachable(dfa) & _coaccessible(dfa)
    if dfa.initial not in keep:
        return empty_dfa(dfa.alphabet_size)
    remap = {old: new for new, old in enumerate(sorted(keep))}
    transitions = {(remap[s], d): remap[t]
                   for (s, d), t in dfa.transitions.items()
                   if s in keep and t in keep}
    finals = frozenset(remap[s] for s in dfa.finals if s in keep)
    return Dfa(dfa.alphabet_size, len(keep), remap[dfa.initial], finals, transitions)


def complete(dfa: Dfa) -> Dfa:
    """Total version of the automaton; adds one non-final sink if any transition is missing."""
    if dfa.is_complete:
        return dfa
    sink = dfa.state_count
    transitions = dict(dfa.transitions)
    for s in range(dfa.state_count + 1):
        for d in range(dfa.alphabet_size):
            transitions.setdefault((s, d), sink)
    return Dfa(dfa.alphabet_size, dfa.state_count + 1, dfa.initial, dfa.finals, transitions)


def _bfs_renumber(dfa: Dfa) -> Dfa:
    """Renumber states breadth-first from the initial state, digits ascending.

    Assumes every state is reachable (true after trim); the result is the
    canonical layout, so language-equal minimal automata become structurally
    identical.
    """
    order = {dfa.initial: 0}
    queue = [dfa.initial]
    qi = 0
    while qi < len(queue):
        s = queue[qi]
        qi += 1
        row = dfa.rows[s]
        for d in range(dfa.alphabet_size):
            t = row.get(d)
            if t is not None and t not in order:
                order[t] = len(order)
                queue.append(t)
    assert len(order) == dfa.state_count, "renumbering requires a fully reachable automaton"
    transitions = {(order[s], d): order[t] for (s, d), t in dfa.transitions.items()}
    return Dfa(dfa.alphabet_size, dfa.state_count, 0,
               frozenset(order[s] for s in dfa.finals), transitions)


def minimize(dfa: Dfa) -> Dfa:
    """Canonical minimal trimmed automaton of the language.

    Partition refinement runs on the completed automaton, the dead class is
    trimmed away again, and states are renumbered breadth-first.  Because the
    result is canonical, two automata recognize the same language iff their
    minimized forms are equal.
    """
    trimmed = trim(dfa)
    if not trimmed.finals:
        return trimmed  # canonical empty automaton
    c = complete(trimmed)
    p, n = c.alphabet_size, c.state_count
    rows = c.rows
    block = [0 if s in c.finals else 1 for s in range(n)]
    nblocks = len(set(block))
    while True:
        sigs: dict = {}
        new = [0] * n
        for s in range(n):
            key = (block[s], tuple(block[rows[s][d]] for d in range(p)))
            if key not in sigs:
                sigs[key] = len(sigs)
            new[s] = sigs[key]
        if len(sigs) == nblocks:
            block = new
            break
        block, nblocks = new, len(sigs)
    transitions = {}
    for s in range(n):
        for d in range(p):
            transitions[(block[s], d)] = block[rows[s][d]]
    quotient = Dfa(p, nblocks, block[c.initial],
                   frozenset(block[s] for s in c.finals), transitions)
    return _bfs_renumber(trim(quotient))


_PRODUCT_MODES = {
    "union": lambda x, y: x or y,
    "intersection": lambda x, y: x and y,
    "difference": lambda x, y: x and not y,
}


def product(d1: Dfa, d2: Dfa, mode: str) -> Dfa:
    """Boolean combination of two languages over the same digit alphabet.

    Both inputs are completed first, then the reachable pair automaton is
    built; `mode` is one of "union", "intersection", "difference".
    """
    if mode not in _PRODUCT_MODES:
        raise ValidationError(f"unknown product mode {mode!r}")
    if d1.alphabet_size != d2.alphabet_size:
        raise ValidationError(
            f"alphabet size mismatch: {d1.alphabet_size} vs {d2.alphabet_size}")
    combine = _PRODUCT_MODES[mode]
    c1, c2 = complete(d1), complete(d2)
    p = c1.alphabet_size
    start = (c1.initial, c2.initial)
    index = {start: 0}
    queue = [start]
    qi = 0
    transitions = {}
    while qi < len(queue):
        pair = queue[qi]
        src = index[pair]
        qi += 1
        s1, s2 = pair
        for d in range(p):
            nxt = (c1.rows[s1][d], c2.rows[s2][d])
            if nxt not in index:
                index[nxt] = len(index)
                queue.append(nxt)
            transitions[(src, d)] = index[nxt]
    finals = frozenset(i for (s1, s2), i in index.items()
                       if combine(s1 in c1.finals, s2 in c2.finals))
    return Dfa(p, len(index), 0, finals, transitions)


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    """Language equality, decided by emptiness of both set differences."""
    if d1.alphabet_size != d2.alphabet_size:
        raise ValidationError(
            f"alphabet size mismatch: {d1.alphabet_size} vs {d2.alphabet_size}")
    return (is_empty_language(product(d1, d2, "difference"))
            and is_empty_language(product(d2, d1, "difference")))


def has_infinite_language(dfa: Dfa) -> bool:
    """True iff the automaton accepts infinitely many words.

    Equivalent to the trimmed automaton containing a cycle, checked with a
    topological sort.
    """
    t = trim(dfa)
    if not t.finals:
        return False
    n = t.state_count
    succ = [set(t.rows[s].values()) for s in range(n)]
    indeg = [0] * n
    for s in range(n):
        for v in succ[s]:
            indeg[v] += 1
    queue = [s for s in range(n) if indeg[s] == 0]
    seen = 0
    while queue:
        s = queue.pop()
        seen += 1
        for v in succ[s]:
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    return seen < n


def canonical_words_dfa(alphabet_size: int) -> Dfa:
    """The language of words with no leading zero (the empty word included)."""
    transitions = {(0, d): 1 for d in range(1, alphabet_size)}
    transitions.update({(1, d): 1 for d in range(alphabet_size)})
    return Dfa(alphabet_size, 2, 0, frozenset({0, 1}), transitions)


def restrict_to_canonical(dfa: Dfa) -> Dfa:
    """Intersect with the canonical-word language and trim the result."""
    return trim(product(dfa, canonical_words_dfa(dfa.alphabet_size), "intersection"))


@dataclass(frozen=True)
class RecognizableSet:
    """A set of natural numbers recognized by a digit automaton.

    The automaton accepts the canonical (no leading zero) representations of
    the positive elements.  Membership of zero is carried by `contains_zero`;
    the automaton's acceptance of the empty word is deliberately ignored, so
    zero never needs an ambiguous empty representation.

    Construction rejects automata that accept any word with a leading zero;
    use `restrict_to_canonical` first, or lenient document loading, to repair
    such automata.
    """

    dfa: Dfa
    contains_zero: bool = False

    def __post_init__(self):
        target = self.dfa.step(self.dfa.initial, 0)
        if target is not None and target in _coaccessible(self.dfa):
            raise ValidationError(
                "automaton accepts a word with a leading zero; "
                "apply restrict_to_canonical() or load leniently")

    @property
    def base(self) -> int:
        return self.dfa.alphabet_size


def member(s: RecognizableSet, n: int) -> bool:
    """Is n an element of the set?"""
    if n < 0:
        raise ValidationError(f"set membership is defined for naturals, got {n}")
    if n == 0:
        return s.contains_zero
    return accepts(s.dfa, encode(n, s.base))


def _extend_layers(layers: list[frozenset[int]], rows, n: int) -> None:
    prev = layers[-1]
    layers.append(frozenset(s for s in range(n)
                            if any(t in prev for t in rows[s].values())))


def _values_of_length(rows, p: int, initial: int, layers, t: int) -> list[int]:
    """All accepted values with exactly t digits, ascending.

    Forward value propagation pruned by exact-depth coreachability layers, so
    the work stays proportional to the number of surviving prefixes.
    """
    allowed = layers[t - 1]
    buckets: dict[int, list[int]] = {}
    for d in range(1, p):
        nxt = rows[initial].get(d)
        if nxt is not None and nxt in allowed:
            buckets.setdefault(nxt, []).append(d)
    for r in range(t - 1, 0, -1):
        allowed = layers[r - 1]
        merged: dict[int, list[int]] = {}
        for s, vals in buckets.items():
            for d, nxt in rows[s].items():
                if nxt in allowed:
                    merged.setdefault(nxt, []).extend(v * p + d for v in vals)
        buckets = merged
        if not buckets:
            return []
    out: list[int] = []
    for vals in buckets.values():
        out.extend(vals)
    out.sort()
    return out


def iter_elements(s: RecognizableSet) -> Iterator[int]:
    """Yield the elements of the set in increasing order.

    Layered radix traversal: word lengths ascend and values are sorted within
    each length, which coincides with numeric order because canonical words
    of length t occupy [p**(t-1), p**t).
    """
    if s.contains_zero:
        yield 0
    dfa = trim(s.dfa)
    if not dfa.finals:
        return
    p = dfa.alphabet_size
    rows = dfa.rows
    # accepted words in an acyclic trimmed automaton are shorter than the state count
    max_len = None if has_infinite_language(dfa) else dfa.state_count - 1
    layers: list[frozenset[int]] = [frozenset(dfa.finals)]
    t = 1
    while max_len is None or t <= max_len:
        while len(layers) <= t - 1:
            _extend_layers(layers, rows, dfa.state_count)
        yield from _values_of_length(rows, p, dfa.initial, layers, t)
        t += 1


def enumerate_elements(s: RecognizableSet, limit: int) -> list[int]:
    """The first `limit` elements in increasing order (all of them if fewer exist)."""
    if limit < 0:
        raise ValidationError(f"limit must be >= 0, got {limit}")
    return list(islice(iter_elements(s), limit))


def right_dense(s: RecognizableSet) -> bool:
    """Does every digit word extend to a zero-padded representation of an element?

    Built on the automaton of the zero-padded language (a fresh start state
    absorbs leading zeros, then hands over to the set's automaton): after
    completion, the language is right dense iff every reachable state can
    still reach a final state.
    """
    dfa = s.dfa
    p = dfa.alphabet_size
    pad = dfa.state_count  # fresh state that reads leading zeros
    transitions = dict(dfa.transitions)
    transitions[(pad, 0)] = pad
    for d in range(1, p):
        t = dfa.step(dfa.initial, d)
        if t is not None:
            transitions[(pad, d)] = t
    finals = set(dfa.finals)
    if s.contains_zero:
        finals.add(pad)
    padded = complete(Dfa(p, dfa.state_count + 1, pad, frozenset(finals), transitions))
    return _reachable(padded) <= _coaccessible(padded)


def example1() -> RecognizableSet:
    """The built-in right-dense-but-gappy set over base 2.

    Its elements are exactly the integers whose binary representation has odd
    length, i.e. the union of the blocks [4**i, 2*4**i).  Every digit word
    extends to a zero-padded representation of an element, yet the gaps
    [2*4**i, 4**(i+1)) grow without bound, so the set is not syndetic.
    """
    dfa = Dfa(2, 3, 0, frozenset({1}),
              {(0, 1): 1, (1, 0): 2, (1, 1): 2, (2, 0): 1, (2, 1): 1})
    return RecognizableSet(dfa, contains_zero=False)
