"""Interval witnesses, the syndeticity decision, and cross-base refutation certificates.

The central objects are families of intervals [m*p**(a+b*k), (m+1)*p**(a+b*k))
for k = 0, 1, 2, ...  Such an interval holds exactly the integers whose
canonical base-p representation is the digit word of m followed by a+b*k more
digits, so whether the family uniformly meets or uniformly misses a
recognizable set is read off the length profile of the state reached by m's
digits.  Every returned witness is machine-checkable by finite reachability.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

from .automata import (
    Dfa,
    RecognizableSet,
    complete,
    has_infinite_language,
    iter_elements,
    member,
    minimize,
)
from .errors import (
    FiniteSetError,
    InsufficientDataError,
    PreconditionError,
    RecsetError,
    SearchCapExceededError,
    ValidationError,
)
from .lengths import UltimatePeriod, cofinite_threshold, length_profile, subset_step
from .numeration import (
    DEFAULT_KRONECKER_CAP,
    KroneckerWitness,
    encode,
    kronecker_witness,
    mult_independent,
    verify_kronecker,
)

DEFAULT_K_CHECK = 8
DEFAULT_LENGTH_CAP = 10_000


@dataclass(frozen=True)
class IntervalWitness:
    """Parameters (m, a, b) of a uniformly nonempty or uniformly empty interval family.

    kind="nonempty": every [m*p**(a+b*k), (m+1)*p**(a+b*k)) meets the set.
    kind="empty":    every such interval misses the set.
    `state` is the state reached by the digits of m in the completed canonical
    minimal automaton of the set, which is what makes the witness re-checkable
    by depth-(a+b*k) reachability.
    """

    m: int
    a: int
    b: int
    state: int
    kind: str

    def __post_init__(self):
        if self.m < 1 or self.a < 1 or self.b < 1:
            raise ValidationError("witness parameters m, a, b must all be >= 1")
        if self.kind not in ("nonempty", "empty"):
            raise ValidationError(f"unknown witness kind {self.kind!r}")


@dataclass(frozen=True)
class SyndeticCertificate:
    """Certificate that every interval of length `bound` = 2*base**threshold meets the set.

    `per_state_thresholds` maps each qualifying state (reachable by a digit
    word with nonzero leading digit) to the first length from which all longer
    extensions are accepted; `threshold` is their maximum.
    """

    threshold: int
    bound: int
    per_state_thresholds: dict[int, int]


@dataclass(frozen=True)
class Finite:
    """Verdict: the set is finite, so syndeticity does not apply."""


@dataclass(frozen=True)
class NotSyndetic:
    """Verdict: gaps are unbounded, witnessed by an empty interval family."""

    witness: IntervalWitness


@dataclass(frozen=True)
class Syndetic:
    """Verdict: gaps are bounded by the certified bound."""

    certificate: SyndeticCertificate


SyndeticVerdict = Union[Finite, NotSyndetic, Syndetic]


@dataclass(frozen=True)
class ContradictionCertificate:
    """Proof that two automata over independent bases recognize different sets.

    A provably nonempty base-p interval of the first set sits, by the
    exponent pair `kronecker`, strictly inside a provably empty base-q
    interval of the second set; `element` is a concrete member of the first
    set inside both.
    """

    base_p: int
    base_q: int
    base_p_witness: IntervalWitness  # kind="nonempty", parameters (m, a, b)
    base_q_witness: IntervalWitness  # kind="empty", parameters (n, c, d)
    kronecker: KroneckerWitness
    element: int


class GapScanResult(NamedTuple):
    max_gap: int
    positions: tuple[tuple[int, int], ...]


def _completed_minimal(s: RecognizableSet) -> Dfa:
    """The completed canonical minimal automaton every witness refers to."""
    return complete(minimize(s.dfa))


def _qualifying_states(dfa: Dfa) -> frozenset[int]:
    """States reachable by a path whose first digit is nonzero.

    On a completed automaton these are exactly the states reached by the
    digits of some positive integer; paths of the original automaton that die
    mid-word land in the sink, which therefore qualifies too.
    """
    rows = dfa.rows
    frontier = {rows[dfa.initial][d] for d in range(1, dfa.alphabet_size)
                if d in rows[dfa.initial]}
    seen = set(frontier)
    stack = list(frontier)
    while stack:
        s = stack.pop()
        for t in rows[s].values():
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return frozenset(seen)


def _lex_min_path(rows, p: int, initial: int, layers, t: int, bound):
    """Lexicographically least length-t path from `initial` into layers[0].

    Digits are chosen ascending with exact-depth pruning: a digit is viable
    only if its target can still reach the target set in the remaining steps.
    The first digit is always nonzero.  `bound`, when given, is a digit tuple
    of length t restricting the result to values >= the bound's value; only
    then can backtracking occur.  Returns (value, end_state) or None.
    """
    stack: list[tuple[int, int, int, bool]] = []  # (digit, state, value, still tight)
    resume = -1
    root_tight = bound is not None
    while True:
        depth = len(stack)
        if depth == t:
            return stack[-1][2], stack[-1][1]
        if stack:
            _, state, value, tight = stack[-1]
        else:
            state, value, tight = initial, 0, root_tight
        row = rows[state]
        layer = layers[t - depth - 1]
        lo = 1 if depth == 0 else 0
        if tight:
            lo = max(lo, bound[depth])
        if resume >= 0:
            lo = max(lo, resume)
            resume = -1
        for d in range(lo, p):
            nxt = row.get(d)
            if nxt is not None and nxt in layer:
                stack.append((d, nxt, value * p + d, tight and d == bound[depth]))
                break
        else:
            if not stack:
                return None
            d = stack.pop()[0]
            resume = d + 1


def _ensure_layers(layers, rows, n: int, upto: int) -> None:
    while len(layers) <= upto:
        prev = layers[-1]
        layers.append(frozenset(s for s in range(n)
                                if any(t in prev for t in rows[s].values())))


def _min_value_path(dfa: Dfa, targets, min_value: int,
                    length_cap: int) -> tuple[int, int]:
    """Smallest integer >= min_value whose canonical digit path ends in `targets`.

    Lengths are searched in increasing order; within a length the
    lexicographic minimum is the numeric minimum.  Returns (value, end_state).
    """
    p = dfa.alphabet_size
    rows = dfa.rows
    layers = [frozenset(targets)]
    bound = encode(min_value, p).digits
    first_len = len(bound)
    for t in range(first_len, first_len + length_cap + 1):
        _ensure_layers(layers, rows, dfa.state_count, t - 1)
        found = _lex_min_path(rows, p, dfa.initial, layers, t,
                              bound if t == first_len else None)
        if found is not None:
            return found
    raise SearchCapExceededError(
        f"no qualifying integer found within {length_cap} digit lengths", cap=length_cap)


def _lex_min_accepted_value(dfa: Dfa, state: int, depth: int) -> int:
    """Value of the least word of the given length accepted from `state`."""
    layers = [frozenset(dfa.finals)]
    _ensure_layers(layers, dfa.rows, dfa.state_count, depth - 1)
    # leading zeros are fine here: this is an extension word, not a number
    rows = dfa.rows
    value = 0
    current = state
    for r in range(depth, 0, -1):
        row = rows[current]
        for d in range(dfa.alphabet_size):
            nxt = row.get(d)
            if nxt is not None and nxt in layers[r - 1]:
                value = value * dfa.alphabet_size + d
                current = nxt
                break
        else:
            raise RecsetError("internal: no accepted extension at certified depth")
    return value


def _first_bit_past_preperiod(profile: UltimatePeriod, wanted: int) -> int:
    """Least n strictly past the preperiod with bit(n) == wanted."""
    for n in range(profile.preperiod + 1, profile.preperiod + profile.period + 1):
        if profile.bit(n) == wanted:
            return n
    raise RecsetError("internal: requested bit value does not occur in the cycle")


def verify_interval_witness(s: RecognizableSet, w: IntervalWitness, *,
                            k_check: int = DEFAULT_K_CHECK) -> bool:
    """Re-check a witness against its set by finite reachability.

    The digits of m must reach w.state in the completed canonical minimal
    automaton, and for each k = 0..k_check the states reachable from w.state
    in exactly a+b*k steps must meet the finals (nonempty kind) or avoid them
    (empty kind).
    """
    if w.m < 1 or w.a < 1 or w.b < 1:
        return False
    dfa = _completed_minimal(s)
    end = dfa.walk(dfa.initial, encode(w.m, s.base))
    if end != w.state:
        return False
    want = w.kind == "nonempty"
    current: frozenset[int] = frozenset({w.state})
    for _ in range(w.a):
        current = subset_step(dfa, current)
    for k in range(k_check + 1):
        if bool(current & dfa.finals) != want:
            return False
        if k < k_check:
            for _ in range(w.b):
                current = subset_step(dfa, current)
    return True


def nonempty_interval_witness(s: RecognizableSet, m_min: int = 1, *,
                              k_check: int = DEFAULT_K_CHECK,
                              length_cap: int = DEFAULT_LENGTH_CAP) -> IntervalWitness:
    """Witness that the intervals [m*p**(a+b*k), (m+1)*p**(a+b*k)) all meet the set.

    m is the smallest integer >= m_min whose digit path ends in a state with
    infinitely many accepted lengths; a is the least accepted length past that
    state's preperiod and b its period.  The witness is re-verified for
    k = 0..k_check before being returned.
    """
    if m_min < 1:
        raise PreconditionError(f"m_min must be >= 1, got {m_min}")
    if not has_infinite_language(s.dfa):
        raise FiniteSetError("the set is finite: no nonempty interval family exists")
    dfa = _completed_minimal(s)
    qualifying = _qualifying_states(dfa)
    profiles = {st: length_profile(dfa, st) for st in qualifying}
    targets = frozenset(st for st in qualifying if any(profiles[st].cycle_bits))
    value, state = _min_value_path(dfa, targets, m_min, length_cap)
    prof = profiles[state]
    a = _first_bit_past_preperiod(prof, 1)
    w = IntervalWitness(value, a, prof.period, state, "nonempty")
    assert verify_interval_witness(s, w, k_check=k_check)
    return w


def _empty_witness_on(dfa: Dfa, profiles: dict[int, UltimatePeriod],
                      coinfinite: frozenset[int], s: RecognizableSet,
                      k_check: int, length_cap: int) -> IntervalWitness:
    value, state = _min_value_path(dfa, coinfinite, 1, length_cap)
    prof = profiles[state]
    a = _first_bit_past_preperiod(prof, 0)
    w = IntervalWitness(value, a, prof.period, state, "empty")
    assert verify_interval_witness(s, w, k_check=k_check)
    return w


def empty_interval_witness(s: RecognizableSet, *,
                           k_check: int = DEFAULT_K_CHECK,
                           length_cap: int = DEFAULT_LENGTH_CAP) -> IntervalWitness | None:
    """Witness that the intervals [m*p**(a+b*k), (m+1)*p**(a+b*k)) all miss the set.

    Exists iff some qualifying state of the completed canonical minimal
    automaton misses infinitely many lengths; returns None when every
    qualifying state's length set is cofinite (then no such family exists).
    """
    if not has_infinite_language(s.dfa):
        raise FiniteSetError("the set is finite: use a direct scan instead")
    dfa = _completed_minimal(s)
    qualifying = _qualifying_states(dfa)
    profiles = {st: length_profile(dfa, st) for st in qualifying}
    coinfinite = frozenset(st for st in qualifying
                           if not all(profiles[st].cycle_bits))
    if not coinfinite:
        return None
    return _empty_witness_on(dfa, profiles, coinfinite, s, k_check, length_cap)


def syndetic_decide(s: RecognizableSet, *,
                    k_check: int = DEFAULT_K_CHECK,
                    length_cap: int = DEFAULT_LENGTH_CAP) -> SyndeticVerdict:
    """Decide whether the set has bounded gaps between consecutive elements.

    Finite sets get the Finite verdict.  Otherwise every qualifying state of
    the completed canonical minimal automaton is profiled:

    - some state misses infinitely many lengths -> NotSyndetic, with an empty
      interval family whose interval lengths grow without bound (the set is
      infinite, so elements exist beyond every such interval and the gaps are
      unbounded);
    - all states eventually accept every length -> Syndetic with C the largest
      per-state threshold: every positive n then has an element of the set in
      [n*p**C, (n+1)*p**C), so any interval of length 2*p**C meets the set.
    """
    if not has_infinite_language(s.dfa):
        return Finite()
    dfa = _completed_minimal(s)
    qualifying = _qualifying_states(dfa)
    profiles = {st: length_profile(dfa, st) for st in qualifying}
    coinfinite = frozenset(st for st in qualifying
                           if not all(profiles[st].cycle_bits))
    if coinfinite:
        return NotSyndetic(_empty_witness_on(dfa, profiles, coinfinite, s,
                                             k_check, length_cap))
    thresholds = {st: cofinite_threshold(profiles[st]) for st in sorted(qualifying)}
    c = max(thresholds.values(), default=0)
    return Syndetic(SyndeticCertificate(c, 2 * s.base**c, thresholds))


def gap_scan(s: RecognizableSet, horizon: int) -> GapScanResult:
    """Maximum gap between consecutive elements up to `horizon`, with the pairs attaining it."""
    if horizon < 1:
        raise PreconditionError(f"horizon must be >= 1, got {horizon}")
    best = 0
    positions: list[tuple[int, int]] = []
    prev = None
    count = 0
    for x in iter_elements(s):
        if x > horizon:
            break
        count += 1
        if prev is not None:
            gap = x - prev
            if gap > best:
                best = gap
                positions = [(prev, x)]
            elif gap == best:
                positions.append((prev, x))
        prev = x
    if count < 2:
        raise InsufficientDataError(
            f"fewer than two elements are <= {horizon}; no gaps to report")
    return GapScanResult(best, tuple(positions))


def cross_base_refute(set_p: RecognizableSet, set_q: RecognizableSet, *,
                      k_check: int = DEFAULT_K_CHECK,
                      cap: int = DEFAULT_KRONECKER_CAP,
                      length_cap: int = DEFAULT_LENGTH_CAP) -> ContradictionCertificate | None:
    """Nested-interval proof that two automata recognize different sets, if one exists this way.

    The second set must admit an empty interval family (n, c, d); the first,
    being infinite, admits a nonempty family (m, a, b) with m > n, and a
    suitable exponent pair (K, L) nests the nonempty base-p interval inside
    the empty base-q interval.  The certificate carries a concrete element of
    the first set inside both intervals.

    Returns None when the second automaton has no empty interval family;
    that is NOT a proof that the sets are equal, only that no refutation of
    this shape exists.
    """
    p, q = set_p.base, set_q.base
    verdict = mult_independent(p, q)
    if not verdict.independent:
        wk, wl = verdict.dependence_witness
        raise PreconditionError(
            f"bases {p} and {q} are multiplicatively dependent: {p}^{wk} = {q}^{wl}")
    if not has_infinite_language(set_p.dfa) or not has_infinite_language(set_q.dfa):
        raise FiniteSetError("both sets must be infinite")
    ew = empty_interval_witness(set_q, k_check=k_check, length_cap=length_cap)
    if ew is None:
        return None
    nw = nonempty_interval_witness(set_p, m_min=ew.m + 1,
                                   k_check=k_check, length_cap=length_cap)
    kw = kronecker_witness(nw.m, ew.m, nw.a, nw.b, ew.a, ew.b, p, q, cap=cap)
    depth = nw.a + nw.b * kw.k
    dfa_p = _completed_minimal(set_p)
    element = nw.m * p**depth + _lex_min_accepted_value(dfa_p, nw.state, depth)
    cert = ContradictionCertificate(p, q, nw, ew, kw, element)
    assert verify_contradiction(cert, set_p, set_q)
    return cert


def verify_contradiction(cert: ContradictionCertificate,
                         set_p: RecognizableSet, set_q: RecognizableSet) -> bool:
    """Exact re-verification of every claim a contradiction certificate makes."""
    p, q = set_p.base, set_q.base
    if (cert.base_p, cert.base_q) != (p, q):
        return False
    nw, ew, kw = cert.base_p_witness, cert.base_q_witness, cert.kronecker
    if nw.kind != "nonempty" or ew.kind != "empty" or not ew.m < nw.m:
        return False
    if not mult_independent(p, q).independent:
        return False
    if not verify_kronecker(kw, nw.m, ew.m, nw.a, nw.b, ew.a, ew.b, p, q):
        return False
    lo_p = nw.m * p ** (nw.a + nw.b * kw.k)
    hi_p = (nw.m + 1) * p ** (nw.a + nw.b * kw.k)
    lo_q = ew.m * q ** (ew.a + ew.b * kw.ell)
    hi_q = (ew.m + 1) * q ** (ew.a + ew.b * kw.ell)
    if not (lo_q <= lo_p and hi_p <= hi_q):
        return False
    if not lo_p <= cert.element < hi_p:
        return False
    if not member(set_p, cert.element) or member(set_q, cert.element):
        return False
    if not verify_interval_witness(set_p, nw) or not verify_interval_witness(set_q, ew):
        return False
    # the specific empty interval that swallows the element, checked directly
    dfa_q = _completed_minimal(set_q)
    current: frozenset[int] = frozenset({ew.state})
    for _ in range(ew.a + ew.b * kw.ell):
        current = subset_step(dfa_q, current)
    return not current & dfa_q.finals
