"""Canonical-form algebra for short partizan games.

Every :class:`Game` handed out by this module is in canonical form and
interned, so two games are equal exactly when they are the same object.
Comparison results and sums are memoized on object identity.
"""

from __future__ import annotations

import functools
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

# canonical games of long integers and up-multiples nest deeply
sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

UPSTAR_BOUND = 64


@functools.total_ordering
@dataclass(frozen=True)
class DyadicRational:
    """The number ``numerator / 2**exponent``, kept fully reduced."""

    numerator: int
    exponent: int = 0

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError("exponent must be non-negative")
        if self.exponent > 0 and self.numerator % 2 == 0:
            raise ValueError(f"{self.numerator}/2^{self.exponent} is not reduced")

    @classmethod
    def from_fraction(cls, x) -> DyadicRational:
        x = Fraction(x)
        q = x.denominator.bit_length() - 1
        if x.denominator != 1 << q:
            raise ValueError(f"{x} is not dyadic")
        return cls(x.numerator, q)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def __lt__(self, other):
        if not isinstance(other, DyadicRational):
            return NotImplemented
        return self.as_fraction() < other.as_fraction()

    def __str__(self):
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/2^{self.exponent}"


class Game:
    """A canonical short game ``{left | right}``.

    Do not instantiate directly; use :func:`make_game` or the helpers
    (:func:`integer`, :func:`number`, :func:`nimber`, ...).
    """

    __slots__ = ("left", "right", "uid", "canonical", "number", "nim", "__weakref__")

    def __init__(self, left: frozenset, right: frozenset, uid: int):
        self.left = left
        self.right = right
        self.uid = uid
        self.canonical = False
        self.number: Optional[Fraction] = None
        self.nim: Optional[int] = None

    def __repr__(self):
        return f"Game({render(self)})"

    def __le__(self, other):
        return leq(self, other)

    def __ge__(self, other):
        return leq(other, self)

    def __lt__(self, other):
        return leq(self, other) and not leq(other, self)

    def __gt__(self, other):
        return leq(other, self) and not leq(self, other)

    def __add__(self, other):
        return add(self, other)

    def __neg__(self):
        return negate(self)

    def __sub__(self, other):
        return add(self, negate(other))


# Intern table: option-set pair -> node. Entries are deterministic functions
# of their keys, so a racing duplicate insert is harmless.
_table: dict[tuple[frozenset, frozenset], Game] = {}


def _node(left: Iterable[Game], right: Iterable[Game]) -> Game:
    key = (frozenset(left), frozenset(right))
    g = _table.get(key)
    if g is None:
        g = _table.setdefault(key, Game(key[0], key[1], len(_table)))
    return g


def _seal(g: Game) -> Game:
    """Mark a node as canonical and fill in its number / nimber tags."""
    if g.canonical:
        return g
    g.canonical = True
    if all(o.number is not None for o in g.left | g.right):
        lo = max((o.number for o in g.left), default=None)
        hi = min((o.number for o in g.right), default=None)
        if lo is None or hi is None or lo < hi:
            g.number = _simplest_between(lo, hi)
    if g.left == g.right and all(o.nim is not None for o in g.left):
        if {o.nim for o in g.left} == set(range(len(g.left))):
            g.nim = len(g.left)
    return g


# ---------------------------------------------------------------------------
# Numbers


def _simplest_between(lo: Optional[Fraction], hi: Optional[Fraction]) -> Fraction:
    """Simplest dyadic strictly between ``lo`` and ``hi`` (None = unbounded)."""
    if (lo is None or lo < 0) and (hi is None or hi > 0):
        return Fraction(0)
    if hi is not None and hi <= 0:
        return -_simplest_between(-hi, None if lo is None else -lo)
    n = int(lo // 1) + 1
    if hi is None or n < hi:
        return Fraction(n)
    denom = 2
    while True:
        p = int(lo * denom // 1) + 1
        if Fraction(p, denom) < hi:
            return Fraction(p, denom)
        denom *= 2


ZERO = _seal(_node((), ()))


# Integers built so far, by sign: _integers[1][n] is n, _integers[-1][n] is -n.
_integers: dict[int, list[Game]] = {1: [ZERO], -1: [ZERO]}


def _integer_game(n: int) -> Game:
    sign = 1 if n >= 0 else -1
    chain = _integers[sign]
    while len(chain) <= abs(n):
        prev = [chain[-1]]
        chain.append(_seal(_node(prev, ()) if sign > 0 else _node((), prev)))
    return chain[abs(n)]


@functools.lru_cache(maxsize=None)
def _number_game(x: Fraction) -> Game:
    if x.denominator == 1:
        return _integer_game(x.numerator)
    step = Fraction(1, x.denominator)
    return _seal(_node([_number_game(x - step)], [_number_game(x + step)]))


def number(x) -> Game:
    """Canonical game of a dyadic rational (int, Fraction or DyadicRational)."""
    if isinstance(x, DyadicRational):
        x = x.as_fraction()
    x = Fraction(x)
    DyadicRational.from_fraction(x)  # rejects non-dyadic input
    return _number_game(x)


def integer(n: int) -> Game:
    return _number_game(Fraction(n))


# ---------------------------------------------------------------------------
# Order


_leq_cache: dict[tuple[int, int], bool] = {}


def leq(g: Game, h: Game) -> bool:
    """``g <= h`` in the usual partial order of games."""
    if g is h:
        return True
    if g.number is not None and h.number is not None:
        return g.number <= h.number
    key = (g.uid, h.uid)
    hit = _leq_cache.get(key)
    if hit is None:
        hit = not any(leq(h, gl) for gl in g.left) and not any(leq(hr, g) for hr in h.right)
        _leq_cache[key] = hit
    return hit


def equal(g: Game, h: Game) -> bool:
    return leq(g, h) and leq(h, g)


# ---------------------------------------------------------------------------
# Construction


def _maximal(options: set[Game]) -> set[Game]:
    return {a for a in options if not any(b is not a and leq(a, b) for b in options)}


def _minimal(options: set[Game]) -> set[Game]:
    return {a for a in options if not any(b is not a and leq(b, a) for b in options)}


def make_game(left: Iterable[Game], right: Iterable[Game]) -> Game:
    """Canonical form of ``{left | right}`` for canonical option games."""
    left, right = set(left), set(right)
    opts = left | right
    if all(o.number is not None for o in opts):
        lo = max((o.number for o in left), default=None)
        hi = min((o.number for o in right), default=None)
        if lo is None or hi is None or lo < hi:
            return _number_game(_simplest_between(lo, hi))

    whole = _node(left, right)
    if whole.canonical:
        return whole
    while True:
        left, right = _maximal(left), _minimal(right)
        changed = False
        new_left: set[Game] = set()
        for a in left:
            rev = next((ar for ar in a.right if leq(ar, whole)), None)
            if rev is None:
                new_left.add(a)
            else:
                new_left |= rev.left
                changed = True
        new_right: set[Game] = set()
        for b in right:
            rev = next((bl for bl in b.left if leq(whole, bl)), None)
            if rev is None:
                new_right.add(b)
            else:
                new_right |= rev.right
                changed = True
        left, right = new_left, new_right
        if not changed:
            break
    return _seal(_node(left, right))


def nimber(n: int) -> Game:
    if n < 0:
        raise ValueError("nimber index must be non-negative")
    return _nimber(n)


@functools.lru_cache(maxsize=None)
def _nimber(n: int) -> Game:
    opts = [_nimber(i) for i in range(n)]
    return _seal(_node(opts, opts))


STAR = nimber(1)
UP = make_game([ZERO], [STAR])
DOWN = make_game([STAR], [ZERO])


# ---------------------------------------------------------------------------
# Arithmetic


_add_cache: dict[tuple[int, int], Game] = {}
_neg_cache: dict[int, Game] = {}


def add(g: Game, h: Game) -> Game:
    """Canonical disjunctive sum."""
    if g is ZERO:
        return h
    if h is ZERO:
        return g
    if g.number is not None and h.number is not None:
        return _number_game(g.number + h.number)
    if g.nim is not None and h.nim is not None:
        return _nimber(g.nim ^ h.nim)
    key = (g.uid, h.uid) if g.uid <= h.uid else (h.uid, g.uid)
    hit = _add_cache.get(key)
    if hit is None:
        left = [add(gl, h) for gl in g.left] + [add(g, hl) for hl in h.left]
        right = [add(gr, h) for gr in g.right] + [add(g, hr) for hr in h.right]
        hit = make_game(left, right)
        _add_cache[key] = hit
    return hit


def negate(g: Game) -> Game:
    if g.number is not None:
        return _number_game(-g.number)
    if g.nim is not None:
        return g
    hit = _neg_cache.get(g.uid)
    if hit is None:
        hit = _seal(_node([negate(r) for r in g.right], [negate(l) for l in g.left]))
        _neg_cache[g.uid] = hit
        _neg_cache[hit.uid] = g
    return hit


def sum_games(games: Iterable[Game]) -> Game:
    total = ZERO
    for g in games:
        total = add(total, g)
    return total


# ---------------------------------------------------------------------------
# Recognition


def as_number(g: Game) -> Optional[DyadicRational]:
    if g.number is None:
        return None
    return DyadicRational.from_fraction(g.number)


def as_nimber(g: Game) -> Optional[int]:
    return g.nim


@functools.lru_cache(maxsize=None)
def up_multiple(n: int) -> Game:
    """``n`` copies of up (negative ``n`` gives down-multiples)."""
    if n == 0:
        return ZERO
    if n < 0:
        return negate(up_multiple(-n))
    return add(up_multiple(n - 1), UP)


def upstar(n: int, k: int) -> Game:
    return add(up_multiple(n), nimber(k))


_upstar_cache: dict[int, Optional[tuple[int, int]]] = {}


def as_upstar(g: Game) -> Optional[tuple[int, int]]:
    """``(n, k)`` with ``g == n.up + *k`` and ``n != 0``, searched within ``UPSTAR_BOUND``."""
    label = _upstar_label(g)
    if label is None or label[0] == 0:
        return None
    return label


def _upstar_label(g: Game) -> Optional[tuple[int, int]]:
    # Every option of n.up + *k is again of that shape, which prunes the search
    # to a handful of candidates near the option labels.
    if g.nim is not None:
        return (0, g.nim)
    if g.number is not None:
        return None
    if g.uid in _upstar_cache:
        return _upstar_cache[g.uid]
    _upstar_cache[g.uid] = None
    labels = []
    for o in g.left | g.right:
        lab = _upstar_label(o)
        if lab is None:
            return None
        labels.append(lab)
    ns = {n for n, _ in labels}
    ks = {k for _, k in labels}
    n_cands = range(max(-UPSTAR_BOUND, min(ns) - 2), min(UPSTAR_BOUND, max(ns) + 2) + 1)
    k_cands = sorted({k ^ j for k in ks for j in (0, 1)} | set(range(max(ks) + 3)))
    result = None
    # cheap filter: n.up + *k is positive for n >= 1 unless n == 1 and k == 1
    gt0 = leq(ZERO, g) and not leq(g, ZERO)
    lt0 = leq(g, ZERO) and not leq(ZERO, g)
    for n in n_cands:
        if n == 0 or (n > 1 and not gt0) or (n < -1 and not lt0):
            continue
        for k in k_cands:
            if k > UPSTAR_BOUND:
                continue
            if upstar(n, k) is g:
                result = (n, k)
                break
        if result:
            break
    _upstar_cache[g.uid] = result
    return result


NUMBER, NIMBER, SWITCH, UPSTAR_FAMILY, OTHER = "Number", "Nimber", "Switch", "UpStarFamily", "Other"


def classify(g: Game) -> str:
    if g.number is not None:
        return NUMBER
    if g.nim is not None:
        return NIMBER
    if len(g.left) == 1 and len(g.right) == 1:
        (a,), (b,) = g.left, g.right
        if a.number is not None and b.number is not None and a.number > b.number:
            return SWITCH
    if as_upstar(g) is not None:
        return UPSTAR_FAMILY
    return OTHER


# ---------------------------------------------------------------------------
# Notation
#
#   value   := number | nimber | upstar | braces
#   number  := int | int "/2^" nat
#   nimber  := "*" | "*" nat
#   upstar  := [nat] ("^" | "v") [nimber]
#   braces  := "{" [value ("," value)*] "|" [value ("," value)*] "}"


def render(g: Game) -> str:
    if g.number is not None:
        return str(DyadicRational.from_fraction(g.number))
    if g.nim is not None:
        return "*" if g.nim == 1 else f"*{g.nim}"
    label = as_upstar(g)
    if label is not None:
        n, k = label
        arrow = "^" if n > 0 else "v"
        mult = "" if abs(n) == 1 else str(abs(n))
        tail = "" if k == 0 else ("*" if k == 1 else f"*{k}")
        return f"{mult}{arrow}{tail}"
    left = ",".join(sorted(render(o) for o in g.left))
    right = ",".join(sorted(render(o) for o in g.right))
    return "{" + left + "|" + right + "}"


class NotationError(ValueError):
    pass


_ATOM = re.compile(
    r"(?P<num>-?\d+(?:/2\^\d+|/\d+)?)(?![\^v\d])"
    r"|(?P<ups>(?P<mult>\d*)(?P<arrow>[\^v])(?:\*(?P<k1>\d*))?)"
    r"|(?P<star>\*(?P<k2>\d*))"
)


def parse_value(text: str) -> Game:
    """Inverse of :func:`render`; also accepts plain fractions like ``3/4``."""
    text = "".join(text.split())
    g, pos = _parse(text, 0)
    if pos != len(text):
        raise NotationError(f"trailing input at {pos}: {text[pos:]!r}")
    return g


def _parse(text: str, pos: int) -> tuple[Game, int]:
    if text.startswith("{", pos):
        pos += 1
        left, pos = _parse_list(text, pos, "|")
        right, pos = _parse_list(text, pos, "}")
        return make_game(left, right), pos
    m = _ATOM.match(text, pos)
    if m is None:
        raise NotationError(f"cannot parse value at {pos}: {text[pos:]!r}")
    if m.group("num"):
        try:
            return number(_num(m.group("num"))), m.end()
        except ValueError as exc:
            raise NotationError(str(exc)) from None
    if m.group("ups"):
        n = int(m.group("mult") or 1)
        if m.group("arrow") == "v":
            n = -n
        k1 = m.group("k1")
        k = 0 if k1 is None else int(k1 or 1)
        return upstar(n, k), m.end()
    k2 = m.group("k2")
    return nimber(int(k2 or 1)), m.end()


def _num(tok: str) -> Fraction:
    if "/2^" in tok:
        p, q = tok.split("/2^")
        return Fraction(int(p), 1 << int(q))
    return Fraction(tok)


def _parse_list(text: str, pos: int, stop: str) -> tuple[list[Game], int]:
    items: list[Game] = []
    if text.startswith(stop, pos):
        return items, pos + 1
    while True:
        g, pos = _parse(text, pos)
        items.append(g)
        if text.startswith(",", pos):
            pos += 1
        elif text.startswith(stop, pos):
            return items, pos + 1
        else:
            raise NotationError(f"expected ',' or {stop!r} at {pos}")
