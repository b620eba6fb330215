"""Mode-operator calculus on top of a completed product table.

The operations here are thin, well-named entry points over the engine
recursions: the derivation D, single-mode application, element modes
(v)_t of composite states, and expanded commutators of mode operators.
All of them take the completed table (`FullTable`) produced by
`complete_table` and never mutate it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import SpanBuilder
from .terms import (
    ONE,
    VACUUM,
    binom,
    state_iadd,
    state_weight,
    word_sort_key,
    word_weight,
)

_VAC = {(): ONE}


def apply_D(s: dict) -> dict:
    """The derivation D, acting by [D, u_n] = -n u_{n-1} and D|vac> = 0.

    Raises the weight of every homogeneous component by one.
    """
    out: dict = {}
    for word, coeff in s.items():
        for p, (i, m) in enumerate(word):
            if m == 0:
                continue
            nw = word[:p] + ((i, m - 1),) + word[p + 1:]
            state_iadd(out, {nw: coeff * Fraction(-m)})
    return out


def apply_mode(op, s: dict, table, strategy=None) -> dict:
    """u^i_m . s, reduced to normal form in the vacuum convention."""
    return table.engine.apply_mode(op, s, strategy)


def element_mode(v: dict, t: int, target: dict, table,
                 convention=VACUUM, strategy=None) -> dict:
    """(v)_t . target for a composite state v, reduced to normal form."""
    return table.engine.element_mode(v, t, target, convention, strategy)


@dataclass(frozen=True)
class OpExpansion:
    """A finite operator-valued sum  sum_r  c_r (w_r)_{t_r}.

    Each term is (coefficient, state word, outer mode); all terms share the
    operator weight `weight`.  Evaluating the expansion against a state is
    `evaluate`.  Words here are pure operators -- they are not applied to
    the vacuum until evaluation time.
    """

    terms: tuple
    weight: int

    def __bool__(self) -> bool:
        return bool(self.terms)


def commutator(op_a, op_b, table) -> OpExpansion:
    """[u^i_m, u^j_n] = sum_{k >= 0} C(m, k) (u^i_k u^j)_{m+n-k}."""
    (i, m), (j, n) = op_a, op_b
    weights = table.engine.weights
    terms = []
    for k in range(weights[i] + weights[j]):
        c = binom(m, k)
        if not c:
            continue
        for word, cw in table.get(i, j, k).items():
            terms.append((Fraction(c) * cw, word, m + n - k))
    terms.sort(key=lambda t: (-t[2], word_sort_key(t[1], weights)))
    opw = (weights[i] - m - 1) + (weights[j] - n - 1)
    return OpExpansion(terms=tuple(terms), weight=opw)


def evaluate(exp: OpExpansion, target: dict, table,
             convention=VACUUM, strategy=None) -> dict:
    """Apply an OpExpansion to a state, term by term, and normalize."""
    out: dict = {}
    for c, word, t in exp.terms:
        state_iadd(out, table.engine.element_mode({word: ONE}, t, target,
                                                  convention, strategy), c)
    return out


def generated_span(states, table, max_weight: int) -> dict:
    """Weight-by-weight span of everything reachable from `states`.

    Reachable means: repeated application of creation modes u^i_{-n}
    (n >= 1) and re-embeddings v |-> (v)_{-s}|vac> (s >= 2), the two
    moves that never produce a new top-level generator.  Returns a dict
    mapping each weight <= max_weight to a SpanBuilder over that graded
    piece.  States already in the span are not expanded twice, so the
    construction is linear in the dimension of the answer.
    """
    eng = table.engine
    weights = eng.weights
    spans = {w: SpanBuilder(lambda wd: word_sort_key(wd, weights))
             for w in range(max_weight + 1)}
    frontier = {w: [] for w in range(max_weight + 1)}
    for x in states:
        if not x:
            continue
        wx = state_weight(x, weights)
        if wx <= max_weight and spans[wx].add(x):
            frontier[wx].append(x)
    for w in range(max_weight + 1):
        for x in frontier[w]:
            for i in range(len(weights)):
                n = 1
                while w + weights[i] + n - 1 <= max_weight:
                    nw = w + weights[i] + n - 1
                    y = eng.apply_mode((i, -n), x)
                    if y and spans[nw].add(y):
                        frontier[nw].append(y)
                    n += 1
            s = 2
            while w + s - 1 <= max_weight:
                nw = w + s - 1
                y = eng.element_mode(x, -s, _VAC, VACUUM)
                if y and spans[nw].add(y):
                    frontier[nw].append(y)
                s += 1
    return spans
