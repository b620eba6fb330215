"""Top-level algebra of a presentation: products, images, and relations.

For a state a of weight h, o(a) = a_{h-1} is the unique mode that maps the
weight-0 subspace of any graded module to itself.  The images o(u^i) of the
generators generate an associative algebra; this module computes that
algebra as a presentation: polynomial generators x_i = o(u^i), the bracket
relations

    [x_i, x_j] = sum_{k >= 0} C(wt u^i - 1, k) o(R(i, j, k)),

and the extra relations obtained by closing a set of seed states (singular
vectors, Jacobi defects) under nonnegative modes and projecting with o.

`zhu_image` computes o(s) by expanding (s)_{wt s - 1} against the top-level
convention, where a word dies as soon as a right suffix would produce
negative weight; the surviving irreducible words consist of zero-weight
modes only and are read off as monomials.  `relation_closure` walks states
u^{i_1}_{n_1} ... u^{i_r}_{n_r} a with all n >= 0, filters the ones whose
top-level contribution is already forced by known states, and collects the
nonzero images that are not yet in the generated ideal.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .engine import FullTable
from .linalg import SpanBuilder
from .terms import (
    ONE,
    TOP_LEVEL,
    VACUUM,
    ZERO,
    binom,
    scalar_to_string,
    state_iadd,
    state_weight,
    word_weight,
)
from .va_calculus import generated_span

log = logging.getLogger("zhuforge.zhu")


def mono_key(mono):
    """Graded-lexicographic sort key for monomials (tuples of indices)."""
    return (len(mono), mono)


class NCPoly:
    """A polynomial in noncommuting generators x_0, ..., x_{l-1}.

    Coefficients are Fractions, monomials are tuples of generator indices,
    the empty tuple is the unit.  Instances behave as values: arithmetic
    returns new objects and never mutates.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        cleaned: dict = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for mono, c in items:
                mono = tuple(mono)
                c = Fraction(c)
                if not c:
                    continue
                nc = cleaned.get(mono, ZERO) + c
                if nc:
                    cleaned[mono] = nc
                else:
                    cleaned.pop(mono, None)
        self.coeffs = cleaned

    @classmethod
    def term(cls, mono, coeff=1) -> "NCPoly":
        out = cls()
        c = Fraction(coeff)
        if c:
            out.coeffs[tuple(mono)] = c
        return out

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, NCPoly) and self.coeffs == other.coeffs

    __hash__ = None

    def degree(self) -> int:
        return max((len(m) for m in self.coeffs), default=-1)

    def __add__(self, other) -> "NCPoly":
        out = NCPoly()
        out.coeffs = dict(self.coeffs)
        for mono, c in other.coeffs.items():
            nc = out.coeffs.get(mono, ZERO) + c
            if nc:
                out.coeffs[mono] = nc
            else:
                out.coeffs.pop(mono, None)
        return out

    def __neg__(self) -> "NCPoly":
        out = NCPoly()
        out.coeffs = {m: -c for m, c in self.coeffs.items()}
        return out

    def __sub__(self, other) -> "NCPoly":
        return self + (-other)

    def scale(self, factor) -> "NCPoly":
        factor = Fraction(factor)
        out = NCPoly()
        if factor:
            out.coeffs = {m: c * factor for m, c in self.coeffs.items()}
        return out

    def __mul__(self, other) -> "NCPoly":
        out = NCPoly()
        acc = out.coeffs
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                mono = m1 + m2
                nc = acc.get(mono, ZERO) + c1 * c2
                if nc:
                    acc[mono] = nc
                else:
                    acc.pop(mono, None)
        return out

    def render(self, symbols) -> str:
        """Human-readable form, e.g. ``3/2*x_v^2 - 8/9*x_w^3``."""
        if not self.coeffs:
            return "0"
        bits = []
        for mono in sorted(self.coeffs, key=mono_key):
            c = self.coeffs[mono]
            factors = []
            for idx, run in itertools.groupby(mono):
                count = len(list(run))
                name = "x_%s" % symbols[idx]
                factors.append(name if count == 1 else "%s^%d" % (name, count))
            body = "*".join(factors)
            if not body:
                txt = scalar_to_string(abs(c))
            elif abs(c) == 1:
                txt = body
            else:
                txt = "%s*%s" % (scalar_to_string(abs(c)), body)
            bits.append(("- " if c < 0 else "+ ") + txt)
        head = bits[0][2:] if bits[0].startswith("+ ") else "-" + bits[0][2:]
        return " ".join([head] + bits[1:])


# ----------------------------------------------------------------------
# products and images

def star(u: dict, v: dict, table: FullTable, strategy=None) -> dict:
    """u * v = sum_{j=0}^{wt u} C(wt u, j) (u)_{j-1} v, per component of u."""
    eng = table.engine
    weights = eng.weights
    out: dict = {}
    for word, c in u.items():
        h = word_weight(word, weights)
        for j in range(h + 1):
            b = binom(h, j)
            if b:
                state_iadd(out, eng.element_mode({word: ONE}, j - 1, v,
                                                 VACUUM, strategy),
                           Fraction(b) * c)
    return out


def circ(u: dict, v: dict, table: FullTable, strategy=None) -> dict:
    """u o v = sum_{j=0}^{wt u} C(wt u, j) (u)_{j-2} v, per component of u."""
    eng = table.engine
    weights = eng.weights
    out: dict = {}
    for word, c in u.items():
        h = word_weight(word, weights)
        for j in range(h + 1):
            b = binom(h, j)
            if b:
                state_iadd(out, eng.element_mode({word: ONE}, j - 2, v,
                                                 VACUUM, strategy),
                           Fraction(b) * c)
    return out


def zhu_image(s: dict, table: FullTable, strategy=None) -> NCPoly:
    """o(s): the weight-preserving mode of s as a polynomial in the x_i."""
    eng = table.engine
    weights = eng.weights
    acc: dict = {}
    for word, c in s.items():
        w = word_weight(word, weights)
        red = eng.normal_form(eng.splice(word, w - 1, (), TOP_LEVEL),
                              TOP_LEVEL, strategy)
        for rword, rc in red.items():
            mono = tuple(i for (i, _m) in rword)
            nc = acc.get(mono, ZERO) + c * rc
            if nc:
                acc[mono] = nc
            else:
                acc.pop(mono, None)
    out = NCPoly()
    out.coeffs = acc
    return out


class ZhuAlgebra:
    """Straightening arithmetic for the algebra generated by the x_i.

    The bracket of two generators is read off the completed table; a
    monomial is canonical when its indices are weakly increasing, and
    `canonical` rewrites x_a x_b (a > b) to x_b x_a - [x_b, x_a].  The
    corrections carry formal length < wt u^a + wt u^b, so (formal length,
    inversions) drops lexicographically and the rewriting terminates even
    though corrections may be longer words.
    """

    def __init__(self, presentation, table: FullTable, strategy=None):
        self.presentation = presentation
        self.table = table
        self.weights = presentation.weights
        ng = len(self.weights)
        self.brackets: dict = {}
        for i in range(ng):
            for j in range(i + 1, ng):
                acc = NCPoly()
                for k in range(self.weights[i] + self.weights[j]):
                    b = binom(self.weights[i] - 1, k)
                    if b:
                        acc = acc + zhu_image(table.get(i, j, k), table,
                                              strategy).scale(b)
                self.brackets[(i, j)] = acc
        self._memo: dict = {}

    def all_brackets_zero(self) -> bool:
        return all(not b for b in self.brackets.values())

    def canonical_word(self, mono: tuple) -> NCPoly:
        hit = self._memo.get(mono)
        if hit is not None:
            return hit
        res = None
        for p in range(len(mono) - 1):
            a, b = mono[p], mono[p + 1]
            if a > b:
                prefix, suffix = mono[:p], mono[p + 2:]
                res = self.canonical_word(prefix + (b, a) + suffix)
                for m2, c2 in self.brackets[(b, a)].coeffs.items():
                    res = res - self.canonical_word(
                        prefix + m2 + suffix).scale(c2)
                break
        if res is None:
            res = NCPoly.term(mono)
        self._memo[mono] = res
        return res

    def canonical(self, poly: NCPoly) -> NCPoly:
        out = NCPoly()
        for mono, c in poly.coeffs.items():
            out = out + self.canonical_word(mono).scale(c)
        return out


def zhu_commutators(p, table: FullTable, strategy=None,
                    algebra: ZhuAlgebra = None) -> list:
    """The relations x_i x_j - x_j x_i - [x_i, x_j], one per pair i < j."""
    algebra = algebra or ZhuAlgebra(p, table, strategy)
    out = []
    ng = len(p.weights)
    for i in range(ng):
        for j in range(i + 1, ng):
            rel = (NCPoly.term((i, j)) - NCPoly.term((j, i))
                   - algebra.brackets[(i, j)])
            out.append(rel)
    return out


# ----------------------------------------------------------------------
# bounded ideal membership

@dataclass(frozen=True)
class ClosureBounds:
    """Search bounds for `relation_closure` and `reduces_to_zero`."""

    max_mode_depth: int = 6
    membership_degree_bound: int = 8
    max_new_generators: int = 64

    @classmethod
    def from_options(cls, options: dict, **overrides) -> "ClosureBounds":
        vals = {
            "max_mode_depth": options.get("closure_mode_bound", 6),
            "membership_degree_bound": options.get("membership_degree_bound", 8),
            "max_new_generators": 64,
        }
        for key, val in overrides.items():
            if val is not None:
                vals[key] = val
        return cls(**vals)


def _ngens(polys) -> int:
    top = -1
    for poly in polys:
        for mono in poly.coeffs:
            if mono:
                top = max(top, max(mono))
    return top + 1


def reduces_to_zero(q: NCPoly, relations, bounds: ClosureBounds = None,
                    algebra: ZhuAlgebra = None) -> str:
    """Bounded membership of q in the two-sided ideal of `relations`.

    Returns "zero", "nonzero", or "inconclusive".  q and the relations are
    straightened first (identity straightening when no algebra is given).
    "zero" is exact.  "nonzero" is exact and is reached in two ways: the
    search saturated at a level where every relation still participated
    (no later product can leave the accumulated span), or all brackets
    vanish and the relations are length-homogeneous, in which case the
    ideal is graded and membership is decided degree by degree.
    """
    bounds = bounds or ClosureBounds()
    canon = algebra.canonical if algebra is not None else (lambda poly: poly)
    qh = canon(q)
    if not qh:
        return "zero"
    rels = [r for r in (canon(r) for r in relations) if r]
    if not rels:
        return "nonzero"
    limit = bounds.membership_degree_bound
    ng = _ngens(rels + [qh])
    if algebra is not None:
        def monos(length):
            return itertools.combinations_with_replacement(range(ng), length)
    else:
        def monos(length):
            return itertools.product(range(ng), repeat=length)

    graded = ((algebra is None or algebra.all_brackets_zero())
              and all(len({len(m) for m in r.coeffs}) == 1 for r in rels)
              and qh.degree() <= limit)
    span = SpanBuilder(mono_key)
    max_deg_r = max(r.degree() for r in rels)

    if graded:
        cap = qh.degree()
        for r in rels:
            room = cap - r.degree()
            for d in range(room + 1):
                for left_len in range(d + 1):
                    for ml in monos(left_len):
                        lp = NCPoly.term(ml)
                        for mr in monos(d - left_len):
                            row = lp * r * NCPoly.term(mr)
                            if row:
                                span.add(row.coeffs)
        return "zero" if span.contains(qh.coeffs) else "nonzero"

    d = 0
    while True:
        live = [r for r in rels if d + r.degree() <= limit]
        if not live:
            break
        grew = False
        for r in live:
            for left_len in range(d + 1):
                for ml in monos(left_len):
                    lp = NCPoly.term(ml)
                    for mr in monos(d - left_len):
                        row = canon(lp * r * NCPoly.term(mr))
                        if row and span.add(row.coeffs):
                            grew = True
        if span.contains(qh.coeffs):
            return "zero"
        if not grew and d + max_deg_r <= limit:
            return "nonzero"
        d += 1
    return "inconclusive"


# ----------------------------------------------------------------------
# relation closure

class _FreeIdeal:
    """Row space of the free two-sided ideal of an append-only list.

    Used by `relation_closure` to decide whether a candidate image is
    already a consequence of the literal accumulated relations.  The
    commutator congruence is deliberately NOT applied here: reducing
    candidates modulo commutators would absorb relations that the
    presentation still needs to state explicitly (their certificates in
    terms of the survivors can exceed any practical degree bound).
    """

    def __init__(self, ng: int, limit: int):
        self.ng = ng
        self.limit = limit
        self.span = SpanBuilder(mono_key)
        self.count = 0

    def append(self, r: NCPoly):
        self.count += 1
        cap = self.limit - r.degree()
        for d in range(max(cap, 0) + 1):
            for left_len in range(d + 1):
                for ml in itertools.product(range(self.ng), repeat=left_len):
                    base = NCPoly.term(ml) * r
                    for mr in itertools.product(range(self.ng),
                                                repeat=d - left_len):
                        self.span.add((base * NCPoly.term(mr)).coeffs)

    def verdict(self, q: NCPoly) -> str:
        if not self.count:
            return "nonzero"
        return "zero" if self.span.contains(q.coeffs) else "inconclusive"


@dataclass
class ZhuPresentation:
    """Presentation of the top-level algebra: generators and relations.

    `extra_relations[k]` came from the state described by `provenance[k]`
    (seed label, the chain of modes applied to it, and the membership
    verdict that admitted it).  `status` is "complete" when the worklist
    was exhausted, "partial" when a bound tripped (named in
    `partial_reason`).
    """

    generators: tuple
    weights: tuple
    commutator_relations: list
    extra_relations: list
    provenance: list = field(default_factory=list)
    status: str = "complete"
    partial_reason: str = None
    algebra: ZhuAlgebra = None


def relation_closure(seeds, p, table: FullTable,
                     bounds: ClosureBounds = None,
                     strategy=None) -> ZhuPresentation:
    """Close `seeds` under nonnegative modes and collect the o-images.

    `seeds` is a list of (label, state) pairs.  Worklist search, breadth
    first; for each admitted state, candidate modes (u^i_n, n >= 0, result
    weight >= 0) are tried in order of decreasing result weight (ties by
    generator index, then mode).  A candidate whose value lies in the span
    generated by the already-admitted states (creation modes and vacuum
    re-embeddings) is dropped; an admitted candidate contributes its image
    as a relation unless the image is already in the free two-sided ideal
    of the accumulated relations (bounded check; see _FreeIdeal).
    """
    eng = table.engine
    weights = eng.weights
    bounds = bounds or ClosureBounds.from_options(p.options)
    algebra = ZhuAlgebra(p, table, strategy)
    commutators = zhu_commutators(p, table, strategy, algebra)
    extras: list = []
    provenance: list = []
    status, reason = "complete", None

    known: list = []
    worklist: list = []
    span_cache = {"n": -1, "w": -1, "spans": None}

    def redundant(state, w) -> bool:
        if span_cache["n"] != len(known) or span_cache["w"] < w:
            top = max(w, span_cache["w"])
            span_cache["spans"] = generated_span(known, table, top)
            span_cache["n"] = len(known)
            span_cache["w"] = top
        return span_cache["spans"][w].contains(state)

    ideal = _FreeIdeal(len(weights), bounds.membership_degree_bound)

    def admit_relation(img: NCPoly, label: str, chain: tuple):
        if not img:
            return
        verdict = ideal.verdict(img)
        if verdict == "zero":
            return
        extras.append(img)
        ideal.append(img)
        provenance.append({
            "seed": label,
            "chain": [[p.symbols[i], n] for (i, n) in chain],
            "membership": verdict,
        })
        log.debug("relation from %s %s: %s", label, chain,
                  img.render(p.symbols))

    for label, state in seeds:
        nf = eng.normal_form(state, VACUUM, strategy)
        if not nf:
            continue
        known.append(nf)
        span_cache["n"] = -1
        worklist.append((0, label, (), nf))
        admit_relation(zhu_image(nf, table, strategy), label, ())

    admitted = 0
    while worklist:
        depth, label, chain, state = worklist.pop(0)
        wx = state_weight(state, weights)
        cands = []
        for i in range(len(weights)):
            for n in range(wx + weights[i]):
                cands.append((wx + weights[i] - n - 1, i, n))
        cands.sort(key=lambda t: (-t[0], t[1], t[2]))
        for rw, i, n in cands:
            h = eng.normal_form(eng.apply_mode((i, n), state, strategy),
                                VACUUM, strategy)
            if not h or redundant(h, rw):
                continue
            if depth + 1 > bounds.max_mode_depth:
                status = "partial"
                reason = ("max_mode_depth %d exceeded"
                          % bounds.max_mode_depth)
                worklist = []
                break
            admitted += 1
            if admitted > bounds.max_new_generators:
                status = "partial"
                reason = ("max_new_generators %d exceeded"
                          % bounds.max_new_generators)
                worklist = []
                break
            known.append(h)
            span_cache["n"] = -1
            nchain = chain + ((i, n),)
            worklist.append((depth + 1, label, nchain, h))
            log.debug("admitted state %s %s (weight %d)", label, nchain, rw)
            admit_relation(zhu_image(h, table, strategy), label, nchain)
        else:
            continue
        break

    return ZhuPresentation(
        generators=tuple(p.symbols),
        weights=tuple(weights),
        commutator_relations=commutators,
        extra_relations=extras,
        provenance=provenance,
        status=status,
        partial_reason=reason,
        algebra=algebra,
    )
