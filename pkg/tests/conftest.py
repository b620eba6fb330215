import random
from fractions import Fraction

import pytest

from zhuforge import (
    ReductionStrategy,
    c1_singular_elements,
    complete_table,
    load_bundled,
    quotient_basis,
    relation_closure,
)
from zhuforge.engine import pbw_words
from zhuforge.linalg import (
    mat_add,
    mat_from_rows,
    mat_identity,
    mat_is_zero,
    mat_mul,
    mat_scale,
    mat_zero,
)
from zhuforge.terms import op_weight, word_weight
from zhuforge.zhu import circ, star, zhu_image


@pytest.fixture(scope="session")
def virasoro():
    return load_bundled("virasoro_c_minus2")


@pytest.fixture(scope="session")
def virasoro_table(virasoro):
    return complete_table(virasoro)


@pytest.fixture(scope="session")
def w3():
    return load_bundled("w3_c_minus2")


@pytest.fixture(scope="session")
def w3_table(w3):
    return complete_table(w3)


@pytest.fixture(scope="session")
def lattice():
    return load_bundled("lattice_rank1_norm4")


@pytest.fixture(scope="session")
def lattice_table(lattice):
    return complete_table(lattice)


@pytest.fixture(scope="session")
def lattice_defects(lattice, lattice_table):
    return c1_singular_elements(lattice, lattice_table)


def defect_seeds(defects):
    return [("defect%s" % (d.indices,), d.value) for d in defects]


@pytest.fixture(scope="session")
def w3_closure(w3, w3_table):
    return relation_closure(list(w3.singular_vectors), w3, w3_table)


@pytest.fixture(scope="session")
def lattice_closure(lattice, lattice_table, lattice_defects):
    return relation_closure(defect_seeds(lattice_defects), lattice,
                            lattice_table)


def random_word(p, rng, max_len=4):
    ng = len(p.weights)
    length = rng.randint(0, max_len)
    return tuple((rng.randrange(ng), rng.randint(-5, 3))
                 for _ in range(length))


def random_state(p, rng, terms=2):
    out = {}
    for _ in range(rng.randint(1, terms)):
        c = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        if c:
            word = random_word(p, rng)
            out[word] = out.get(word, Fraction(0)) + c
    return {w: c for w, c in out.items() if c}


def random_homogeneous_state(p, rng, max_weight=6, terms=2):
    words = []
    while not words:
        w = rng.randint(1, max_weight)
        words = pbw_words(p.weights, w)
    out = {}
    for _ in range(rng.randint(1, terms)):
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        if c:
            word = rng.choice(words)
            out[word] = out.get(word, Fraction(0)) + c
    return {w: c for w, c in out.items() if c}


def _poly_as_matrix(poly, mats, n):
    acc = mat_zero(n)
    for mono, c in poly.coeffs.items():
        prod = mat_identity(n)
        for idx in mono:
            prod = mat_mul(prod, mats[idx])
        acc = mat_add(acc, mat_scale(prod, c))
    return acc


@pytest.fixture(scope="session")
def invariant_report(virasoro, virasoro_table, w3, w3_table, lattice,
                     lattice_table, w3_closure, lattice_closure):
    """One shared run of the randomized invariant suites.

    Each entry counts violations, so every reported number must be zero
    (except the `*_checked` totals, which record coverage).  The lattice
    image identities are checked modulo the emitted relations by
    evaluating in the faithful 7-dimensional quotient representation;
    the confluent presentations are checked exactly after straightening.
    """
    report = {}
    cases = [("virasoro", virasoro, virasoro_table),
             ("w3", w3, w3_table),
             ("lattice", lattice, lattice_table)]

    for name, p, table in cases:
        eng = table.engine
        rng = random.Random("idempotence-" + name)
        idem = 0
        disagree = 0
        for _ in range(1000):
            s = random_state(p, rng)
            nf = eng.normal_form(s)
            if eng.normal_form(nf) != nf:
                idem += 1
            if name in ("virasoro", "w3"):
                right = eng.normal_form(s, strategy=ReductionStrategy.RightmostFirst)
                if right != nf:
                    disagree += 1
        report[name + "_nf_idempotence_failures"] = idem
        report[name + "_nf_checked"] = 1000
        if name in ("virasoro", "w3"):
            report[name + "_strategy_disagreements"] = disagree

        rng = random.Random("weights-" + name)
        wviol = 0
        for _ in range(300):
            word = random_word(p, rng)
            op = (rng.randrange(len(p.weights)), rng.randint(-4, 4))
            got = eng.apply_mode(op, {word: Fraction(1)})
            want = word_weight(word, p.weights) + op_weight(op, p.weights)
            if any(word_weight(rw, p.weights) != want for rw in got):
                wviol += 1
        report[name + "_weight_violations"] = wviol

    # Image identities: o(u * v) = o(u) o(v) and o(u o v) = 0 modulo the
    # emitted relations.
    closures = {"virasoro": None, "w3": w3_closure, "lattice": lattice_closure}
    model = quotient_basis(lattice_closure, degree_bound=10)
    lat_mats = [mat_from_rows(model.matrices[s])
                for s in lattice_closure.generators]

    for name, p, table in cases:
        zp = closures[name]
        if name == "lattice":
            def is_zero_mod_relations(poly):
                return mat_is_zero(_poly_as_matrix(poly, lat_mats,
                                                   model.dimension))
        elif zp is not None:
            def is_zero_mod_relations(poly, _alg=zp.algebra):
                return _alg.canonical(poly).is_zero()
        else:
            def is_zero_mod_relations(poly):
                return poly.is_zero()
        rng = random.Random("images-" + name)
        star_bad = circ_bad = raw_nonzero = 0
        for _ in range(200):
            u = random_homogeneous_state(p, rng)
            v = random_homogeneous_state(p, rng)
            if not u or not v:
                continue
            d_star = (zhu_image(star(u, v, table), table)
                      - zhu_image(u, table) * zhu_image(v, table))
            d_circ = zhu_image(circ(u, v, table), table)
            if d_star or d_circ:
                raw_nonzero += 1
            if not is_zero_mod_relations(d_star):
                star_bad += 1
            if not is_zero_mod_relations(d_circ):
                circ_bad += 1
        report[name + "_star_homomorphism_failures"] = star_bad
        report[name + "_circ_annihilation_failures"] = circ_bad
        report[name + "_image_pairs_checked"] = 200
        report[name + "_raw_nonzero_diffs"] = raw_nonzero
    return report
