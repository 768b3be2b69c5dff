"""Acceptance gate: one test per criterion, printing one PASS/FAIL line
each.  All arithmetic is exact, so every comparison is plain equality;
the only tolerances are the stated wall-clock budgets."""

import itertools
import random

import pytest

from drinfeld_weil import PolyRing, make_field
from drinfeld_weil import weil_ops as W
from drinfeld_weil.verify import (suite_agf, suite_main_theorem,
                                  suite_maurischat_perkins, suite_operators,
                                  suite_pairing_axioms, suite_remainders,
                                  suite_residues)

SEED = 11


def _gate(name, rep, budget=None):
    ok = not rep["failures"] and (budget is None or rep["elapsed"] < budget)
    print(f"{'PASS' if ok else 'FAIL'} {name}: "
          f"{rep['cases']} checks in {rep['elapsed']}s")
    assert rep["failures"] == [], rep["failures"][:5]
    if budget is not None:
        assert rep["elapsed"] < budget, f"budget {budget}s exceeded"


@pytest.fixture(scope="module")
def operators_report():
    return suite_operators(seed=SEED)


@pytest.fixture(scope="module")
def pairing_report():
    return suite_pairing_axioms(seed=SEED)


def test_criterion_1_operator_identities(operators_report):
    # slot-swap identity, symmetry r <= 4, rank recursion and its top
    # coefficient, factor recursion at every slot, split-linear-factor
    # recursion, the Mod-star congruences, and the t^k star closed form,
    # for 200 random monic f per q in {2, 3, 5}; exact, under 60 s
    _gate("criterion-1 operator identity suite", operators_report, budget=60)


def test_criterion_2_rank3_closed_form():
    cases = 0
    rng = random.Random(SEED)
    for q in (2, 3):
        R = PolyRing(make_field(q), "t")
        for d in (1, 2, 3):
            for lows in itertools.product(range(q), repeat=d):
                f = R.poly(list(lows) + [1])
                assert W.rank3_closed(f) == W.weil_op_r(f, 3), f"q={q} f={f}"
                cases += 1
    for _ in range(100):
        q = rng.choice((2, 3))
        R = PolyRing(make_field(q), "t")
        d = rng.randrange(1, 6)
        f = R.poly([rng.randrange(q) for _ in range(d)] + [1])
        assert W.rank3_closed(f) == W.weil_op_r(f, 3), f"q={q} f={f}"
        cases += 1
    print(f"PASS criterion-2 rank-3 closed form: {cases} checks, exact")


def test_criterion_3_dual_basis_residues():
    _gate("criterion-3 dual-basis residue suite", suite_residues(seed=SEED))


def test_criterion_4_remainders():
    _gate("criterion-4 remainder suite", suite_remainders(seed=SEED))


def test_criterion_5_truncated_remainder_theorem():
    # Carlitz and a rank-2 module over F_3(theta); f in {x, x^2, x^2+1};
    # depth 3; every Z^{q^k} coefficient as identical reduced rational
    # functions; under 5 minutes
    _gate("criterion-5 truncated coefficient theorem", suite_agf(seed=SEED),
          budget=300)


def test_criterion_6_maurischat_perkins():
    _gate("criterion-6 derivative congruences",
          suite_maurischat_perkins(seed=SEED))


def test_criterion_7_main_theorem():
    _gate("criterion-7 Moore-determinant bridge",
          suite_main_theorem(seed=SEED))


def test_criterion_8_pairing_axioms(pairing_report):
    failures = [f for f in pairing_report["failures"]
                if not f["case"].startswith(("torsion-size", "coefficient-span",
                                             "torsion-killed"))]
    ok = not failures and pairing_report["elapsed"] < 60
    print(f"{'PASS' if ok else 'FAIL'} criterion-8 pairing axiom suite: "
          f"{pairing_report['cases']} checks in {pairing_report['elapsed']}s")
    assert failures == []
    assert pairing_report["elapsed"] < 60


def test_criterion_9_torsion_sanity(pairing_report):
    wanted = ("torsion-size", "coefficient-span", "torsion-killed")
    failures = [f for f in pairing_report["failures"]
                if f["case"].startswith(wanted)]
    print(f"{'PASS' if not failures else 'FAIL'} criterion-9 torsion sanity "
          f"and coefficient spanning")
    assert failures == []
