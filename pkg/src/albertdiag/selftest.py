"""Invariant suites run by ``albertdiag selftest``.

Each suite returns its worst observed deviation; the runner compares it
with the suite's tolerance.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .algebra import COMPACT, OCT_TABLES, SPLIT, Octonion, oct_conj_array, oct_mul_array
from .diagonalize import diagonalize, verify_transcript
from .generators import (
    DeltaA,
    RotO3,
    automorphism_defect,
    check_f4_membership,
    g2_map_to_e1,
    random_sp3,
)
from .jordan import freudenthal_cross, inner_product, inner_product_via_trace, pair_cross, random_element, to_pair
from .split import counterexample_X0, diagonalizability_obstruction


def _random_pairs(rng, n):
    return rng.uniform(-1, 1, (n, 8)), rng.uniform(-1, 1, (n, 8)), rng.uniform(-1, 1, (n, 8))


def octonion_laws(rng, n=2000):
    x, y, z = _random_pairs(rng, n)
    worst = 0.0
    for mu in (COMPACT, SPLIT):
        def m(a, b):
            return oct_mul_array(a, b, mu)

        worst = max(
            worst,
            np.max(np.abs(m(x, m(x, y)) - m(m(x, x), y))),
            np.max(np.abs(m(m(y, x), x) - m(y, m(x, x)))),
            np.max(np.abs(oct_conj_array(m(x, y)) - m(oct_conj_array(y), oct_conj_array(x)))),
            np.max(np.abs(m(m(x, y), m(z, x)) - m(x, m(m(y, z), x)))),
        )
    nx = np.sum(x * x, axis=1)
    ny = np.sum(y * y, axis=1)
    xy = oct_mul_array(x, y, COMPACT)
    rel = np.abs(np.sum(xy * xy, axis=1) - nx * ny) / (nx * ny)
    e4sq = max(abs(OCT_TABLES[mu][4, 4, 0] - mu) for mu in (COMPACT, SPLIT))
    return float(max(worst, np.max(rel), e4sq))


def pair_correspondence(rng, n=200):
    worst = 0.0
    for _ in range(n):
        X, Y = random_element(rng), random_element(rng)
        worst = max(worst, pair_cross(to_pair(X), to_pair(Y)).max_abs_diff(to_pair(freudenthal_cross(X, Y))))
    return worst


def inner_closed_form(rng, n=200):
    worst = 0.0
    for _ in range(n):
        for mu in (COMPACT, SPLIT):
            X, Y = random_element(rng, mu), random_element(rng, mu)
            worst = max(worst, abs(inner_product(X, Y) - inner_product_via_trace(X, Y)))
    return worst


def f4_membership(rng, trials=20):
    a = rng.normal(size=8)
    Q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
    u = np.zeros(8)
    u[1:] = rng.normal(size=7)
    gens = [
        DeltaA(Octonion(a / np.linalg.norm(a))),
        RotO3(Q),
        random_sp3(rng),
        g2_map_to_e1(Octonion(u / np.linalg.norm(u))),
    ]
    seed = int(rng.integers(2**32))
    return max(check_f4_membership(g, trials, seed).max_deviation for g in gens)


def g2_transitivity(rng, n=100):
    worst = 0.0
    for _ in range(n):
        c = np.zeros(8)
        c[1:] = rng.normal(size=7)
        u = Octonion(c / np.linalg.norm(c))
        g = g2_map_to_e1(u)
        image = g.map_octonion(u).coeffs
        worst = max(worst, np.max(np.abs(image - np.eye(8)[1])), automorphism_defect(g.L))
    return worst


def diagonalization(rng, n=100):
    worst = 0.0
    for _ in range(n):
        t = diagonalize(random_element(rng))
        report = verify_transcript(t)
        if not report.ok:
            return float("inf")
        worst = max(worst, t.off_diag_residual, max(t.invariant_drift.values()))
    return worst


def split_certificate(rng):
    v = diagonalizability_obstruction(counterexample_X0())
    return 0.0 if (v.inner_square == -2.0 and v.obstructed) else float("inf")


SUITES = {
    "octonion_laws": (octonion_laws, 1e-11),
    "pair_correspondence": (pair_correspondence, 1e-10),
    "inner_closed_form": (inner_closed_form, 1e-11),
    "f4_membership": (f4_membership, 1e-9),
    "g2_transitivity": (g2_transitivity, 1e-9),
    "diagonalization": (diagonalization, 1e-8),
    "split_certificate": (split_certificate, 0.0),
}


def run_selftest(seed=0):
    """Run every suite on its own seeded stream; return ``{name: {...}}`` and overall status."""
    seqs = np.random.SeedSequence(seed).spawn(len(SUITES))

    def run(item):
        (name, (fn, tol)), ss = item
        dev = float(fn(np.random.default_rng(ss)))
        return name, {"max_deviation": dev, "tolerance": tol, "ok": dev <= tol}

    with ThreadPoolExecutor() as pool:
        results = dict(pool.map(run, zip(SUITES.items(), seqs)))
    return results, all(r["ok"] for r in results.values())
