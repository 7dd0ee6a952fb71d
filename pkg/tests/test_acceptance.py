"""Acceptance criteria 1-9.

Each test records one PASS/FAIL line with its runtime; the lines are
printed at the end of the pytest run (see conftest.py) and also when the
file is executed directly: ``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from contextlib import contextmanager
from itertools import product
from math import comb, isqrt
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from conftest import blocks_lattice  # noqa: E402
from mingenus import (  # noqa: E402
    Lattice,
    adjunction_genus_lb,
    brute_force_min_pairing,
    characteristic_basepoint,
    divisibility,
    divisible_genus_lb,
    e_form_plan,
    formal_dimension,
    formal_dimension_orthogonal,
    h_form_plan,
    intersection_lb,
    k_set,
    list_reduced_classes_with_genus_le,
    min_abs_pairing,
    multiple_class_plan,
    multiple_class_upper_bound,
    reduced_class_construction,
    reduced_class_plan,
    resolve_genus,
)
from mingenus.cli import cmd_genus_lb  # noqa: E402
from mingenus.manifest import simple_manifest  # noqa: E402

RESULTS = {}

CP2 = Lattice(((1,),))
H = Lattice.hyperbolic()
E = Lattice.odd(1)


@contextmanager
def criterion(number, title, limit):
    """Time the body; a failed check or a runtime over ``limit`` seconds fails."""
    failures = []
    start = time.perf_counter()
    try:
        yield failures
    except AssertionError as exc:
        failures.append(str(exc) or "assertion failed")
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        failures.append(f"runtime {elapsed:.2f}s exceeds {limit}s")
    ok = not failures
    timing = f"{elapsed:.2f}s" + (f" / limit {limit}s" if limit else "")
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}  ({timing})"
    if failures:
        line += "  -- " + "; ".join(failures[:3])
    RESULTS[number] = line
    print(line)
    assert ok, line


def check(failures, cond, msg):
    if not cond:
        failures.append(msg)


# -- 1 -------------------------------------------------------------------------


def test_criterion_1_thom():
    manifest = simple_manifest([[1]])
    with criterion(1, "CP^2 bound (d-1)(d-2)/2 for d <= 30, sandwiched by the construction", 1.0) as f:
        for d in range(1, 31):
            want = (d - 1) * (d - 2) // 2
            got = cmd_genus_lb(manifest, str(d))["results"]["bound"]
            check(f, got == want, f"d={d}: lower {got} != {want}")
            check(f, multiple_class_upper_bound(1, 0, d) == want, f"d={d}: upper bound differs")


# -- 2 -------------------------------------------------------------------------


def test_criterion_2_signature_zero():
    rev = H.reversed()
    with criterion(2, "H and E families, |p|, |q| <= 12", 5.0) as f:
        for p, q in product(range(-12, 13), repeat=2):
            if p == 0 or q == 0:
                continue
            lat = H if p * q > 0 else rev
            got = adjunction_genus_lb(lat, (p, q)).bound
            want = (abs(p) - 1) * (abs(q) - 1)
            check(f, got == want, f"H ({p},{q}): {got} != {want}")
        for p in range(1, 13):
            for q in range(0, p):
                got = adjunction_genus_lb(E, (p, q)).bound
                want = max(0, (p * p - q * q - 3 * p + q) // 2 + 1)
                check(f, got == want, f"E ({p},{q}): {got} != {want}")
                if q == 0 and p <= 2:
                    check(f, got == 0, f"E ({p},0) should clamp to 0")


# -- 3 -------------------------------------------------------------------------


def reduced_corpus(pmax=10):
    for m in range(2, 10):
        for qs in _nonincreasing_positive(m, pmax):
            q3 = qs[2] if m >= 3 else 0
            for p in range(max(1, qs[0] + qs[1] + q3), pmax + 1):
                if p * p > sum(q * q for q in qs):
                    yield p, qs


def _nonincreasing_positive(m, top):
    if m == 0:
        yield ()
        return
    for q in range(1, top + 1):
        for rest in _nonincreasing_positive(m - 1, q):
            yield (q,) + rest


REDUCED_10 = list(reduced_corpus())


def test_criterion_3_reduced_sharpness():
    with criterion(3, "engine = (xi^2 - 3p + sum q)/2 + 1 on reduced classes, m <= 9, p <= 10", 60.0) as f:
        count = 0
        for p, qs in REDUCED_10:
            lat = Lattice.odd(len(qs))
            r = adjunction_genus_lb(lat, (p,) + qs)
            value = (p * p - sum(q * q for q in qs) - 3 * p + sum(qs)) // 2 + 1
            check(f, r.raw == value and r.bound == max(0, value), f"{(p,) + qs}: raw {r.raw} != {value}")
            count += 1
        check(f, count > 1000, f"corpus unexpectedly small ({count})")


# -- 4 -------------------------------------------------------------------------


def k_set_corpus():
    yield CP2, [(1,)]
    yield H, [(1, 1), (2, 1), (1, 2), (3, 1), (3, 2)]
    yield E, [(1, 0), (2, 1), (3, 1), (3, 2), (4, 1)]
    for n in range(2, 6):
        lat = Lattice.odd(n)
        pad = lambda v: tuple(v[: n + 1]) + (0,) * max(0, n + 1 - len(v))  # noqa: E731
        cands = [(1,), (2, 1), (3, 1, 1), (3, 2, 1), (4, 2, 1, 1), (3, 1, 1, 1), (5, 2, 2, 1, 1, 1)]
        xs = []
        for v in cands:
            x = pad(v)
            if lat.square(x) > 0 and divisibility(x)[0] == 1 and x not in xs:
                xs.append(x)
        yield lat, xs


def test_criterion_4_k_set_identity():
    with criterion(4, "k0 = d xi^2 - m~ and K-set bound = adjunction bound, d = 2..6", 60.0) as f:
        cases = 0
        for lat, xs in k_set_corpus():
            for xi in xs:
                m_tilde, _ = min_abs_pairing(lat, xi)
                a = lat.square(xi)
                for d in range(2, 7):
                    res = k_set(lat, xi, d)
                    want = d * a - m_tilde
                    if want >= 0:
                        check(f, res.k0 == want, f"{lat.gram} {xi} d={d}: k0 {res.k0} != {want}")
                    else:
                        check(f, res.k0 is None, f"{lat.gram} {xi} d={d}: K should be empty")
                    div = divisible_genus_lb(lat, xi, d).bound
                    adj = adjunction_genus_lb(lat, tuple(d * v for v in xi)).bound
                    check(f, div == adj, f"{lat.gram} {xi} d={d}: {div} != {adj}")
                    cases += 1
        check(f, cases >= 150, f"only {cases} cases")


# -- 5 -------------------------------------------------------------------------


SHAPES = [("+",), ("+", "-"), ("+", "-", "-"), ("H",), ("H", "-"), ("+", "-", "-", "-"), ("H", "-", "-")]


def test_criterion_5_dimension():
    rng = random.Random(20260516)
    with criterion(5, "dimension: s-shift invariance x1000, CP^2 ((k-d)^2-1)/4", None) as f:
        done = 0
        while done < 1000:
            lat = blocks_lattice(rng.choice(SHAPES))
            xi = tuple(rng.randint(-3, 3) for _ in range(lat.rank))
            if not any(xi) or lat.square(xi) <= 0 or divisibility(xi)[0] != 1:
                continue
            d = rng.randint(2, 6)
            w = characteristic_basepoint(lat)
            c1 = tuple(a + 2 * rng.randint(-4, 4) for a in w)
            s = rng.choice([-3, -2, -1, 1, 2, 3])
            shifted = tuple(a + 2 * d * s * b for a, b in zip(c1, xi))
            base = formal_dimension(lat, c1, xi, d)
            check(f, formal_dimension(lat, shifted, xi, d) == base, f"s-shift changed {lat.gram} {c1} {xi} d={d}")
            check(f, formal_dimension_orthogonal(lat, c1, xi, d) == base, "forms disagree")
            done += 1
        for d in range(2, 13):
            for k in range(0, d + 1):
                if (k + d) % 2 == 0:
                    continue
                got = formal_dimension(CP2, (k + d,), (1,), d)
                want = ((k - d) ** 2 - 1) // 4
                check(f, got == want and ((k - d) ** 2 - 1) % 4 == 0, f"CP^2 k={k} d={d}: {got} != {want}")


# -- 6 -------------------------------------------------------------------------


def test_criterion_6_intersections():
    hh = blocks_lattice("HH")
    two = Lattice.diagonal(1, 1)
    with criterion(6, "H+H spheres n_lb = 5 > Gilmer 3; CP^2#CP^2 n_lb = p - 1, p = 2..8", 30.0) as f:
        rep = intersection_lb(hh, (2, 2, 0, 0), (0, 0, 2, 2), 0, 0)
        check(f, rep.n_lb == 5 == 2 * 2 + 1 * 1, f"n_lb {rep.n_lb} != 5")
        gil = (8 + 8) // 4 - 1
        check(f, rep.gilmer_lb == gil == 3, f"gilmer {rep.gilmer_lb}")
        check(f, rep.gilmer_lb < rep.n_lb, "Gilmer bound not smaller")
        for p in range(2, 9):
            g = (p * p + 1 - 3 * (p + 1)) // 2 + 2
            rep = intersection_lb(two, (p, 1), (1, -p), g, g)
            check(f, rep.n_lb == p - 1, f"p={p}: n_lb {rep.n_lb} != {p - 1}")


# -- 7 -------------------------------------------------------------------------


ORACLE_SHAPES = [("+",), ("+", "-"), ("-", "+"), ("+", "-", "-"), ("-", "+", "-"), ("-", "-", "+"), ("H",), ("H", "-"), ("-", "H")]


def signed_permutation(lat, rng):
    n = lat.rank
    perm = list(range(n))
    rng.shuffle(perm)
    signs = [rng.choice((1, -1)) for _ in range(n)]
    g = lat.gram
    return Lattice(tuple(tuple(signs[i] * signs[j] * g[perm[i]][perm[j]] for j in range(n)) for i in range(n)))


def test_criterion_7_oracle():
    rng = random.Random(7)
    with criterion(7, "engine = brute force (box 9) on 200 random rank <= 3 lattices", 60.0) as f:
        mismatches = 0
        for _ in range(200):
            lat = signed_permutation(blocks_lattice(rng.choice(ORACLE_SHAPES)), rng)
            while True:
                x = tuple(rng.randint(-3, 3) for _ in range(lat.rank))
                if lat.square(x) > 0:
                    break
            m, _ = min_abs_pairing(lat, x)
            oracle = brute_force_min_pairing(lat, x, 9)
            if oracle is None or oracle[0] != m:
                mismatches += 1
                f.append(f"{lat.gram} {x}: engine {m}, oracle {oracle and oracle[0]}")
        check(f, mismatches == 0, f"{mismatches} mismatches")


# -- 8 -------------------------------------------------------------------------


def test_criterion_8_constructions():
    with criterion(8, "resolve_genus reproduces the H, E, reduced and parallel-copy genera", 5.0) as f:
        for p, q in product(range(1, 13), repeat=2):
            check(f, resolve_genus(h_form_plan(p, q)) == (p - 1) * (q - 1), f"H plan ({p},{q})")
        for p in range(1, 13):
            for q in range(0, p):
                want = (p * p - q * q - 3 * p + q) // 2 + 1
                check(f, resolve_genus(e_form_plan(p, q)) == want, f"E plan ({p},{q})")
        planned = 0
        for m in range(1, 5):
            for qs in _nonincreasing_positive(m, 6):
                if qs[-1] < 3:
                    continue
                for p in range(sum(qs), 25):
                    if p * p <= sum(q * q for q in qs):
                        continue
                    want = (p * p - sum(q * q for q in qs) - 3 * p + sum(qs)) // 2 + 1
                    check(f, resolve_genus(reduced_class_plan(p, qs)) == want, f"reduced plan {(p,) + qs}")
                    planned += 1
        for p, qs in REDUCED_10:
            want = (p * p - sum(q * q for q in qs) - 3 * p + sum(qs)) // 2 + 1
            got = reduced_class_construction(p, qs)
            check(f, got is None or got == want, f"reduced construction {(p,) + qs}")
        check(f, planned >= 10, f"only {planned} plan cases")
        for d, g1, a in product(range(1, 11), range(0, 6), range(1, 7)):
            want = d * g1 + a * comb(d, 2) - (d - 1)
            check(f, resolve_genus(multiple_class_plan(a, g1, d)) == want, f"parallel copies {d},{g1},{a}")


# -- 9 -------------------------------------------------------------------------


def brute_reduced(n, g, pmax):
    """Every reduced class (n coordinates, 2 <= m) with p <= pmax and bound value <= g."""
    found = set()

    def rec(p, prefix, top, room):
        if len(prefix) == n:
            qs = tuple(prefix)
            nz = [q for q in qs if q]
            m = len(nz)
            if m < 2 or m > 9:
                return
            q3 = qs[2] if n >= 3 else 0
            if p < qs[0] + qs[1] + q3:
                return
            sq = p * p - sum(q * q for q in qs)
            if sq <= 0:
                return
            if m == 2 and nz == [p - 1, 1]:
                return
            value = (sq - 3 * p + sum(qs)) // 2 + 1
            if value <= g:
                found.add((p, qs))
            return
        for q in range(min(top, isqrt(room)), -1, -1):
            rec(p, prefix + [q], q, room - q * q)

    for p in range(1, pmax + 1):
        rec(p, [], p, p * p - 1)
    return found


def test_criterion_9_finiteness():
    with criterion(9, "reduced classes with bound <= g match brute force, n = 2..9, g <= 2", 120.0) as f:
        for n in range(2, 10):
            for g in range(0, 3):
                listed = {(rf.p, rf.qs) for rf in list_reduced_classes_with_genus_le(n, g)}
                brute = brute_reduced(n, g, 26)
                check(f, listed == brute, f"n={n} g={g}: missing {sorted(brute - listed)[:3]} extra {sorted(listed - brute)[:3]}")
                check(f, all(p < 20 for p, _ in brute), f"n={n} g={g}: classes close to the brute-force cutoff")


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for t in tests:
        try:
            t()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
