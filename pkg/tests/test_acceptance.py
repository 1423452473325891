"""Acceptance criteria, one test each.  Every test prints a single
``[PASS]``/``[FAIL]`` line (bypassing pytest capture) before asserting."""

import json
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from liecat import category as cat
from liecat.endo import Endo, check_automorphism, compose, from_matrix, to_matrix
from liecat.hall import BasisTable, witt_dimension
from liecat.liepoly import FreeLieAlgebra, to_associative, word_envelope
from liecat.matrix import MatrixN
from liecat.scalar import in_prime_subfield
from liecat.verify import SuiteConfig, run_suite


@pytest.fixture
def verdict(capsys):
    def emit(n: int, title: str, ok: bool, detail: str = ""):
        with capsys.disabled():
            tail = f" ({detail})" if detail else ""
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {n:>2}: {title}{tail}")
        assert ok, f"criterion {n} failed: {detail}"

    return emit


def _clean(rep, **minimum):
    counts = rep.details.get("checks", {})
    short = {k: v for k, v in minimum.items() if counts.get(k, 0) < v}
    ok = rep.verdict == "PASS" and rep.failed == 0 and not short
    detail = f"{rep.passed}/{rep.cases} checks"
    if short:
        detail += f"; too few cases for {sorted(short)}"
    if rep.failures:
        detail += f"; first failure {rep.failures[0]}"
    return ok, detail


def test_c01_basis_dimensions(verdict):
    t0 = time.perf_counter()
    got = {n: BasisTable(n, top).dimensions() for n, top in ((2, 6), (3, 4), (1, 6))}
    elapsed = time.perf_counter() - t0
    want = {2: [2, 1, 2, 3, 6, 9], 3: [3, 3, 8, 18], 1: [1, 0, 0, 0, 0, 0]}
    witt = {n: [witt_dimension(n, d) for d in range(1, len(v) + 1)] for n, v in want.items()}
    ok = got == want == witt and elapsed < 5
    verdict(1, "basis sizes equal Witt values", ok, f"{got}, {elapsed:.2f}s")


def test_c02_bracket_laws(verdict):
    t0 = time.perf_counter()
    rep = run_suite("jacobi", SuiteConfig(seed=0, cases=1000, max_degree=5))
    elapsed = time.perf_counter() - t0
    ok, detail = _clean(rep, antisymmetry=2000, jacobi=2000)
    verdict(2, "antisymmetry and Jacobi on 1000 triples, n=2,3", ok and elapsed < 30, f"{detail}, {elapsed:.2f}s")


def _envelope_sweep():
    """Every ordered basis pair within the cap: (pairs, mismatches, non-prime, non-integral)."""
    pairs = mismatches = nonprime = nonint = 0
    for n, top in ((2, 6), (3, 5)):
        alg = FreeLieAlgebra.of_rank(n, top)
        table = alg.table
        for u in table.words:
            for v in table.words:
                if u.degree + v.degree > top:
                    continue
                pairs += 1
                sc = table.bracket_words(u.index, v.index)
                lhs = to_associative(alg.from_terms(sc))
                rhs = word_envelope(table, u.index).commutator(word_envelope(table, v.index))
                mismatches += lhs != rhs
                nonprime += sum(not in_prime_subfield(c) for c in sc.values())
                nonint += sum(Fraction(c).denominator != 1 for c in sc.values())
    return pairs, mismatches, nonprime, nonint


@pytest.fixture(scope="module")
def sweep():
    return _envelope_sweep()


def test_c03_envelope_oracle(verdict, sweep):
    pairs, mismatches, _, _ = sweep
    verdict(3, "envelope of normalized bracket equals commutator, all pairs", pairs > 0 and mismatches == 0, f"{pairs} pairs, {mismatches} mismatches")


def test_c04_structure_constants(verdict, sweep):
    pairs, _, nonprime, nonint = sweep
    verdict(4, "structure constants in the prime subfield and integral", nonprime == 0 and nonint == 0, f"{pairs} pairs")


def test_c05_matrix_isomorphism(verdict):
    rng = random.Random("acceptance-5")
    bad = total = 0
    for n in (2, 3, 4):
        alg = FreeLieAlgebra.of_rank(n, 1)
        for _ in range(200):
            a, b = (MatrixN([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]) for _ in range(2))
            phi, psi = from_matrix(alg, a), from_matrix(alg, b)
            total += 1
            bad += to_matrix(compose(phi, psi)) != a * b
    verdict(5, "to_matrix is multiplicative on 200 pairs, n=2,3,4", bad == 0, f"{total - bad}/{total}")


def test_c06_constant_calculus(verdict):
    rep = run_suite("constants", SuiteConfig(seed=0, cases=200))
    ok, detail = _clean(rep, const_perm=200, right_identity=200, phi_const_gen=200, linear_combination=200)
    verdict(6, "constant-endomorphism identities on 200 cases each", ok, detail)


def test_c07_tau_multidegree(verdict):
    rep = run_suite("tau_scaling", SuiteConfig(seed=0, max_degree=5))
    ok, detail = _clean(rep, multidegree_law=1, eigen_filter=2)
    sols = rep.details.get("eigen_solutions_n2"), rep.details.get("eigen_solutions_n3")
    ok = ok and sols == (["[x,y]"], ["[x,y]"])
    verdict(7, "diagonal scaling law and (1,1,0..) eigen filter", ok, f"{detail}; solutions {sols}")


def test_c08_fhat(verdict):
    rep = run_suite("fhat", SuiteConfig(seed=0, cases=100, max_degree=4))
    ok, detail = _clean(rep, closed_form=2 * 100 * 4, fixes_linear=200, witness_rank3=4, witness_rank2=4)
    verdict(8, "f_a conjugation equals the bar transform; linear endos fixed", ok, detail)


def test_c09_semi_automorphism(verdict):
    rep = run_suite("semi", SuiteConfig(seed=0, cases=500, field="q-sqrt:2"))
    ok, detail = _clean(rep, additive=500, multiplicative=500, semilinear=500, rational_fixed=1)
    verdict(9, "sigma_F additive, bracket-preserving, semilinear over Q(sqrt 2)", ok, detail)


def test_c10_diagonal_twist(verdict):
    rep = run_suite("diagonal", SuiteConfig(seed=0, cases=100))
    ok, detail = _clean(rep, pointwise=100, multiplicative=100, swap_involution=1, stretch_const=1)
    verdict(10, "determinant twist is pointwise and multiplicative", ok, detail)


def test_c11_rank_facts(verdict):
    one = BasisTable(1, 8).dimensions()
    alg = FreeLieAlgebra.of_rank(2, 8)
    phi = Endo.from_mapping(alg, {"x": "x+[x,y]"})
    verdicts = [check_automorphism(phi, cap=c).verdict for c in range(1, 9)]
    ok = one[1:] == [0] * 7 and "yes" not in verdicts
    verdict(11, "F(x) is linear; x -> x+[x,y] never certified invertible up to cap 8", ok, f"{verdicts}")


def test_c12_duality(verdict):
    rep = run_suite("duality", SuiteConfig(seed=0, cases=None, max_degree=3))
    ok, detail = _clean(rep, alpha_square=200, contravariance=200, separation=100, rank1_no_duality=1)
    ok = ok and rep.details.get("separated") == "100/100"
    verdict(12, "duality square, contravariance, separation, rank-1 NotFound", ok, f"{detail}; separated {rep.details.get('separated')}")


def test_c13_cli_verify_all(verdict, tmp_path):
    outs = []
    t0 = time.perf_counter()
    codes = []
    for k in range(2):
        path = tmp_path / f"report{k}.json"
        proc = subprocess.run(
            [sys.executable, "-m", "liecat.cli", "verify", "all", "--seed", "7", "--report", str(path)],
            capture_output=True,
            text=True,
        )
        codes.append(proc.returncode)
        outs.append(path.read_bytes())
        if k == 0:
            elapsed = time.perf_counter() - t0
    stable = outs[0] == outs[1]
    summary = json.loads(outs[0])
    ok = codes == [0, 0] and stable and elapsed < 60 and summary["verdict"] == "PASS"
    verdict(13, "`liecat verify all` exits 0 under 60 s, byte-stable", ok, f"exit {codes}, {elapsed:.1f}s, stable={stable}")
