"""Majorana chain operators, exact spectra, and module structure."""

import random
from fractions import Fraction
from itertools import product
from math import comb

import numpy as np
import pytest

from arfbrown.errors import CapExceeded
from arfbrown.majorana import (
    ChainSetup,
    doubled_hamiltonian,
    epsilon_operator,
    ground_states,
    hamiltonian,
    interval_bimodule_check,
    majorana_operators,
    reference_module,
)
from arfbrown.pin1 import HasBoundary


def test_single_vertex_frozen_matrices():
    setup = ChainSetup.circle((0,))
    c, d = majorana_operators(setup)[0]
    assert c.tolist() == [[0, 1], [1, 0]]
    assert d.tolist() == [[0, -1], [1, 0]]
    assert doubled_hamiltonian(setup).tolist() == [[1, 0], [0, -1]]
    flipped = ChainSetup.circle((1,))
    assert doubled_hamiltonian(flipped).tolist() == [[-1, 0], [0, 1]]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_majorana_clifford_relations(n):
    ops = majorana_operators(ChainSetup.circle((0,) * n))
    ident = np.eye(1 << n, dtype=np.int64)
    gens = [(ops[v][0], 1) for v in range(n)] + [(ops[v][1], -1) for v in range(n)]
    for i, (g, sign) in enumerate(gens):
        assert np.array_equal(g @ g, sign * ident)
        for h, _ in gens[i + 1 :]:
            assert np.array_equal(g @ h, -(h @ g))


def test_operators_do_not_depend_on_bits():
    a = majorana_operators(ChainSetup.circle((0, 0, 0)))
    b = majorana_operators(ChainSetup.circle((1, 0, 1)))
    for v in range(3):
        assert np.array_equal(a[v][0], b[v][0])
        assert np.array_equal(a[v][1], b[v][1])


def test_doubled_hamiltonian_is_symmetric_integer():
    rng = random.Random(67)
    for _ in range(20):
        n = rng.randint(1, 6)
        bits = tuple(rng.randint(0, 1) for _ in range(n))
        kind = rng.choice(["circle", "interval"])
        orient = rng.choice([1, -1])
        setup = (
            ChainSetup.circle(bits, orient)
            if kind == "circle"
            else ChainSetup.interval(bits, orient)
        )
        h2 = doubled_hamiltonian(setup)
        assert h2.dtype == np.int64
        assert np.array_equal(h2, h2.T)
        h = hamiltonian(setup)
        assert np.all(2 * h == h2)


def test_spectrum_multiplicities_binomial_oracle():
    # independent route: the edge terms commute, so the multiplicity of the
    # doubled eigenvalue lam is 2^(n-E) * C(E, (E+lam)/2), whatever the bits
    rng = random.Random(71)
    cases = []
    for n in range(1, 6):
        cases.append((n, tuple(rng.randint(0, 1) for _ in range(n)), True))
        cases.append((n, tuple(rng.randint(0, 1) for _ in range(max(1, n - 1))), False))
    cases.append((7, tuple(rng.randint(0, 1) for _ in range(7)), True))
    for n, bits, is_circle in cases:
        setup = (
            ChainSetup.circle(bits) if is_circle else ChainSetup.interval(bits)
        )
        n_v = setup.vertex_count
        e = len(bits)
        rep = ground_states(setup)
        got = {eig: mult for eig, mult in rep.spectrum}
        want = {}
        for k in range(e + 1):
            lam = 2 * k - e
            want[Fraction(lam, 2)] = (1 << (n_v - e)) * comb(e, k)
        assert got == want


def test_spectrum_is_symmetric_and_complete():
    rng = random.Random(73)
    for _ in range(10):
        n = rng.randint(1, 6)
        bits = tuple(rng.randint(0, 1) for _ in range(n))
        rep = ground_states(ChainSetup.circle(bits))
        total = sum(m for _, m in rep.spectrum)
        assert total == 1 << n
        table = dict(rep.spectrum)
        for eig, mult in rep.spectrum:
            assert table[-eig] == mult
        assert rep.min_eigenvalue == min(table)
        assert rep.ground_dimension == table[rep.min_eigenvalue]


@pytest.mark.parametrize("orientation", [1, -1])
def test_circle_ground_space_exhaustive(orientation):
    for n in range(1, 5):
        for bits in product((0, 1), repeat=n):
            rep = ground_states(ChainSetup.circle(bits, orientation))
            m = sum(bits)
            assert rep.ground_dimension == 1
            assert rep.ground_parity == ("even" if m % 2 else "odd")
            assert rep.min_eigenvalue == Fraction(-n, 2)


def test_interval_ground_space_exhaustive():
    for e in range(1, 4):
        for bits in product((0, 1), repeat=e):
            for orientation in (1, -1):
                rep = ground_states(ChainSetup.interval(bits, orientation))
                assert rep.ground_dimension == 2
                assert rep.ground_parity == "mixed"
                assert rep.min_eigenvalue == Fraction(-e, 2)


def test_interval_bimodule_check_exhaustive_small():
    for e in range(1, 4):
        for bits in product((0, 1), repeat=e):
            for orientation in (1, -1):
                rep = interval_bimodule_check(
                    ChainSetup.interval(bits, orientation)
                )
                assert rep.passed
                assert rep.ground_dimension == 2
                assert rep.parity_split == (1, 1)
                assert rep.boundary_commutes
                assert rep.plus_squares_to_identity
                assert rep.minus_squares_to_minus_identity
                assert rep.generators_anticommute
                assert rep.commutant_dimension == 1
                assert rep.irreducible


def test_bimodule_check_rejects_circles():
    with pytest.raises(ValueError):
        interval_bimodule_check(ChainSetup.circle((0, 0)))


def test_epsilon_profile_on_subsets():
    for n in range(1, 6):
        eps = epsilon_operator(ChainSetup.circle((0,) * n))
        assert np.array_equal(eps, np.diag(np.diag(eps)))
        for mask in range(1 << n):
            k = bin(mask).count("1")
            assert eps[mask, mask] == (-1) ** (n - k)


def test_epsilon_is_order_independent():
    rng = random.Random(79)
    for n in range(2, 6):
        setup = ChainSetup.circle(tuple(rng.randint(0, 1) for _ in range(n)))
        base = epsilon_operator(setup)
        order = list(range(n))
        rng.shuffle(order)
        assert np.array_equal(epsilon_operator(setup, vertex_order=order), base)


def test_epsilon_commutes_with_hamiltonian():
    rng = random.Random(83)
    for _ in range(10):
        n = rng.randint(1, 6)
        setup = ChainSetup.circle(
            tuple(rng.randint(0, 1) for _ in range(n)),
            rng.choice([1, -1]),
        )
        eps = epsilon_operator(setup)
        h2 = doubled_hamiltonian(setup)
        assert np.array_equal(eps @ h2, h2 @ eps)


def test_epsilon_rejects_intervals():
    with pytest.raises(HasBoundary):
        epsilon_operator(ChainSetup.interval((0,)))


def test_reference_module_relations_and_spectrum():
    rng = random.Random(89)
    for _ in range(12):
        n = rng.randint(1, 5)
        bits = tuple(rng.randint(0, 1) for _ in range(n))
        setup = ChainSetup.circle(bits, rng.choice([1, -1]))
        ref = reference_module(setup)
        dim = 1 << n
        ident = np.eye(dim, dtype=np.int64)
        gens = [(ref.c[v], 1) for v in range(n)] + [(ref.d[v], -1) for v in range(n)]
        for i, (g, sign) in enumerate(gens):
            assert np.array_equal(g @ g, sign * ident)
            for h, _ in gens[i + 1 :]:
                assert np.array_equal(g @ h, -(h @ g))
        # both modules carry the same Hamiltonian spectrum
        h2a = ref.doubled_hamiltonian
        assert np.array_equal(h2a, np.diag(np.diag(h2a)))
        spec_a = sorted(int(x) for x in np.diag(h2a))
        rep = ground_states(setup)
        spec_h = sorted(
            int(2 * eig) for eig, mult in rep.spectrum for _ in range(mult)
        )
        assert spec_a == spec_h


def test_reference_module_epsilon_profile():
    rng = random.Random(97)
    for n in range(1, 6):
        bits = tuple(rng.randint(0, 1) for _ in range(n))
        ref = reference_module(ChainSetup.circle(bits))
        for mask in range(1 << n):
            k = bin(mask).count("1")
            assert ref.epsilon[mask, mask] == (-1) ** (k - 1)


def test_reference_module_ground_state_correspondence():
    # the diagonal module has a unique ground vector, at the edge subset
    # complementary to the bits; the epsilon eigenvalues of the two ground
    # spaces agree, while the parity labels differ by the shift n-1
    for n in range(1, 5):
        for bits in product((0, 1), repeat=n):
            setup = ChainSetup.circle(bits)
            ref = reference_module(setup)
            diag = np.diag(ref.doubled_hamiltonian)
            ground_masks = np.nonzero(diag == diag.min())[0]
            assert len(ground_masks) == 1
            mask = int(ground_masks[0])
            assert mask == sum((1 - b) << i for i, b in enumerate(bits))
            eps_a = int(ref.epsilon[mask, mask])
            rep = ground_states(setup)
            eps_h = (-1) ** n * (1 if rep.ground_parity == "even" else -1)
            assert eps_h == eps_a
            k = bin(mask).count("1")
            shifted = "even" if (k + n - 1) % 2 == 0 else "odd"
            assert rep.ground_parity == shifted


def test_reference_module_rejects_intervals():
    with pytest.raises(HasBoundary):
        reference_module(ChainSetup.interval((0, 1)))


def test_vertex_cap():
    big = ChainSetup.circle((0,) * 11)
    with pytest.raises(CapExceeded):
        ground_states(big)
    assert ground_states(ChainSetup.circle((0,) * 3), cap=3)
    with pytest.raises(CapExceeded):
        ground_states(ChainSetup.circle((0,) * 4), cap=3)


def test_setup_validation():
    with pytest.raises(ValueError):
        ChainSetup.circle((0,), orientation=2)
    with pytest.raises(ValueError):
        ChainSetup.circle(())
    with pytest.raises(TypeError):
        ChainSetup("not a component")
