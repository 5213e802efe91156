import itertools

import numpy as np
import pytest

from zeroseq.extremal import (
    BlockFamilySpec,
    GapFamilySpec,
    enumerate_block_family,
    enumerate_gap_family,
    is_block_family_member,
    is_gap_family_member,
)
from zeroseq.oracle import gap_extremal_set
from zeroseq.seq import SignedSeq, parse_seq
from zeroseq.thresholds import ParameterError, block_threshold, gap_threshold


def brute_block_extremal(k, t, q):
    """Length N-1, |total| = q, every k-window of |weight| > t; by listing."""
    n = block_threshold(k, t, q) - 1
    out = set()
    for vals in itertools.product([-1, 1], repeat=n):
        if abs(sum(vals)) != q:
            continue
        if all(abs(sum(vals[i:i + k])) > t for i in range(n - k + 1)):
            out.add("".join("+" if v > 0 else "-" for v in vals))
    return out


def texts(family):
    return {f.to_text() for f in family}


def test_block_family_spec_layout():
    spec = BlockFamilySpec.of(6, 0, 1)
    assert (spec.n, spec.m, spec.r, spec.s_residue) == (9, 1, 3, 1)
    assert [list(r) for r in spec.runs] == [[1, 2, 3], [7, 8, 9]]


def test_block_family_spec_rejects_trivial():
    with pytest.raises(ParameterError):
        BlockFamilySpec.of(4, 2, 0)


def test_block_family_zero_sum_example():
    fam = enumerate_block_family(6, 0, 0)
    assert texts(fam) == {"--++++--", "++----++"}


@pytest.mark.parametrize(
    "args,size", [((6, 0, 0), 2), ((6, 0, 1), 12), ((7, 1, 4), 2)]
)
def test_block_family_sizes(args, size):
    assert len(enumerate_block_family(*args)) == size


@pytest.mark.parametrize(
    "args", [(4, 0, 1), (4, 0, 2), (6, 0, 0), (6, 0, 1), (5, 1, 2), (8, 2, 2), (7, 1, 1), (7, 1, 2)]
)
def test_block_family_equals_brute_force(args):
    assert texts(enumerate_block_family(*args)) == brute_block_extremal(*args)


def test_block_family_members_recognised():
    k, t, q = 6, 0, 1
    fam = texts(enumerate_block_family(k, t, q))
    n = block_threshold(k, t, q) - 1
    for vals in itertools.product([-1, 1], repeat=n):
        f = SignedSeq(np.array(vals))
        assert is_block_family_member(f, k, t, q) == (f.to_text() in fam)


def test_block_family_is_closed_under_negation():
    for args in [(6, 0, 1), (8, 0, 2), (7, 1, 4)]:
        fam = texts(enumerate_block_family(*args))
        flip = str.maketrans("+-", "-+")
        assert {x.translate(flip) for x in fam} == fam


def test_block_member_rejects_wrong_length():
    with pytest.raises(ParameterError):
        is_block_family_member(parse_seq("+-"), 6, 0, 0)


def test_gap_family_spec_layout():
    spec = GapFamilySpec.of(2, 8)
    assert spec.n == gap_threshold(2, 8) - 1
    assert spec.s_residue == 1
    assert all(len(r) == spec.r for r in spec.runs)
    assert all(len(p) == spec.b - spec.r for p in spec.plateaus)


@pytest.mark.parametrize("args", [(2, 4), (1, 6), (2, 7)])
def test_gap_family_spec_rejects(args):
    with pytest.raises(ParameterError):
        GapFamilySpec.of(*args)


@pytest.mark.parametrize("args,size", [((2, 6), 2), ((3, 6), 2), ((2, 8), 62)])
def test_gap_family_sizes(args, size):
    assert len(enumerate_gap_family(*args)) == size


@pytest.mark.parametrize("d,k", [(2, 6), (3, 6), (2, 8), (3, 8)])
def test_gap_family_equals_oracle(d, k):
    n = gap_threshold(d, k) - 1
    weight = (d - 1) * n // (d + 1)
    assert texts(enumerate_gap_family(d, k)) == gap_extremal_set(d, k, n, weight)


def test_gap_family_members_recognised():
    d, k = 2, 8
    fam = enumerate_gap_family(d, k)
    for f in fam:
        assert is_gap_family_member(f, d, k)
    n = fam[0].n
    rng = np.random.default_rng(5)
    famtext = texts(fam)
    for _ in range(500):
        f = SignedSeq(rng.choice([-1, 1], n))
        assert is_gap_family_member(f, d, k) == (f.to_text() in famtext)
    # flipping one plateau entry breaks membership
    v = fam[0].values.copy()
    spec = GapFamilySpec.of(d, k)
    v[spec.plateaus[0].start - 1] *= -1
    assert not is_gap_family_member(SignedSeq(v), d, k)


@pytest.mark.parametrize("args", [(6, 0, 1), (8, 0, 2), (7, 1, 4), (8, 2, 2)])
def test_block_members_have_no_block(args):
    from zeroseq.search import scan_bounded_block

    k, t, q = args
    for f in enumerate_block_family(k, t, q):
        assert abs(f.total) == q
        assert scan_bounded_block(f, k, t) is None


@pytest.mark.parametrize("d,k", [(2, 6), (3, 6), (2, 8)])
def test_gap_members_have_no_block(d, k):
    from zeroseq.search import find_zs_gap_block

    for f in enumerate_gap_family(d, k):
        assert abs(f.total) * (d + 1) == (d - 1) * f.n
        assert find_zs_gap_block(f, d, k) is None
        assert is_gap_family_member(-f, d, k)
