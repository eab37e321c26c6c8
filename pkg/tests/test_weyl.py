import itertools
import math

import pytest
from hypothesis import given, strategies as st

from weylcode.weyl import (
    DescendingCode,
    Permutation,
    ReducedWord,
    Root,
    RootSet,
    act_on_root,
    compress_cycle,
    cycle_action,
    cycle_letters,
    decode,
    encode,
    enumerate_codes,
    length,
    negative_simple_set,
    parse_permutation,
    parse_root,
    parse_word,
    positive_roots,
    simple_roots,
)

from oracles import act_vector, bfs_lengths, inversions, root_vector, word_perm


def perms(max_n=7):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(range(1, n + 1)).map(lambda p: Permutation(tuple(p)))
    )


# --- decoding examples for S_3 ----------------------------------------------

@pytest.mark.parametrize("code, letters", [
    ((2, 3), ()),
    ((2, 2), (2,)),
    ((2, 1), (2, 1)),
    ((1, 3), (1,)),
    ((1, 2), (1, 2)),
    ((1, 1), (1, 2, 1)),
])
def test_rank_two_table(code, letters):
    word, perm = decode(DescendingCode(2, code))
    assert word.letters == letters
    assert perm.images == word_perm(letters, 3)


def test_decode_rejects_out_of_range():
    with pytest.raises(ValueError):
        DescendingCode(2, (3, 1))
    with pytest.raises(ValueError):
        DescendingCode(2, (0, 1))
    with pytest.raises(ValueError):
        DescendingCode(2, (1,))


@pytest.mark.parametrize("rank", range(1, 6))
def test_decode_is_bijective_and_reduced(rank):
    lengths = bfs_lengths(rank + 1)
    seen = set()
    for code in enumerate_codes(rank):
        word, perm = decode(code)
        assert perm.images == word_perm(word.letters, rank + 1)
        assert len(word) == lengths[perm.images] == code.length()
        seen.add(perm.images)
    assert len(seen) == math.factorial(rank + 1)


@pytest.mark.parametrize("rank", range(1, 6))
def test_encode_inverts_decode_against_lookup_table(rank):
    table = {decode(c)[1].images: c for c in enumerate_codes(rank)}
    for images in itertools.permutations(range(1, rank + 2)):
        assert encode(Permutation(images)) == table[images]


def test_encode_examples():
    assert encode(Permutation.identity(4)) == DescendingCode.identity(4)
    assert encode(Permutation.simple_reflection(1, 2)).entries == (1, 3)
    for r in range(1, 8):
        assert encode(Permutation.longest(r)).entries == (1,) * r


@given(perms())
def test_length_is_inversion_count(w):
    assert length(w) == w.length() == inversions(w.images)
    assert encode(w).length() == w.length()


def test_length_examples():
    assert Permutation.identity(3).length() == 0
    assert Permutation.longest(5).length() == 15
    assert Permutation.from_word([1, 2], 2).length() == 2


@given(perms(), st.data())
def test_multiplication_matches_composition(w, data):
    v = Permutation(tuple(data.draw(st.permutations(range(1, w.rank + 2)))))
    assert (w * v)(1) == w(v(1))
    assert all((w * v)(x) == w(v(x)) for x in range(1, w.rank + 2))
    assert (w * w.inverse()).is_identity()


def test_word_parsing_and_rendering():
    assert parse_word("s3 s2 s1") == (3, 2, 1)
    assert parse_word("3 2 1") == (3, 2, 1)
    assert parse_word("e") == ()
    with pytest.raises(ValueError):
        parse_word("s3s2")
    assert str(ReducedWord(2, (1, 2, 1))) == "s1 s2 s1"
    assert str(ReducedWord(2, ())) == "e"
    assert ReducedWord(3, (1, 2, 1)).is_reduced()
    assert not ReducedWord(3, (1, 1)).is_reduced()
    with pytest.raises(ValueError):
        ReducedWord(2, (3,))
    assert parse_permutation("3 1 2") == Permutation((3, 1, 2))
    assert str(Permutation((3, 1, 2))) == "3 1 2"
    with pytest.raises(ValueError):
        parse_permutation("1 1 2")


def test_json_shapes():
    assert DescendingCode(2, (2, 3)).to_json() == {"rank": 2, "code": [2, 3]}
    assert Permutation((2, 1)).to_json() == {"images": [2, 1]}
    assert ReducedWord(2, (1, 2)).to_json()["letters"] == [1, 2]


def test_compressed_cycles():
    assert compress_cycle(cycle_letters(3, 1)) == "s321"
    assert compress_cycle(cycle_letters(3, 4)) == "e"
    assert compress_cycle((11, 10, 9)) == "s(11.10.9)"
    with pytest.raises(ValueError):
        cycle_letters(3, 5)


# --- roots ------------------------------------------------------------------

def test_root_basics():
    a = Root.simple(2)
    assert (a.i, a.j) == (2, 3) and a.is_simple and a.is_positive
    assert (-a).is_negative and not (-a).is_simple
    assert Root(1, 4).coefficients(4) == (1, 1, 1, 0)
    assert Root(4, 1).coefficients(4) == (-1, -1, -1, 0)
    assert str(Root(1, 5)) == "a1+a2+a3+a4"
    assert str(-Root.span(2, 4)) == "-(a2+a3+a4)"
    assert str(Root(2, 1)) == "-a1"
    assert parse_root("a3") == Root(3, 4)
    assert parse_root("4,2") == Root(4, 2)
    with pytest.raises(ValueError):
        Root(2, 2)
    with pytest.raises(ValueError):
        parse_root("b2")


@pytest.mark.parametrize("rank", range(1, 7))
def test_root_counts(rank):
    assert len(positive_roots(rank)) == rank * (rank + 1) // 2
    assert len(simple_roots(rank)) == rank
    assert all(r.height == sum(r.coefficients(rank)) for r in positive_roots(rank))


def test_act_examples():
    s1 = Permutation.simple_reflection(1, 2)
    assert act_on_root(s1, Root.simple(1)) == -Root.simple(1)
    w = Permutation.from_word([4, 3, 2], 5)
    assert str(act_on_root(w, Root.simple(1))) == "a1+a2+a3+a4"
    assert act_on_root(w, Root.simple(3)) == Root.simple(2)


@given(perms(6), st.data())
def test_action_matches_linear_action_on_vectors(w, data):
    n = w.rank + 1
    if n < 2:
        return
    i, j = data.draw(st.lists(st.integers(1, n), min_size=2, max_size=2, unique=True))
    image = act_on_root(w, Root(i, j))
    assert root_vector(image.i, image.j, n) == act_vector(w.images, root_vector(i, j, n))


def test_cycle_action_examples():
    assert cycle_action(2, 4, 2) == -Root.span(2, 4)
    assert cycle_action(2, 4, 5) == Root.span(4, 5)
    assert cycle_action(2, 4, 6) == Root.simple(6)
    with pytest.raises(ValueError):
        cycle_action(3, 2, 1)
    with pytest.raises(ValueError):
        cycle_action(1, 5, 1, rank=4)


@pytest.mark.parametrize("rank", range(2, 9))
def test_cycle_action_closed_form(rank):
    for i in range(1, rank + 1):
        for j in range(i, rank + 1):
            w = word_perm(tuple(range(j, i - 1, -1)), rank + 1)
            for k in range(1, rank + 1):
                got = cycle_action(i, j, k, rank=rank)
                assert root_vector(got.i, got.j, rank + 1) == act_vector(w, root_vector(k, k + 1, rank + 1))


def test_negative_simple_set_examples():
    delta = simple_roots(2)
    assert len(negative_simple_set(Permutation.identity(2), delta)) == 0
    assert negative_simple_set(Permutation.longest(2), delta) == delta
    w = Permutation.from_word([2, 1], 2)
    assert set(negative_simple_set(w, delta)) == {Root.simple(1)}
    with pytest.raises(ValueError):
        negative_simple_set(w, RootSet(2, frozenset({Root(1, 3)})))


@pytest.mark.parametrize("rank", range(1, 6))
def test_cycle_products_bound_negative_simple_roots(rank):
    for i in range(1, rank + 1):
        for j in range(i, rank + 1):
            for ks in itertools.product(*[range(1, t + 2) for t in range(i, j + 1)]):
                letters = [x for t, k in zip(range(i, j + 1), ks) for x in cycle_letters(t, k)]
                w = Permutation(word_perm(letters, rank + 1))
                assert len(negative_simple_set(w, simple_roots(rank))) <= j - i + 1
