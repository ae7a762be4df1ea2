import pytest

from alexmod.arith import QQ
from alexmod.laurent import alexander_polynomial, module_from_automorphism
from alexmod.linalg import FieldMatrix, charpoly
from alexmod.monodromy import (
    FreeWord,
    MonodromyRep,
    commutator,
    conjugacy_check,
    evaluate_word,
    identity_rep,
    monodromy_at_infinity,
    parse_word,
    tensor_identity_lift,
    winding,
)
from alexmod.worked_examples import h_family_rep, jordan_forms

from conftest import rand_invertible, rand_rep


def _rand_word(rng, g, length):
    return FreeWord(tuple((rng.randrange(g), rng.choice([1, -1])) for _ in range(length)))


def test_parse_word():
    w = parse_word("g1 g2^-1 g1^2", ("a", "b"))
    assert w.letters == ((0, 1), (1, -1), (0, 1), (0, 1))
    assert str(w) == "g1 g2^-1 g1 g1"
    assert parse_word("b^-2 a", ("a", "b")).letters == ((1, -1), (1, -1), (0, 1))
    with pytest.raises(ValueError):
        parse_word("x1", ())
    with pytest.raises(ValueError):
        parse_word("g0", ())


def test_word_reduction():
    w = parse_word("g1 g2 g2^-1 g1^-1 g3")
    assert w.reduced().letters == ((2, 1),)


def test_evaluation_is_a_homomorphism(rng):
    for _ in range(30):
        rep = rand_rep(rng)
        u, v = _rand_word(rng, rep.g, 4), _rand_word(rng, rep.g, 3)
        assert evaluate_word(rep, u * v) == evaluate_word(rep, u) @ evaluate_word(rep, v)
        assert (evaluate_word(rep, u) @ evaluate_word(rep, u.inverse())).is_identity()
        assert evaluate_word(rep, u.reduced()) == evaluate_word(rep, u)


def test_winding(rng):
    rep = h_family_rep()
    assert winding(rep, parse_word("g2 g2 g1^-1 g2^-1")) == 1
    for _ in range(20):
        u, v = _rand_word(rng, 2, 3), _rand_word(rng, 2, 4)
        assert winding(rep, commutator(u, v)) == 0
        assert winding(rep, u * v) == winding(rep, u) + winding(rep, v)


def test_conjugacy_examples():
    tinf = jordan_forms()["T_inf"]
    assert conjugacy_check(monodromy_at_infinity(h_family_rep()), tinf)
    assert not conjugacy_check(monodromy_at_infinity(h_family_rep(b=0)), tinf)
    assert not conjugacy_check(monodromy_at_infinity(h_family_rep(c=0)), tinf)
    # a != 0 increases the rank of m1 m2 - I, so the data is no longer admissible
    assert not conjugacy_check(monodromy_at_infinity(h_family_rep(a=5)), tinf)
    with pytest.raises(ValueError, match="size mismatch"):
        conjugacy_check(FieldMatrix.identity(2), FieldMatrix.identity(3))


def test_conjugacy_random(rng):
    for _ in range(20):
        A = rand_invertible(rng, rng.randint(1, 4))
        P = rand_invertible(rng, A.nrows)
        assert conjugacy_check(A, P @ A @ P.inverse())


def test_rep_validation():
    I = FieldMatrix.identity(2)
    with pytest.raises(ValueError, match="not invertible"):
        MonodromyRep((FieldMatrix([[1, 0], [0, 0]]),), ("a",))
    with pytest.raises(ValueError, match="over Z"):
        MonodromyRep((FieldMatrix([[2, 0], [0, 1]]),), ("a",), coefficients="integers")
    with pytest.raises(ValueError, match="unique"):
        MonodromyRep((I, I), ("a", "a"))
    with pytest.raises(KeyError):
        h_family_rep().index_of("7")
    with pytest.raises(ValueError):
        h_family_rep(a=1, case=1)


def test_tensor_lift():
    rep = h_family_rep()
    lifted = tensor_identity_lift(rep, 2, n_shift=1)
    assert lifted.fiber_rank == 8 and lifted.n == 4 and lifted.b_n_F == 8
    for A, B in zip(rep.matrices, lifted.matrices):
        assert charpoly(B) == charpoly(A) ** 2
    M = module_from_automorphism(lifted.matrices[0])
    assert alexander_polynomial(M) == charpoly(rep.matrices[0]) ** 2


def test_identity_rep():
    rep = identity_rep(3, g=2, field=QQ)
    assert rep.g == 2 and rep.fiber_rank == 3
    assert monodromy_at_infinity(rep).is_identity()


def test_conjugacy_implies_equal_data(rng):
    from conftest import block_jordan

    for _ in range(40):
        n = rng.randint(1, 4)
        A, B = block_jordan(rng, n), block_jordan(rng, n)
        if conjugacy_check(A, B):
            assert charpoly(A) == charpoly(B)
            assert module_from_automorphism(A) == module_from_automorphism(B)
        else:
            assert module_from_automorphism(A) != module_from_automorphism(B)
