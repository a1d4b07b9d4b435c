import pytest

import raagcrypt as rc

EDGE = "vertices a b\nedge a b\n"
FREE = "vertices a b\n"
TRIANGLE = "vertices r g b\nedge r g\nedge g b\nedge r b\n"


def test_word_problem():
    assert rc.is_trivial(EDGE, "a b a^-1 b^-1")
    assert not rc.is_trivial(FREE, "a b a^-1 b^-1")
    assert rc.oracle_is_trivial(EDGE, "a b a^-1 b^-1")
    assert rc.is_trivial(FREE, "")


def test_samplers():
    g = rc.random_graph(6, 0.5, 3)
    w = rc.sample_trivial_word(g, 20, 1)
    assert rc.is_trivial(g, w)
    assert w == rc.sample_trivial_word(g, 20, 1)
    assert not rc.is_trivial(g, rc.sample_nontrivial_word(g, 15, 1))


def test_errors():
    with pytest.raises(ValueError):
        rc.is_trivial(EDGE, "a^2")
    with pytest.raises(ValueError):
        rc.is_trivial("vertices a\nedge a a\n", "a")
    assert rc.validate_graph("vertices a\nedge a b\n") == ["dangling endpoint: b"]


def test_triangle_colouring():
    c5 = "vertices 1 2 3 4 5\nedge 1 2\nedge 2 3\nedge 3 4\nedge 4 5\nedge 1 5\n"
    k4 = "vertices w x y z\nedge w x\nedge w y\nedge w z\nedge x y\nedge x z\nedge y z\n"
    f = rc.find_graph_homomorphism(c5, TRIANGLE)
    assert f is not None and rc.verify_graph_homomorphism(c5, TRIANGLE, f)
    assert rc.find_graph_homomorphism(k4, TRIANGLE) is None


def test_sharing():
    parts = rc.split_bits_nn("101", 2, 7)
    assert rc.reconstruct_nn(parts) == "101"
    assert rc.reconstruct_nn(["110", "011"]) == "101"
    words = rc.encode_column(EDGE, "1010", 10, 4)
    assert rc.decode_column(EDGE, words) == "1010"
    points = rc.shamir_split(5, 13, 3, 5, 2)
    assert rc.lagrange_reconstruct(points[2:], 13, 3) == 5
    assert rc.lagrange_reconstruct([(1, 5), (2, 0)], 7, 2) == 3


def test_authentication():
    t = rc.run_protocol("sub", 1, 3, "honest", 1, 2).splitlines()
    assert len(t) == 4 and t[-1] == "accept true"
    accepted, trials = rc.simulate("hom", 2, "honest", 2, 20, 9)
    assert (accepted, trials) == (20, 20)
    accepted, trials = rc.simulate("hom", 2, "cheat-guess-0", 1, 2000, 9)
    assert abs(accepted / trials - 0.5) < 0.06
