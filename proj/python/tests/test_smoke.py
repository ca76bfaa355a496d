import pytest

import factorlab as fl


def test_normal_forms():
    x = fl.normalize("b a a b")
    assert str(x) == "a^2"
    assert x == fl.NormalForm(n=2)
    assert len(x) == 2
    assert fl.equal("a^4 b", "b a^4")
    assert not fl.equal("a b", "b a")
    y = fl.normalize("b a") * fl.normalize("a b")
    assert y == x
    assert fl.left_quotient(fl.normalize("b"), fl.normalize("a a")) == fl.normalize("a a b")
    assert fl.left_quotient(fl.normalize("b"), fl.normalize("a")) is None
    with pytest.raises(ValueError):
        fl.normalize("a c")


def test_factorization():
    assert fl.is_atom(fl.normalize("a")) == "Atom"
    assert fl.is_atom(fl.normalize("")) == "Unit"
    lengths, exhausted = fl.length_set(fl.normalize("a a"), 8)
    assert lengths == {2, 4, 6, 8}
    assert exhausted
    assert fl.accp_strict_inclusions(20) == 20
    assert fl.in_all_sbn(fl.normalize("a^2 b^3")).startswith("Yes")
    assert [sum(fl.count_elements_by_length(n)) for n in range(4)] == [1, 3, 7, 15]


def test_algebra():
    assert fl.alg("mul", "1 + a", "1 + b") == "1 * e + 1 * a^1 + 1 * b^1 + 1 * a^1 b^1"
    assert fl.alg("deg", "b + 2 * a^3") == "3"
    assert fl.alg("divides", "1 + b", "b + b^2", cap=6) == "Yes(1 * b^1)"
    assert fl.alg("add", "a", "6 * a", field="F_7") == "0"


def test_ore_and_growth():
    report = fl.skew_check("qplane:q=2", samples=100, seed=3, threads=2)
    assert report["samples"] == 100
    assert report["mu"] == "deg_y"
    assert fl.filt_check(50)["violations"] == 0
    assert fl.ore_mul("weyl", "(y)", "x") == "x*(y) + (1)"
    assert fl.ore_mul("qtorus:q=2", "(y)", "x^-1") == "x^-1*(1/2*y)"
    assert fl.growth("free", 4) == [1, 3, 7, 15, 31]
    assert fl.growth("S", 12)[-1] == 3314
    assert fl.s_growth_by_words(8) == fl.growth("S", 8)
    assert fl.classify_growth(fl.growth("free-commutative", 20)) == "polynomial(2)"


def test_pi_and_cli():
    chain = fl.pi_peel_chain("1; x; 1; x*y", 5)
    assert len(chain) == 5
    assert all(ok for _, ok in chain)
    assert chain[-1][0] == "1; x; y^-5; x*y^-4"
    code, out, _ = fl.run_cli(["normalize", "b a a b"])
    assert (code, out) == (0, "a^2\n")
    assert fl.run_cli(["lenfn-check"])[0] == 1
    assert fl.run_cli(["nope"])[0] == 2
