import pytest

from wordcycles.words import (
    cyclic_reduce,
    format_word,
    free_reduce,
    invert,
    is_cyclically_reduced,
    is_reduced,
    is_simple,
    parse_word,
    primitive_root,
    require_simple_cyclic,
)


def w(text):
    return parse_word(text)


class TestParsing:
    def test_roundtrip(self):
        assert format_word(w("abAB")) == "abAB"
        assert w("abAB") == (1, 2, -1, -2)

    def test_empty(self):
        assert w("") == ()
        assert format_word(()) == ""

    def test_numeric_generators(self):
        assert w("a30") == (30,)
        assert w("A30") == (-30,)
        assert format_word((27, -30)) == "a27A30"
        assert w(format_word((27, -30))) == (27, -30)

    def test_whitespace_ignored(self):
        assert w("a b A B") == (1, 2, -1, -2)

    def test_bad_input(self):
        with pytest.raises(ValueError):
            w("a-b")
        with pytest.raises(ValueError):
            w("b3")  # numeric index must use 'a'/'A'
        with pytest.raises(ValueError):
            w("a0")


class TestFreeReduce:
    def test_forced_cancellation(self):
        assert free_reduce(w("abB")) == w("a")

    def test_full_cancellation(self):
        assert free_reduce(w("aA")) == ()

    def test_identity_on_reduced(self):
        assert free_reduce(w("abAB")) == w("abAB")

    def test_nested(self):
        assert free_reduce(w("abBAc")) == w("c")


class TestCyclicReduce:
    def test_single_conjugating_letter(self):
        assert cyclic_reduce(w("baB")) == (w("a"), w("b"))

    def test_already_cyclically_reduced(self):
        assert cyclic_reduce(w("ab")) == (w("ab"), ())

    def test_empty(self):
        assert cyclic_reduce(()) == ((), ())

    def test_conjugation_identity(self):
        core, conj = cyclic_reduce(w("bcaCB"))
        assert core == w("a")
        assert free_reduce(conj + core + invert(conj)) == free_reduce(w("bcaCB"))


class TestPrimitiveRoot:
    def test_visible_square(self):
        assert primitive_root(w("abab")) == (w("ab"), 2)

    def test_primitive_odd_word(self):
        # oracle: check every divisor of the length against rotation equality
        word = w("aba")
        for d in (1,):
            assert word[:d] * (3 // d) != word
        assert primitive_root(word) == (word, 1)

    def test_visible_cube(self):
        assert primitive_root(w("aabaabaab")) == (w("aab"), 3)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            primitive_root(())

    def test_rejects_non_cyclically_reduced(self):
        with pytest.raises(ValueError):
            primitive_root(w("abA"))

    def test_simple(self):
        assert is_simple(w("aba"))
        assert not is_simple(w("abab"))


class TestInvert:
    def test_basic(self):
        assert invert(w("ab")) == w("BA")
        assert invert(()) == ()
        assert invert(w("aBc")) == w("CbA")

    def test_involution(self):
        word = w("aBcAb")
        assert invert(invert(word)) == word


class TestPredicates:
    def test_reduced(self):
        assert is_reduced(w("abAB"))
        assert not is_reduced(w("abBA"))

    def test_cyclically_reduced(self):
        assert is_cyclically_reduced(w("ab"))
        assert not is_cyclically_reduced(w("abA"))

    def test_require_simple_cyclic_messages(self):
        with pytest.raises(ValueError, match="nonempty"):
            require_simple_cyclic(())
        with pytest.raises(ValueError, match="cyclically reduced"):
            require_simple_cyclic(w("abA"))
        with pytest.raises(ValueError, match="proper power"):
            require_simple_cyclic(w("abab"))
