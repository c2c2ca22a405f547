import pytest
from fractions import Fraction
from src.hyperpaths.path_utils import (PathUtils, Direction, Support, EnhancedStep, MonotonePath,
                                       InvalidParameter, InvalidSupport, InvalidStepSequence, NonGenericOmega,
                                       HyperpathsError)



######   For class PathUtils   ######

def test_to_fraction():
    assert PathUtils.to_fraction(3) == Fraction(3)
    assert PathUtils.to_fraction("3/6") == Fraction(1, 2)
    assert PathUtils.to_fraction(" -2/5 ") == Fraction(-2, 5)
    assert PathUtils.to_fraction(Fraction(7, 2)) == Fraction(7, 2)

    with pytest.raises(InvalidParameter):
        PathUtils.to_fraction(0.5)          # Floats would bring rounding in

    with pytest.raises(InvalidParameter):
        PathUtils.to_fraction("0.5")

    with pytest.raises(InvalidParameter):
        PathUtils.to_fraction("1/0")

    with pytest.raises(InvalidParameter):
        PathUtils.to_fraction("abc")

    with pytest.raises(InvalidParameter):
        PathUtils.to_fraction(True)



def test_parse_rational_list():
    assert PathUtils.parse_rational_list("1, 2, 7/2") == (Fraction(1), Fraction(2), Fraction(7, 2))
    assert PathUtils.parse_rational_list("0,1,3,100") == (0, 1, 3, 100)

    with pytest.raises(InvalidParameter):
        PathUtils.parse_rational_list(" , ")



def test_format_rational():
    assert PathUtils.format_rational(Fraction(-2, 4)) == "-1/2"
    assert PathUtils.format_rational(3) == "3/1"
    assert PathUtils.format_rational(0) == "0/1"
    assert PathUtils.format_vector([1, Fraction(1, 3)]) == ["1/1", "1/3"]



def test_env_int(monkeypatch):
    monkeypatch.delenv("HYPERPATHS_MAX_PATHS", raising=False)
    assert PathUtils.env_int("HYPERPATHS_MAX_PATHS") is None

    monkeypatch.setenv("HYPERPATHS_MAX_PATHS", "25")
    assert PathUtils.env_int("HYPERPATHS_MAX_PATHS") == 25

    monkeypatch.setenv("HYPERPATHS_MAX_PATHS", "many")
    with pytest.raises(InvalidParameter):
        PathUtils.env_int("HYPERPATHS_MAX_PATHS")

    monkeypatch.setenv("HYPERPATHS_MAX_PATHS", "-3")
    with pytest.raises(InvalidParameter):
        PathUtils.env_int("HYPERPATHS_MAX_PATHS")



def test_env_flag(monkeypatch):
    monkeypatch.setenv("HYPERPATHS_DEBUG", "true")
    assert PathUtils.env_flag("HYPERPATHS_DEBUG")
    monkeypatch.setenv("HYPERPATHS_DEBUG", "0")
    assert not PathUtils.env_flag("HYPERPATHS_DEBUG")
    monkeypatch.delenv("HYPERPATHS_DEBUG")
    assert not PathUtils.env_flag("HYPERPATHS_DEBUG")



def test_path_json():
    path = MonotonePath(n=4, k=2, supports=(Support.of(4, [1, 2]), Support.of(4, [1, 4]), Support.of(4, [3, 4])))
    record = PathUtils.path_to_json(path)
    assert record == {"n": 4, "k": 2, "supports": [[1, 2], [1, 4], [3, 4]]}
    assert PathUtils.path_from_json(record) == path

    # Extra keys are ignored
    assert PathUtils.path_from_json({**record, "coherent": True}) == path

    with pytest.raises(InvalidParameter):
        PathUtils.path_from_json({"n": 4, "supports": [[1, 2]]})      # Missing "k"

    step = EnhancedStep(x=2, y=3, Z=(1,))
    assert PathUtils.step_to_json(step) == {"x": 2, "y": 3, "Z": [1]}
    assert PathUtils.step_from_json({"x": 2, "y": 3, "Z": [1]}) == step




######   For class Direction   ######

def test_direction_default():
    d = Direction.default(4)
    assert d.c == (1, 2, 3, 4)
    assert d.is_identity()
    assert d[1] == 1 and d[4] == 4
    assert d.n == 4

    with pytest.raises(InvalidParameter):
        Direction.default(1)



def test_direction_from_values():
    d = Direction.from_values((5, 1, 3))
    assert d.c == (1, 3, 5)
    assert d.permutation == (2, 3, 1)
    assert not d.is_identity()
    # Sorted position 1 (the entry 1) was originally index 2, and so on
    assert d.relabel(Support.of(3, [1, 3])) == (1, 2)
    # Vectors given in the original labels are read in sorted positions
    assert d.to_sorted(("a", "b", "c")) == ("b", "c", "a")
    assert d.to_sorted((50, 10, 30)) == (10, 30, 50)
    with pytest.raises(InvalidParameter):
        d.to_sorted((1, 2))

    d = Direction.from_values(["1/2", "1/3"])
    assert d.c == (Fraction(1, 3), Fraction(1, 2))

    # NEGATIVE tests
    with pytest.raises(InvalidParameter):
        Direction.from_values((1, 1))           # Not generic

    with pytest.raises(InvalidParameter):
        Direction(c=(Fraction(2), Fraction(1)))     # Must be given sorted

    with pytest.raises(InvalidParameter):
        Direction.from_values((7,))




######   For class Support   ######

def test_support():
    s = Support.of(4, [3, 1])
    assert s.elems == (1, 3)
    assert s.k == 2
    assert 3 in s and 2 not in s
    assert str(s) == "{1,3}"
    assert s.swap(1, 2) == Support.of(4, [2, 3])

    assert Support.of(4, [1, 2]) < Support.of(4, [1, 3]) < Support.of(4, [2, 3])

    # NEGATIVE tests
    with pytest.raises(InvalidSupport):
        Support.of(4, [1, 5])

    with pytest.raises(InvalidSupport):
        Support.of(4, [2, 2])

    with pytest.raises(InvalidSupport):
        Support(n=4, elems=(3, 1))

    with pytest.raises(InvalidSupport):
        s.swap(2, 4)        # 2 is not in the support

    with pytest.raises(InvalidSupport):
        s.swap(1, 3)        # 3 is already in the support




######   For class EnhancedStep   ######

def test_enhanced_step():
    step = EnhancedStep(x=2, y=3, Z=(4, 1))
    assert step.Z == (1, 4)
    assert step.is_improving()
    assert str(step) == "(2->3 over {1,4})"
    assert not EnhancedStep(x=3, y=2, Z=(1,)).is_improving()

    with pytest.raises(InvalidStepSequence):
        EnhancedStep(x=2, y=2, Z=(1,))

    with pytest.raises(InvalidStepSequence):
        EnhancedStep(x=2, y=3, Z=(2,))




######   For class MonotonePath   ######

def test_monotone_path():
    path = MonotonePath(n=4, k=2, supports=[Support.of(4, [1, 2]), Support.of(4, [1, 4]), Support.of(4, [3, 4])])
    assert path.length == 3
    assert path.key() == ((1, 2), (1, 4), (3, 4))
    assert str(path) == "({1,2},{1,4},{3,4})"



def test_monotone_path_invalid():
    s = lambda *e: Support.of(4, e)

    with pytest.raises(InvalidStepSequence):
        MonotonePath(n=4, k=2, supports=(s(1, 3), s(3, 4)))           # Doesn't start at v_min

    with pytest.raises(InvalidStepSequence):
        MonotonePath(n=4, k=2, supports=(s(1, 2), s(1, 4)))           # Doesn't end at v_max

    with pytest.raises(InvalidStepSequence):
        MonotonePath(n=4, k=2, supports=(s(1, 2), s(3, 4)))           # Not an edge

    with pytest.raises(InvalidStepSequence):
        MonotonePath(n=4, k=2, supports=(s(1, 2), s(2, 4), s(1, 4), s(3, 4)))      # {2,4} -> {1,4} goes down

    with pytest.raises(InvalidStepSequence):
        MonotonePath(n=4, k=4, supports=(Support.of(4, [1, 2, 3, 4]),) * 2)

    with pytest.raises(InvalidStepSequence):
        MonotonePath(n=4, k=2, supports=(s(1, 2),))



def test_error_hierarchy():
    ex = NonGenericOmega("tie", at=Support.of(3, [1]), tied_pair=(Support.of(3, [2]), Support.of(3, [3])))
    assert isinstance(ex, HyperpathsError)
    assert ex.at == Support.of(3, [1])
    assert ex.tied_pair[1] == Support.of(3, [3])
