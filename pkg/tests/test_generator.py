import pytest
from collections import Counter
from src.hyperpaths.generator import (CoherentGenerator, EndingType, TYPE_I, TYPE_II, TYPE_III,
                                      CHILD_TYPES, CHILD_LENGTH_CHANGE, extend_batch)
from src.hyperpaths.lattice_paths import LatticePath, LatticePaths
from src.hyperpaths.coherence import CoherenceOracle
from src.hyperpaths.counting import CoherentCounting
from src.hyperpaths.hypersimplex import HypersimplexCore
from src.hyperpaths.path_utils import InvalidParameter, ClassificationError, Unsupported
from utilities.comparisons import compare_path_collections



# Provide a single-threaded generator that can be used by the various tests that need it
@pytest.fixture(scope="module")
def gen():
    yield CoherentGenerator(threads=1, debug=False)


@pytest.fixture(scope="module")
def paths4(gen):
    yield gen.generate_coherent(4)



def lattice(n, *points):
    return LatticePath(n=n, k=2, points=tuple(points))



#################  CRITERION AND CLASSIFICATION  #################

def test_is_coherent_lattice_path():
    # The 2 non-coherent paths of size 4
    assert not CoherentGenerator.is_coherent_lattice_path(lattice(4, (2, 1), (3, 1), (3, 2), (4, 2), (4, 3)))
    assert not CoherentGenerator.is_coherent_lattice_path(lattice(4, (2, 1), (3, 1), (4, 1), (4, 2), (4, 3)))

    assert CoherentGenerator.is_coherent_lattice_path(lattice(4, (2, 1), (4, 1), (4, 2), (4, 3)))
    assert CoherentGenerator.is_coherent_lattice_path(lattice(3, (2, 1), (2, 3)))      # A single step

    with pytest.raises(Unsupported):
        CoherentGenerator.is_coherent_lattice_path(LatticePath(n=3, k=1, points=((1,), (3,))))



def test_is_coherent_lattice_path_matches_criterion():
    for n in (3, 4, 5, 6):
        for p in HypersimplexCore(n, 2).enumerate_monotone_paths():
            lp = LatticePaths.lattice_path_of(p)
            assert CoherentGenerator.is_coherent_lattice_path(lp) == bool(CoherenceOracle.satisfies_criterion(p))



def test_classify(paths4):
    ending = CoherentGenerator.classify(lattice(4, (2, 1), (4, 1), (4, 2), (4, 3)))
    assert ending == EndingType(tag=TYPE_II, x=2, ys=(1, 2, 3))
    assert str(ending) == "TypeII(x=2, ys=(1, 2, 3))"

    ending = CoherentGenerator.classify(lattice(4, (2, 1), (2, 3), (4, 3)))
    assert ending == EndingType(tag=TYPE_I, x=2)
    assert str(ending) == "TypeI(x=2)"

    ending = CoherentGenerator.classify(lattice(4, (2, 1), (2, 3), (2, 4), (3, 4)))
    assert ending == EndingType(tag=TYPE_III, x=3, ys=(2,))

    ending = CoherentGenerator.classify(lattice(4, (2, 1), (4, 1), (4, 3)))
    assert ending == EndingType(tag=TYPE_III, x=2, ys=(1,))

    # Exactly one type for every coherent path of size 4
    assert all(CoherentGenerator.classify(lp).tag in (TYPE_I, TYPE_II, TYPE_III) for lp in paths4)



def test_classify_invalid():
    with pytest.raises(InvalidParameter):
        CoherentGenerator.classify(lattice(3, (2, 1), (3, 1), (3, 2)))

    with pytest.raises(ClassificationError):
        # Non-coherent: (3 -> 4 over 1), (1 -> 2 over 4), (2 -> 3 over 4) with x = n-1
        CoherentGenerator.classify(lattice(4, (2, 1), (3, 1), (4, 1), (4, 2), (4, 3)))

    with pytest.raises(Unsupported):
        CoherentGenerator.classify(LatticePath(n=4, k=3, points=((3, 2, 1), (4, 2, 1), (4, 2, 3))))



def test_census(paths4, gen):
    assert CoherentGenerator.census(paths4) == (3, 1, 4)
    assert CoherentGenerator.census(gen.generate_coherent(5)) == (13, 6, 14)

    for n in range(4, 8):
        state = CoherentCounting.count_vector(n)
        assert CoherentGenerator.census(gen.generate_coherent(n)) == (state.t, state.q, state.c)




#################  EXTENSION  #################

def test_extend(paths4, gen):
    expected = {TYPE_I: 3, TYPE_II: 4, TYPE_III: 5}
    for parents in (paths4, gen.generate_coherent(5), gen.generate_coherent(6)):
        for parent in parents:
            tag = CoherentGenerator.classify(parent).tag
            children = CoherentGenerator.extend(parent)
            assert len(children) == expected[tag]
            assert len(set(children)) == len(children)

            for child, child_tag, change in zip(children, CHILD_TYPES[tag], CHILD_LENGTH_CHANGE[tag]):
                assert child.n == parent.n + 1
                assert CoherentGenerator.is_coherent_lattice_path(child)
                assert LatticePaths.restrict(child) == parent
                assert CoherentGenerator.classify(child).tag == child_tag
                assert child.length == parent.length + change



def test_extend_type_i():
    parent = lattice(4, (2, 1), (2, 3), (4, 3))
    children = CoherentGenerator.extend(parent)
    assert children == [lattice(5, (2, 1), (2, 3), (4, 3), (4, 5)),
                        lattice(5, (2, 1), (2, 3), (4, 3), (5, 3), (5, 4)),
                        lattice(5, (2, 1), (2, 3), (5, 3), (5, 4))]



def test_child_tables_match_counting_matrix():
    # M[i][j] is the number of children of type i of a parent of type j
    for j, parent_tag in enumerate((TYPE_I, TYPE_II, TYPE_III)):
        tally = Counter(CHILD_TYPES[parent_tag])
        for i, child_tag in enumerate((TYPE_I, TYPE_II, TYPE_III)):
            assert tally[child_tag] == CoherentCounting.M[i][j]




#################  GENERATION  #################

def test_generate_coherent(gen):
    assert len(gen.generate_coherent(3)) == 2
    assert [len(gen.generate_coherent(n)) for n in range(4, 9)] == [8, 33, 133, 533, 2133]



def test_generate_coherent_matches_lp(gen):
    for n in (4, 5):
        oracle = CoherenceOracle(n, 2, debug=False)
        from_lp = [LatticePaths.lattice_path_of(p) for p in oracle.coherent_paths()]
        assert compare_path_collections(gen.generate_coherent(n), from_lp)



def test_generate_coherent_deterministic(gen):
    first = gen.generate_coherent(6)
    assert gen.generate_coherent(6) == first
    assert CoherentGenerator(threads=3, debug=False).generate_coherent(6) == first
    assert len(set(first)) == len(first)



def test_extend_batch(gen, paths4):
    # The function run by each worker process keeps the children grouped by parent
    assert extend_batch(paths4) == [child for parent in paths4 for child in gen.extend(parent)]
    assert extend_batch([]) == []
    assert len(extend_batch(paths4)) == 33



def test_generate_coherent_invalid(gen):
    with pytest.raises(InvalidParameter):
        gen.generate_coherent(2)



def test_threads_from_environment(monkeypatch):
    monkeypatch.setenv("HYPERPATHS_THREADS", "4")
    assert CoherentGenerator(debug=False).threads == 4

    monkeypatch.delenv("HYPERPATHS_THREADS")
    assert CoherentGenerator(debug=False).threads == 1



def test_length_histogram(gen):
    assert CoherentGenerator.length_histogram(gen.generate_coherent(4)) == {3: 4, 4: 4}
    assert CoherentGenerator.length_histogram(gen.generate_coherent(5)) == {3: 4, 4: 16, 5: 12, 6: 1}
