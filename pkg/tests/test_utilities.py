from utilities.comparisons import *
from src.hyperpaths.path_utils import Support, MonotonePath
from src.hyperpaths.lattice_paths import LatticePath



P = MonotonePath(n=3, k=2, supports=(Support.of(3, [1, 2]), Support.of(3, [2, 3])))
Q = MonotonePath(n=3, k=2, supports=(Support.of(3, [1, 2]), Support.of(3, [1, 3]), Support.of(3, [2, 3])))
L = LatticePath(n=3, k=2, points=((2, 1), (2, 3)))



def test_path_key():
    assert path_key(P) == ((1, 2), (2, 3))
    assert path_key(L) == ((2, 1), (2, 3))



def test_compare_path_collections():
    # POSITIVE tests
    assert compare_path_collections([P, Q], [Q, P])
    assert compare_path_collections([], [])
    assert compare_path_collections([P, P, Q], [P, Q, P])

    # NEGATIVE tests
    assert not compare_path_collections([P, P], [P])
    assert not compare_path_collections([P], [Q])
    assert not compare_path_collections([], [P])



def test_compare_recordsets():
    # Tests for the compare_recordsets function

    # POSITIVE tests

    assert compare_recordsets(  [  {'n': 4, 'k': 2, 'coherent': True} ,  {'k': 2 , 'n': 3} ],
                                [  {'n': 4, 'k': 2, 'coherent': True} ,  {'k': 2 , 'n': 3} ]
                                )  # Everything absolutely identical

    assert compare_recordsets(  [  {'n': 4, 'k': 2, 'coherent': True} ,  {'k': 2 , 'n': 3} ],
                                [  {'k': 2 , 'n': 3} ,  {'coherent': True, 'n': 4, 'k': 2} ]
                                )  # Records reversed, and fields scrambled

    assert compare_recordsets([] , [])      # 2 empty datasets

    assert compare_recordsets([{'a': 1}, {'a': 1}, {'z': 'hello'}]  ,
                              [{'z': 'hello'}, {'a': 1}, {'a': 1}])     # Scrambled record order, with duplicates

    # NEGATIVE tests

    assert not compare_recordsets(  [  {'n': 4, 'k': 2, 'coherent': True} ,  {'k': 2 , 'n': 3} ],
                                    [  {'n': 4, 'k': 2, 'coherent': True}  ]
                                    )  # Missing record in 2nd dataset

    assert not compare_recordsets(  [  {'n': 4, 'k': 2, 'coherent': True} ,  {'k': 2 , 'n': 3} ],
                                    [  {'n': 4, 'k': 2, 'coherent': False} ,  {'k': 2 , 'n': 3} ]
                                    )  # Different value

    assert not compare_recordsets([{'a': 1}, {'a': 1}]  ,
                                  [{'a': 1}, {'b': 1}])

    assert not compare_recordsets( [] , [{'a': 1}] )      # one empty dataset and one non-empty



def test_compare_histogram():
    assert compare_histogram({3: 4, 4: 4}, (4, 4))
    assert compare_histogram({3: 4, 4: 16, 5: 12, 6: 1}, (4, 16, 12, 1))
    assert compare_histogram({3: 4, 5: 2}, (4, 0, 2))              # Zero counts may be omitted
    assert compare_histogram({2: 1}, (1,), first_length=2)

    assert not compare_histogram({3: 4, 4: 4}, (4, 4, 1))
    assert not compare_histogram({3: 4}, (4,), first_length=2)
