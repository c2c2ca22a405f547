import pytest
import random
from fractions import Fraction
from src.hyperpaths.coherence import CoherenceOracle, CaptureCone, CoherenceCertificate, CriterionVerdict
from src.hyperpaths.path_utils import (Support, EnhancedStep, MonotonePath,
                                       InvalidParameter, NonGenericOmega, ResourceLimit)
from utilities.comparisons import path_key, compare_path_collections



# Provide a Delta(4,2) oracle that can be used by the various tests that need it
@pytest.fixture(scope="module")
def oracle():
    yield CoherenceOracle(4, 2, debug=False)



def path4(*supports):
    return MonotonePath(n=4, k=2, supports=tuple(Support.of(4, s) for s in supports))


NON_COHERENT_4 = [path4((1, 2), (1, 3), (2, 3), (2, 4), (3, 4)),
                  path4((1, 2), (1, 3), (1, 4), (2, 4), (3, 4))]



#################  CAPTURE CONE  #################

def test_capture_cone(oracle):
    cone = oracle.capture_cone(path4((1, 2), (1, 4), (3, 4)))
    assert isinstance(cone, CaptureCone)
    assert [(step, competitor.elems) for (step, competitor) in cone.labels] == \
           [(1, (1, 3)), (1, (2, 3)), (1, (2, 4)), (1, (3, 4)), (2, (2, 4))]
    assert len(cone) == 5

    assert oracle.cone_summary(path4((1, 2), (1, 4), (3, 4))) == {1: 4, 2: 1}



def test_capture_cone_rows_orthogonal_to_c():
    for c in ([1, 2, 3, 4], [1, 2, 4, 8], ["1/3", 1, "7/2", 10]):
        oracle = CoherenceOracle(4, 2, c=c, debug=False)
        for path in oracle.enumerate_monotone_paths():
            for row in oracle.capture_cone(path).strict_rows:
                assert sum(a * w for a, w in zip(row, oracle.c.c)) == 0



def test_capture_cone_empty():
    oracle = CoherenceOracle(2, 1, debug=False)
    (path,) = list(oracle.enumerate_monotone_paths())
    assert len(oracle.capture_cone(path)) == 0

    certificate = oracle.is_coherent_lp(path)
    assert certificate.verdict
    assert certificate.witness == (0, 0)



def test_capture_cone_wrong_path(oracle):
    other = MonotonePath(n=3, k=2, supports=(Support.of(3, [1, 2]), Support.of(3, [2, 3])))
    with pytest.raises(InvalidParameter):
        oracle.capture_cone(other)




#################  LP ORACLE  #################

def test_is_coherent_lp(oracle):
    paths = list(oracle.enumerate_monotone_paths())
    coherent = [p for p in paths if oracle.is_coherent_lp(p)]
    non_coherent = [p for p in paths if not oracle.is_coherent_lp(p)]

    assert len(coherent) == 8
    assert compare_path_collections(non_coherent, NON_COHERENT_4)

    assert oracle.is_coherent_lp(path4((1, 2), (2, 3), (3, 4))).verdict
    assert oracle.is_coherent_lp(path4((1, 2), (1, 4), (3, 4))).verdict

    assert [path_key(p) for p in oracle.coherent_paths()] == [path_key(p) for p in coherent]



def test_is_coherent_lp_small():
    oracle = CoherenceOracle(3, 2, debug=False)
    assert all(oracle.is_coherent_lp(p) for p in oracle.enumerate_monotone_paths())

    oracle = CoherenceOracle(3, 1, debug=False)
    assert len(list(oracle.coherent_paths())) == 2



def test_witness(oracle):
    for path in oracle.enumerate_monotone_paths():
        certificate = oracle.is_coherent_lp(path)
        if certificate:
            assert certificate.slack > 0
            assert len(certificate.witness) == 4
            assert oracle.capture_cone(path).satisfied_by(certificate.witness)
            # The witness captures the path
            assert oracle.captured_path(certificate.witness) == path
        else:
            assert certificate.witness is None
            assert certificate.slack <= 0



def test_witness_captures_path():
    for (n, k) in [(5, 2), (4, 3), (5, 3), (5, 1)]:
        oracle = CoherenceOracle(n, k, debug=False)
        for path in oracle.coherent_paths():
            witness = oracle.is_coherent_lp(path).witness
            assert oracle.captured_path(witness) == path



def test_certificate_json():
    certificate = CoherenceCertificate(verdict=True, witness=(Fraction(0), Fraction(-1), Fraction(1, 2)))
    record = certificate.to_json()
    assert record == {"coherent": True, "omega": ["0/1", "-1/1", "1/2"]}
    assert CoherenceCertificate.from_json(record).witness == certificate.witness

    assert CoherenceCertificate(verdict=False).to_json() == {"coherent": False, "omega": None}
    assert not CoherenceCertificate.from_json({"coherent": False, "omega": None})




#################  CAPTURED PATHS  #################

def test_slope(oracle):
    omega = (0, 1, 3, 100)
    assert oracle.slope(omega, Support.of(4, [1, 2]), Support.of(4, [1, 4])) == Fraction(99, 2)
    assert oracle.slope(omega, Support.of(4, [1, 2]), Support.of(4, [1, 3])) == 2



def test_captured_path(oracle):
    assert oracle.captured_path((0, 1, 3, 100)) == path4((1, 2), (1, 4), (3, 4))
    assert oracle.captured_path(["0", "1", "3", "100"]) == path4((1, 2), (1, 4), (3, 4))

    # Captured paths are coherent
    path = oracle.captured_path((5, -2, 7, "1/3"))
    assert oracle.is_coherent_lp(path)



def test_captured_path_non_generic(oracle):
    with pytest.raises(NonGenericOmega) as excinfo:
        oracle.captured_path((0, 0, 0, 0))
    assert excinfo.value.at == Support.of(4, [1, 2])
    assert excinfo.value.tied_pair is not None
    assert excinfo.value.tied_pair[0] != excinfo.value.tied_pair[1]



def test_captured_path_invalid(oracle):
    with pytest.raises(InvalidParameter):
        oracle.captured_path((0, 1, 3))

    with pytest.raises(InvalidParameter):
        oracle.captured_path((0, 1, 3, 0.5))



def test_captured_path_random_omegas():
    oracle = CoherenceOracle(5, 2, debug=False)
    coherent = set(path_key(p) for p in oracle.coherent_paths())
    rng = random.Random(1234)
    for _ in range(40):
        omega = [Fraction(rng.randint(-1000, 1000), rng.randint(1, 50)) for _ in range(5)]
        try:
            path = oracle.captured_path(omega)
        except NonGenericOmega:
            continue
        assert path_key(path) in coherent



def test_convex_slope_check():
    rng = random.Random(42)
    for _ in range(200):
        xs = sorted(rng.sample(range(-100, 100), 3))
        ys = [Fraction(rng.randint(-100, 100), rng.randint(1, 9)) for _ in range(3)]
        assert CoherenceOracle.convex_slope_check(xs, ys)

    with pytest.raises(InvalidParameter):
        CoherenceOracle.convex_slope_check((0, 2, 1), (0, 0, 0))




#################  ENHANCED STEPS CRITERION  #################

def test_satisfies_criterion():
    verdict = CoherenceOracle.satisfies_criterion(NON_COHERENT_4[0])
    assert isinstance(verdict, CriterionVerdict)
    assert not verdict
    assert verdict.violation == (EnhancedStep(x=2, y=3, Z=(1,)), EnhancedStep(x=2, y=3, Z=(4,)))

    assert not CoherenceOracle.satisfies_criterion(NON_COHERENT_4[1])

    verdict = CoherenceOracle.satisfies_criterion(path4((1, 2), (2, 3), (3, 4)))
    assert verdict.holds
    assert verdict.violation is None

    single = MonotonePath(n=2, k=1, supports=(Support.of(2, [1]), Support.of(2, [2])))
    assert CoherenceOracle.satisfies_criterion(single)



def test_criterion_necessary():
    # Every LP-coherent path satisfies the criterion
    for (n, k) in [(4, 2), (5, 2), (4, 3), (5, 3), (4, 1), (5, 1)]:
        oracle = CoherenceOracle(n, k, debug=False)
        for path in oracle.coherent_paths():
            assert CoherenceOracle.satisfies_criterion(path)



def test_criterion_sufficient_k2():
    for n in (3, 4, 5):
        oracle = CoherenceOracle(n, 2, debug=False)
        for path in oracle.enumerate_monotone_paths():
            assert bool(CoherenceOracle.satisfies_criterion(path)) == oracle.is_coherent_lp(path).verdict



def test_search_criterion_gap():
    assert CoherenceOracle.search_criterion_gap(2, 5) is None
    assert CoherenceOracle.search_criterion_gap(3, 4) is None

    with pytest.raises(InvalidParameter):
        CoherenceOracle.search_criterion_gap(1, 5)

    with pytest.raises(ResourceLimit):
        CoherenceOracle.search_criterion_gap(2, 5, max_paths=3)



def test_search_criterion_gap_found():
    # For k=3 the criterion is not sufficient: Delta(5,3) already has a non-coherent path satisfying it
    path = CoherenceOracle.search_criterion_gap(3, 5)
    expected = MonotonePath(n=5, k=3, supports=tuple(Support.of(5, s) for s in
                                                     [(1, 2, 3), (1, 3, 4), (2, 3, 4), (2, 4, 5), (3, 4, 5)]))
    assert path == expected

    oracle = CoherenceOracle(5, 3, debug=False)
    assert oracle.satisfies_criterion(path).holds
    assert not oracle.is_coherent_lp(path).verdict

    # Scanning further does not change the first gap
    assert CoherenceOracle.search_criterion_gap(3, 6) == expected

