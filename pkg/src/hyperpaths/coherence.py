# This file contains the exact coherence oracles for monotone paths on the hypersimplex:
#       - CaptureCone           The open cone of all the functionals omega that capture a given path
#       - CoherenceCertificate  Verdict of the LP oracle, with a witness omega when the path is coherent
#       - CriterionVerdict      Verdict of the enhanced-steps criterion, with the first violating pair
#       - CoherenceOracle       Child class of HypersimplexCore bringing all of the above together

from .path_utils import (PathUtils, Support, EnhancedStep, MonotonePath,
                         InvalidParameter, NonGenericOmega, ResourceLimit)
from .hypersimplex import HypersimplexCore
from .exact_lp import ExactLinProg, BOUNDED
from dataclasses import dataclass
from fractions import Fraction
import time
from typing import Union, List, Tuple, Optional, Iterator



@dataclass(frozen=True)
class CaptureCone:
    """
    A path P = (v_1, ..., v_r) is captured by omega iff, at each vertex v_i,
    the next vertex v_{i+1} strictly maximizes the slope  <omega, v_J - v_i> / <c, v_J - v_i>
    over all the vertices J of higher weight.
    Clearing the (positive) denominators, each competitor J at step i gives one strict row
    a = (chi_V - chi_I) * dJ - (chi_J - chi_I) * dV ,  meaning  <a, omega> > 0
    (with I = supp v_i, V = supp v_{i+1}, dJ = c(J) - c(I), dV = c(V) - c(I))
    """
    n: int
    strict_rows: Tuple[Tuple[Fraction, ...], ...]
    labels: Tuple[Tuple[int, Support], ...] = ()     # (1-based step index, competitor J) for each row


    def satisfied_by(self, omega) -> bool:
        """
        True iff omega strictly satisfies every row (i.e. omega lies in the open cone)
        """
        return all(sum((a * w for a, w in zip(row, omega)), Fraction(0)) > 0 for row in self.strict_rows)


    def __len__(self):
        return len(self.strict_rows)



@dataclass(frozen=True)
class CoherenceCertificate:
    verdict: bool
    witness: Optional[Tuple[Fraction, ...]] = None     # Present iff verdict is True
    slack: Optional[Fraction] = None                   # Optimal value of the LP


    def __bool__(self):
        return self.verdict


    def to_json(self) -> dict:
        """
        EXAMPLE:  {"coherent": true, "omega": ["0/1", "-1/1", "1/1", "1/1"]}
        """
        return {"coherent": self.verdict,
                "omega": None if self.witness is None else PathUtils.format_vector(self.witness)}


    @classmethod
    def from_json(cls, record: dict) -> "CoherenceCertificate":
        omega = record.get("omega")
        return cls(verdict=bool(record["coherent"]),
                   witness=None if omega is None else tuple(PathUtils.to_fraction(w) for w in omega))



@dataclass(frozen=True)
class CriterionVerdict:
    holds: bool
    violation: Optional[Tuple[EnhancedStep, EnhancedStep]] = None

    def __bool__(self):
        return self.holds




######################################################################################################################

class CoherenceOracle(HypersimplexCore):
    """
    Exact decision of the coherence of monotone paths on Delta(n,k):
        - the capture cone of a path, and its non-emptiness decided by an exact LP
        - the greedy path captured by a given functional omega
        - the combinatorial "enhanced steps" criterion (necessary for all k; also sufficient for k=2)
        - the search for paths satisfying the criterion but not coherent

    SECTIONS IN THIS CLASS:
        * CAPTURE CONE
        * LP ORACLE
        * CAPTURED PATHS
        * ENHANCED STEPS CRITERION
    """

    #####################################################################################################

    '''                                     ~   CAPTURE CONE   ~                                        '''

    def ________CAPTURE_CONE________(DIVIDER):
        pass        # Used to get a better structure view in IDEs
    #####################################################################################################

    def capture_cone(self, path: MonotonePath) -> CaptureCone:
        """
        Build the strict rows of the capture cone of the given path.
        All the C(n,k) supports are scanned as competitors, keeping those of higher weight
        than the current vertex (other than the next vertex itself)

        EXAMPLE:  for ({1,2},{1,4},{3,4}) in Delta(4,2), the competitors are
                  {1,3},{2,3},{2,4},{3,4} at step 1, and {2,4} at step 2

        :param path:    A MonotonePath object of this hypersimplex
        :return:        A CaptureCone object
        """
        self._check_path(path)

        everything = self.all_supports()
        rows = []
        labels = []
        for i, (current, following) in enumerate(zip(path.supports, path.supports[1:])):
            w_i = self.weight(current)
            d_v = self.weight(following) - w_i
            chi_i = self.vertex_vector(current)
            chi_v = self.vertex_vector(following)
            for competitor in everything:
                d_j = self.weight(competitor) - w_i
                if d_j <= 0 or competitor == following:
                    continue
                chi_j = self.vertex_vector(competitor)
                row = tuple((chi_v[p] - chi_i[p]) * d_j - (chi_j[p] - chi_i[p]) * d_v for p in range(self.n))

                assert sum((a * self.c.c[p] for p, a in enumerate(row)), Fraction(0)) == 0, \
                    f"CoherenceOracle.capture_cone(): the row {row} is not orthogonal to c"

                rows.append(row)
                labels.append((i + 1, competitor))

        self.debug_print(f"CoherenceOracle.capture_cone(): {len(rows)} rows for the path {path}", trim=True)

        return CaptureCone(n=self.n, strict_rows=tuple(rows), labels=tuple(labels))



    def cone_summary(self, path: MonotonePath) -> dict:
        """
        Number of rows contributed by each step of the path

        :return:    Dict whose keys are the 1-based step indexes
        """
        summary = {i: 0 for i in range(1, path.length)}
        for (step, _) in self.capture_cone(path).labels:
            summary[step] += 1
        return summary



    #####################################################################################################

    '''                                      ~   LP ORACLE   ~                                          '''

    def ________LP_ORACLE________(DIVIDER):
        pass        # Used to get a better structure view in IDEs
    #####################################################################################################

    def is_coherent_lp(self, path: MonotonePath) -> CoherenceCertificate:
        """
        Decide exactly whether the open capture cone of the path is non-empty.

        The cone is invariant under positive scaling, so it is non-empty iff it meets the box -1 <= omega_i <= 1;
        hence the bounded LP
                maximize    delta
                subject to  <a, omega> >= delta   for every row a
                            -1 <= omega_i <= 1,   0 <= delta <= 1
        with omega = p - q, 0 <= p, q <= 1 (so that the origin is a feasible start).
        The path is coherent iff the optimal delta is positive; the optimal omega is then the witness

        :param path:    A MonotonePath object of this hypersimplex
        :return:        A CoherenceCertificate object
        """
        cone = self.capture_cone(path)
        n = self.n

        if len(cone) == 0:
            return CoherenceCertificate(verdict=True, witness=tuple(Fraction(0) for _ in range(n)), slack=Fraction(1))

        unique_rows = list(dict.fromkeys(cone.strict_rows))

        # Variables: p_1..p_n, q_1..q_n, delta
        a = []
        b = []
        for row in unique_rows:
            a.append([-v for v in row] + list(row) + [1])       # delta - <row, p> + <row, q> <= 0
            b.append(0)
        for i in range(2 * n + 1):
            bound = [0] * (2 * n + 1)
            bound[i] = 1
            a.append(bound)
            b.append(1)
        objective = [0] * (2 * n) + [1]

        result = ExactLinProg(a, b, objective).solve()
        assert result.status == BOUNDED, f"CoherenceOracle.is_coherent_lp(): unexpected LP status `{result.status}`"

        self.debug_print(f"CoherenceOracle.is_coherent_lp(): delta* = {result.value} "
                         f"after {result.pivots} pivots, for the path {path}", trim=True)

        if result.value <= 0:
            return CoherenceCertificate(verdict=False, slack=result.value)

        omega = tuple(result.x[i] - result.x[n + i] for i in range(n))

        for row in cone.strict_rows:
            assert sum((v * w for v, w in zip(row, omega)), Fraction(0)) > 0, \
                f"CoherenceOracle.is_coherent_lp(): the witness {PathUtils.format_vector(omega)} violates the row {row}"

        return CoherenceCertificate(verdict=True, witness=omega, slack=result.value)



    def coherent_paths(self) -> Iterator[MonotonePath]:
        """
        Stream the monotone paths certified coherent by the LP oracle, in canonical order
        """
        for path in self.enumerate_monotone_paths():
            if self.is_coherent_lp(path):
                yield path



    #####################################################################################################

    '''                                    ~   CAPTURED PATHS   ~                                       '''

    def ________CAPTURED_PATHS________(DIVIDER):
        pass        # Used to get a better structure view in IDEs
    #####################################################################################################

    def slope(self, omega, s: Support, t: Support) -> Fraction:
        """
        The slope  <omega, v_t - v_s> / <c, v_t - v_s>  of the projection of the edge (or segment) s -> t
        onto the plane (c, omega).  The weights of s and t must differ
        """
        d_c = self.weight(t) - self.weight(s)
        d_w = sum((omega[i - 1] for i in t.elems), Fraction(0)) - sum((omega[i - 1] for i in s.elems), Fraction(0))
        return d_w / d_c



    def captured_path(self, omega) -> MonotonePath:
        """
        The greedy path of the shadow: from v_min, repeatedly move to the improving neighbor
        with the maximum slope  <omega, v' - v> / <c, v' - v>

        EXAMPLE:  Delta(4,2), omega = (0, 1, 3, 100) -> ({1,2},{1,4},{3,4})

        :param omega:   n exact rationals (ints, Fractions or "p/q" strings), indexed by sorted position
                            of the direction (see Direction.to_sorted)
        :return:        A MonotonePath object (NonGenericOmega if the maximum slope is ever tied)
        """
        omega = tuple(PathUtils.to_fraction(w) for w in omega)
        if len(omega) != self.n:
            raise InvalidParameter(f"CoherenceOracle.captured_path(): omega has {len(omega)} entries, "
                                   f"but n={self.n}")

        current = self.v_min
        supports = [current]
        while current != self.v_max:
            scored = [(self.slope(omega, current, t), t) for t in self.improving_neighbors(current)]
            best = max(s for (s, _) in scored)
            winners = [t for (s, t) in scored if s == best]
            if len(winners) > 1:
                raise NonGenericOmega(f"CoherenceOracle.captured_path(): omega = {PathUtils.format_vector(omega)} "
                                      f"is not generic: at {current}, the neighbors {winners[0]} and {winners[1]} "
                                      f"share the maximum slope {PathUtils.format_rational(best)}",
                                      at=current, tied_pair=(winners[0], winners[1]))
            current = winners[0]
            supports.append(current)

        return MonotonePath(n=self.n, k=self.k, supports=tuple(supports))



    @classmethod
    def convex_slope_check(cls, xs, ys) -> bool:
        """
        For three points with abscissas x1 < x2 < x3, the slope from the first to the third
        is a convex combination of the two consecutive slopes, hence lies weakly between them

        :param xs:  Three increasing exact abscissas
        :param ys:  Three exact ordinates
        :return:    True iff tau(1,3) lies between tau(1,2) and tau(2,3)
        """
        x1, x2, x3 = (PathUtils.to_fraction(v) for v in xs)
        y1, y2, y3 = (PathUtils.to_fraction(v) for v in ys)
        if not (x1 < x2 < x3):
            raise InvalidParameter(f"CoherenceOracle.convex_slope_check(): the abscissas must be increasing")

        t12 = (y2 - y1) / (x2 - x1)
        t23 = (y3 - y2) / (x3 - x2)
        t13 = (y3 - y1) / (x3 - x1)
        # t13 = (x2-x1)/(x3-x1) * t12 + (x3-x2)/(x3-x1) * t23
        return min(t12, t23) <= t13 <= max(t12, t23)



    #####################################################################################################

    '''                                ~   ENHANCED STEPS CRITERION   ~                                 '''

    def ________ENHANCED_STEPS_CRITERION________(DIVIDER):
        pass        # Used to get a better structure view in IDEs
    #####################################################################################################

    @classmethod
    def satisfies_criterion(cls, path: MonotonePath) -> CriterionVerdict:
        """
        The enhanced steps criterion: for every pair of steps (i -> j over A) preceding (x -> y over Z),
        if x < j then j must be in Z or x must be in A.
        Every coherent path satisfies it (any k); for k=2 it is also sufficient

        :param path:    A MonotonePath object
        :return:        A CriterionVerdict object (with the first violating pair, in step order, on failure)
        """
        steps = cls.enhanced_steps(path)
        for p, first in enumerate(steps):
            for second in steps[p + 1:]:
                if second.x < first.y and first.y not in second.Z and second.x not in first.Z:
                    return CriterionVerdict(holds=False, violation=(first, second))

        return CriterionVerdict(holds=True)



    @classmethod
    def search_criterion_gap(cls, k: int, n_max: int, max_paths=None, max_seconds=None,
                             debug=False) -> Optional[MonotonePath]:
        """
        Look for a monotone path that satisfies the enhanced steps criterion, yet is not coherent.
        The hypersimplices Delta(k+1, k), ..., Delta(n_max, k) are scanned in turn, each in canonical order

        :param k:           Number of ones in each vertex; at least 2 (for k=2, nothing is ever found)
        :param n_max:       Largest ambient dimension to scan
        :param max_paths:   Optional budget on the total number of examined paths
        :param max_seconds: Optional budget on the total time
        :param debug:       Flag indicating whether a debug mode is to be used
        :return:            The first such path, or None
        """
        if type(k) != int or k < 2:
            raise InvalidParameter(f"CoherenceOracle.search_criterion_gap(): k must be an integer >= 2 (got {k})")

        t0 = time.monotonic()
        examined = 0
        for n in range(k + 1, n_max + 1):
            oracle = cls(n, k, debug=debug, max_paths=max_paths, max_seconds=max_seconds)
            oracle.debug_print(f"CoherenceOracle.search_criterion_gap(): scanning Delta({n},{k})")
            for path in oracle.enumerate_monotone_paths():
                examined += 1
                if max_paths is not None and examined > max_paths:
                    raise ResourceLimit(f"CoherenceOracle.search_criterion_gap(): more than {max_paths} paths examined")
                if max_seconds is not None and time.monotonic() - t0 > max_seconds:
                    raise ResourceLimit(f"CoherenceOracle.search_criterion_gap(): "
                                        f"time budget of {max_seconds} s exceeded")

                if cls.satisfies_criterion(path) and not oracle.is_coherent_lp(path):
                    return path

        return None



    def _check_path(self, path: MonotonePath) -> None:
        if not isinstance(path, MonotonePath) or path.n != self.n or path.k != self.k:
            raise InvalidParameter(f"{self.__class__.__name__}: the path is not a monotone path of "
                                   f"Delta({self.n},{self.k})")
