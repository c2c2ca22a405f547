from .path_utils import (PathUtils, Direction, Support, EnhancedStep, MonotonePath,
                         InvalidParameter, InvalidSupport, InvalidStepSequence, ResourceLimit)
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
import time
from typing import Union, List, Tuple, Optional, Iterator



class HypersimplexCore:
    """
    Vertices, edges and monotone paths of the hypersimplex Delta(n,k),
    i.e. the convex hull of the 0/1 vectors of R^n with exactly k ones.

    Vertices are identified by their supports (k-subsets of [n], 1-based);
    two vertices are adjacent iff their supports share k-1 elements.
    A monotone path goes from v_min = {1..k} to v_max = {n-k+1..n}
    along edges strictly increasing the weight  sum_{i in S} c_i

    This "CORE" class is the foundation of the higher-level child classes
    "CoherenceOracle" and "MonotonePathPolytope"

    SECTIONS IN THIS CLASS:
        * INIT (constructor)
        * VERTICES AND EDGES
        * MONOTONE PATHS
        * ENHANCED STEPS
        * DEBUGGING SUPPORT
    """

    def __init__(self, n: int, k: int, c=None,
                 debug=None,
                 max_paths=None,
                 max_seconds=None):
        """
        :param n:           Ambient dimension, at least 2
        :param k:           Number of ones in each vertex, 1 <= k <= n-1
        :param c:           Optional Direction object, or list of distinct rationals (which will get normalized);
                                DEFAULT: (1, 2, ..., n)
        :param debug:       Flag indicating whether a debug mode is to be used;
                                DEFAULT: read from HYPERPATHS_DEBUG environmental variable
        :param max_paths:   Budget on the number of paths produced by one enumeration (ResourceLimit beyond it);
                                DEFAULT: read from HYPERPATHS_MAX_PATHS environmental variable (unset means no limit)
        :param max_seconds: Wall-clock budget for one enumeration;
                                DEFAULT: read from HYPERPATHS_MAX_SECONDS environmental variable (unset means no limit)
        """
        if type(n) != int or type(k) != int:
            raise InvalidParameter(f"HypersimplexCore(): n and k must be integers (got n={n}, k={k})")
        if n < 2 or not (1 <= k <= n - 1):
            raise InvalidParameter(f"HypersimplexCore(): invalid parameters n={n}, k={k}; 1 <= k <= n-1 is required")

        if c is None:
            c = Direction.default(n)
        elif not isinstance(c, Direction):
            c = Direction.from_values(c)

        if c.n != n:
            raise InvalidParameter(f"HypersimplexCore(): the direction has {c.n} entries, but n={n}")

        self.n = n
        self.k = k
        self.c = c

        self.debug = PathUtils.env_flag("HYPERPATHS_DEBUG") if debug is None else debug
        self.max_paths = PathUtils.env_int("HYPERPATHS_MAX_PATHS") if max_paths is None else max_paths
        self.max_seconds = PathUtils.env_float("HYPERPATHS_MAX_SECONDS") if max_seconds is None else max_seconds

        if self.debug:
            print(f"~~~~~~~~~ Initializing {self.__class__.__name__} object for Delta({n},{k}), c = {c} ~~~~~~~~~")



    @classmethod
    def default_direction(cls, n: int) -> Direction:
        """
        EXAMPLE:  default_direction(4) -> (1, 2, 3, 4)

        :param n:   An integer >= 2
        :return:    The Direction (1, 2, ..., n)
        """
        return Direction.default(n)



    #####################################################################################################

    '''                                 ~   VERTICES AND EDGES   ~                                      '''

    def ________VERTICES_AND_EDGES________(DIVIDER):
        pass        # Used to get a better structure view in IDEs
    #####################################################################################################

    @property
    def v_min(self) -> Support:
        return Support(n=self.n, elems=tuple(range(1, self.k + 1)))

    @property
    def v_max(self) -> Support:
        return Support(n=self.n, elems=tuple(range(self.n - self.k + 1, self.n + 1)))


    def all_supports(self) -> List[Support]:
        """
        All the C(n,k) vertex supports, in lexicographic order
        """
        return [Support(n=self.n, elems=elems) for elems in combinations(range(1, self.n + 1), self.k)]



    def check_support(self, s: Support) -> None:
        """
        Raise an InvalidSupport exception if s isn't the support of a vertex of this hypersimplex
        """
        if not isinstance(s, Support):
            raise InvalidSupport(f"HypersimplexCore.check_support(): expected a Support object, not {type(s)}")
        if s.n != self.n or s.k != self.k:
            raise InvalidSupport(f"HypersimplexCore.check_support(): {s} (n={s.n}) "
                                 f"is not a vertex of Delta({self.n},{self.k})")



    def weight(self, s: Support) -> Fraction:
        """
        The value <c, v> at the vertex v with support s

        EXAMPLE:  s = {2,4}, c = (1,2,3,4) -> 6

        :param s:   A Support object
        :return:    An exact rational
        """
        if s.n != self.n:
            raise InvalidSupport(f"HypersimplexCore.weight(): {s} has n={s.n}, but the direction has {self.n} entries")

        return sum((self.c[i] for i in s.elems), Fraction(0))



    def vertex_vector(self, s: Support) -> Tuple[int, ...]:
        """
        EXAMPLE:  {1,3} in Delta(4,2) -> (1, 0, 1, 0)
        """
        self.check_support(s)
        return tuple(1 if i in s.elems else 0 for i in range(1, self.n + 1))



    def improving_swaps(self, s: Support) -> List[Tuple[int, int]]:
        """
        All the pairs (x, y), with x in s and y not in s, such that c_x < c_y;
        in lexicographic order of (x, y)

        :param s:   A Support object
        :return:    List of pairs of integers
        """
        outside = [y for y in range(1, self.n + 1) if y not in s.elems]
        return [(x, y) for x in s.elems for y in outside if x < y]



    def improving_neighbors(self, s: Support) -> List[Support]:
        """
        The supports of all the neighbors of s with a strictly higher weight, in lexicographic order

        EXAMPLE:  s = {1,4} in Delta(4,2) -> [{2,4}, {3,4}]

        :param s:   A Support object
        :return:    List of Support objects (empty for v_max)
        """
        self.check_support(s)
        return sorted(s.swap(x, y) for (x, y) in self.improving_swaps(s))



    #####################################################################################################

    '''                                   ~   MONOTONE PATHS   ~                                        '''

    def ________MONOTONE_PATHS________(DIVIDER):
        pass        # Used to get a better structure view in IDEs
    #####################################################################################################

    def enumerate_monotone_paths(self, first_step=None) -> Iterator[MonotonePath]:
        """
        Stream all the monotone paths from v_min to v_max, each exactly once,
        in lexicographic order of their sequence of (x, y) swaps.
        Depth-first, so that the consumer may stop at any time.

        The budgets (max_paths, max_seconds) are enforced while streaming:
        a ResourceLimit exception is raised as soon as either one is exceeded

        :param first_step:  Optional pair (x, y): if given, only the paths starting with that swap are streamed
                                (handy to partition the enumeration among parallel consumers)
        :return:            A generator of MonotonePath objects
        """
        start = self.v_min
        end = self.v_max
        t0 = time.monotonic()
        produced = 0

        self.debug_print(f"HypersimplexCore.enumerate_monotone_paths(): Delta({self.n},{self.k}), first_step={first_step}")

        stack = [start]

        def descend(current: Support):
            nonlocal produced
            if current == end:
                produced += 1
                if self.max_paths is not None and produced > self.max_paths:
                    raise ResourceLimit(f"HypersimplexCore.enumerate_monotone_paths(): "
                                        f"more than {self.max_paths} paths in Delta({self.n},{self.k})")
                if self.max_seconds is not None and time.monotonic() - t0 > self.max_seconds:
                    raise ResourceLimit(f"HypersimplexCore.enumerate_monotone_paths(): "
                                        f"time budget of {self.max_seconds} s exceeded")
                yield MonotonePath(n=self.n, k=self.k, supports=tuple(stack))
                return

            swaps = self.improving_swaps(current)
            if first_step is not None and current == start:
                swaps = [sw for sw in swaps if sw == tuple(first_step)]

            for (x, y) in swaps:
                stack.append(current.swap(x, y))
                yield from descend(stack[-1])
                stack.pop()

        yield from descend(start)



    def count_monotone_paths(self) -> int:
        """
        Count-only mode: the number of monotone paths, computed by memoized counting
        over the directed graph of improving edges (no path is materialized)

        EXAMPLE:  Delta(4,2) -> 10

        :return:    An exact integer
        """
        end = self.v_max

        @lru_cache(maxsize=None)
        def paths_from(elems: Tuple[int, ...]) -> int:
            s = Support(n=self.n, elems=elems)
            if s == end:
                return 1
            return sum(paths_from(s.swap(x, y).elems) for (x, y) in self.improving_swaps(s))

        return paths_from(self.v_min.elems)



    def paths_into(self) -> dict:
        """
        For every vertex, the number of monotone paths from v_min to it.

        :return:    Dict whose keys are Support objects, and values are integers
        """
        counts = {}
        # Increasing weight is a topological order of the improving edges
        for s in sorted(self.all_supports(), key=self.weight):
            if s == self.v_min:
                counts[s] = 1
            else:
                counts[s] = sum(counts[s.swap(y, x)] for x in range(1, self.n + 1) if x not in s.elems
                                                      for y in s.elems if x < y)
        return counts



    #####################################################################################################

    '''                                   ~   ENHANCED STEPS   ~                                        '''

    def ________ENHANCED_STEPS________(DIVIDER):
        pass        # Used to get a better structure view in IDEs
    #####################################################################################################

    @classmethod
    def enhanced_steps(cls, path: MonotonePath) -> List[EnhancedStep]:
        """
        Read off the swaps of a monotone path.

        EXAMPLE:  ({1,2},{1,3},{3,4}) -> [(2->3 over {1}), (1->4 over {3})]

        :param path:    A MonotonePath object
        :return:        List of r-1 EnhancedStep objects
        """
        steps = []
        for before, after in zip(path.supports, path.supports[1:]):
            b = set(before.elems)
            a = set(after.elems)
            (x,) = b - a
            (y,) = a - b
            steps.append(EnhancedStep(x=x, y=y, Z=tuple(sorted(b & a))))

        return steps



    @classmethod
    def path_from_steps(cls, n: int, k: int, steps: List[EnhancedStep]) -> MonotonePath:
        """
        Rebuild a monotone path from its enhanced steps (inverse of enhanced_steps)

        :param n:       Ambient dimension
        :param k:       Number of ones in each vertex
        :param steps:   List of EnhancedStep objects, chaining from {1..k}
        :return:        A MonotonePath object
        """
        if not (1 <= k <= n - 1):
            raise InvalidStepSequence(f"HypersimplexCore.path_from_steps(): no monotone path exists for n={n}, k={k}")

        current = set(range(1, k + 1))
        supports = [Support.of(n, current)]
        for i, step in enumerate(steps):
            if step.x not in current or step.y in current or set(step.Z) != current - {step.x}:
                raise InvalidStepSequence(f"HypersimplexCore.path_from_steps(): step #{i+1} {step} "
                                          f"doesn't apply to the support {supports[-1]}")
            if not step.is_improving():
                raise InvalidStepSequence(f"HypersimplexCore.path_from_steps(): step #{i+1} {step} is not improving")
            current = (current - {step.x}) | {step.y}
            supports.append(Support.of(n, current))

        return MonotonePath(n=n, k=k, supports=tuple(supports))



    #####################################################################################################

    '''                                   ~   DEBUGGING SUPPORT   ~                                   '''

    def ________DEBUGGING_SUPPORT________(DIVIDER):
        pass        # Used to get a better structure view in IDEs
    #####################################################################################################

    def debug_print(self, info: str, trim=False) -> None:
        """
        If the class' property "debug" is set to True,
        print out the passed info string,
        optionally trimming it, if too long

        :param info:
        :param trim:
        :return:        None
        """
        if self.debug:
            if trim:
                info = self.debug_trim(info)

            print(info)



    def debug_trim(self, data, max_len = 150) -> str:
        """
        Abridge the given data (first turning it into a string if needed), if excessively long,
        using ellipses " ..." for the omitted data.

        :param data:    Data to possibly abridge (paths and cones can get long)
        :param max_len: Max number of characters to show from the data argument
        :return:        The (possibly) abridged text
        """
        text = str(data)
        if len(text) > max_len:
            return text[:max_len] + " ..."
        else:
            return text
