# This file contains the inductive machine producing all the coherent lattice paths of dimension 2:
#       - EndingType            The ending of a coherent lattice path (Type I, II or III)
#       - CoherentGenerator     Criterion on lattice paths, classification, 12-case extension, generation

from .path_utils import PathUtils, EnhancedStep, InvalidParameter, ClassificationError, Unsupported
from .hypersimplex import HypersimplexCore
from .lattice_paths import LatticePath, LatticePaths
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Union, List, Tuple, Optional

import numpy as np


TYPE_I = "TypeI"
TYPE_II = "TypeII"
TYPE_III = "TypeIII"

TYPES = (TYPE_I, TYPE_II, TYPE_III)


# For each type of parent, the type of the child produced by each extension case, in order (a), (b), ...
CHILD_TYPES = {
    TYPE_I:   (TYPE_I, TYPE_III, TYPE_III),
    TYPE_II:  (TYPE_I, TYPE_I, TYPE_II, TYPE_II),
    TYPE_III: (TYPE_I, TYPE_I, TYPE_III, TYPE_II, TYPE_III),
}

# Change of length (number of points) from parent to child, same order
CHILD_LENGTH_CHANGE = {
    TYPE_I:   (1, 2, 1),
    TYPE_II:  (1, 0, 1, 0),
    TYPE_III: (1, 0, 1, 1, 0),
}



@dataclass(frozen=True)
class EndingType:
    """
    How a coherent lattice path of size n >= 4 (dimension 2) ends:
        TypeI(x)                last step (x -> n over n-1), with x < n-1
        TypeII(x, y_1..y_m)     ending block (x -> n over y_1), (y_1 -> y_2 over n), ..., (y_{m-1} -> y_m over n),
                                with m >= 3, y_m = n-1 and x < n-1
        TypeIII(x, y)           ending block (x -> n over y), (y -> n-1 over n), with y < n-1
    For TypeIII, ys = (y,); for TypeI, ys is empty
    """
    tag: str
    x: int
    ys: Tuple[int, ...] = ()

    def __str__(self):
        return f"{self.tag}(x={self.x}, ys={self.ys})" if self.ys else f"{self.tag}(x={self.x})"




######################################################################################################################

class CoherentGenerator:
    """
    Generation of all the coherent lattice paths of dimension 2, size by size.

    A lattice path of size n is obtained from its restriction, of size n-1, by one of 12 explicit surgeries
    on its list of enhanced steps, selected by the ending type of the restriction.
    Starting from the 8 coherent paths of size 4, this yields every coherent path exactly once

    SECTIONS IN THIS CLASS:
        * INIT (constructor)
        * CRITERION AND CLASSIFICATION
        * EXTENSION
        * GENERATION
    """

    def __init__(self, threads=None, debug=None):
        """
        :param threads: Number of worker processes used to extend the paths of each size;
                            DEFAULT: read from HYPERPATHS_THREADS environmental variable, or 1
        :param debug:   Flag indicating whether a debug mode is to be used;
                            DEFAULT: read from HYPERPATHS_DEBUG environmental variable
        """
        self.threads = (PathUtils.env_int("HYPERPATHS_THREADS") or 1) if threads is None else threads
        self.debug = PathUtils.env_flag("HYPERPATHS_DEBUG") if debug is None else debug

        assert type(self.threads) == int and self.threads >= 1, \
            f"CoherentGenerator(): `threads` must be a positive integer (got {self.threads})"



    #####################################################################################################

    '''                              ~   CRITERION AND CLASSIFICATION   ~                               '''

    def ________CRITERION_AND_CLASSIFICATION________(DIVIDER):
        pass        # Used to get a better structure view in IDEs
    #####################################################################################################

    @classmethod
    def _triples(cls, lattice: LatticePath) -> List[Tuple[int, int, int]]:
        """
        The enhanced steps of a dimension-2 lattice path, as triples (x, y, z) for (x -> y over z)
        """
        return [(st.x, st.y, st.Z[0]) for st in LatticePaths.steps_of(lattice)]



    @classmethod
    def is_coherent_lattice_path(cls, lattice: LatticePath) -> bool:
        """
        A lattice path of dimension 2 is coherent iff, for every pair of steps (i -> j over a) preceding
        (x -> y over z) with x < j, either j = z or x = a

        :param lattice: A LatticePath object of dimension 2
        :return:        True or False
        """
        if lattice.k != 2:
            raise Unsupported(f"CoherentGenerator.is_coherent_lattice_path(): only dimension 2 is handled "
                              f"(k={lattice.k})")

        steps = cls._triples(lattice)
        for p, (_, j, a) in enumerate(steps):
            for (x, _, z) in steps[p + 1:]:
                if x < j and j != z and x != a:
                    return False
        return True



    @classmethod
    def classify(cls, lattice: LatticePath) -> EndingType:
        """
        Determine the ending type of a coherent lattice path of size at least 4.
        The three patterns are tested independently, and exactly one of them must match

        :param lattice: A coherent LatticePath object of dimension 2
        :return:        An EndingType object (ClassificationError if no pattern matches)
        """
        if lattice.k != 2:
            raise Unsupported(f"CoherentGenerator.classify(): only dimension 2 is handled (k={lattice.k})")
        if lattice.n < 4:
            raise InvalidParameter(f"CoherentGenerator.classify(): the ending types need size >= 4 (size {lattice.n})")

        n = lattice.n
        steps = cls._triples(lattice)
        # The step where n enters; every later step is "over n", since n never leaves
        entry = max(i for i, (_, y, _) in enumerate(steps) if y == n)
        x, _, y1 = steps[entry]
        tail = steps[entry + 1:]

        matches = [m for m in (cls._match_type_i(n, x, y1, tail),
                               cls._match_type_ii(n, x, y1, tail),
                               cls._match_type_iii(n, x, y1, tail)) if m is not None]

        if len(matches) == 0:
            raise ClassificationError(f"CoherentGenerator.classify(): no ending type matches {lattice}; "
                                      f"is the path coherent?")
        if len(matches) > 1:
            raise ClassificationError(f"CoherentGenerator.classify(): several ending types match {lattice}: "
                                      f"{[str(m) for m in matches]}")
        return matches[0]


    @staticmethod
    def _match_type_i(n, x, y1, tail) -> Optional[EndingType]:
        if not tail and y1 == n - 1 and x < n - 1:
            return EndingType(tag=TYPE_I, x=x)
        return None


    @staticmethod
    def _match_type_ii(n, x, y1, tail) -> Optional[EndingType]:
        if len(tail) < 2 or not x < n - 1:
            return None
        ys = [y1]
        for (u, v, z) in tail:
            if u != ys[-1] or z != n:
                return None
            ys.append(v)
        if ys[-1] != n - 1:
            return None
        return EndingType(tag=TYPE_II, x=x, ys=tuple(ys))


    @staticmethod
    def _match_type_iii(n, x, y1, tail) -> Optional[EndingType]:
        if len(tail) == 1 and y1 < n - 1 and tail[0] == (y1, n - 1, n):
            return EndingType(tag=TYPE_III, x=x, ys=(y1,))
        return None



    #####################################################################################################

    '''                                       ~   EXTENSION   ~                                         '''

    def ________EXTENSION________(DIVIDER):
        pass        # Used to get a better structure view in IDEs
    #####################################################################################################

    @classmethod
    def extension_steps(cls, lattice: LatticePath) -> List[List[Tuple[int, int, int]]]:
        """
        The step lists (triples (x, y, z)) of all the coherent paths of size n+1 restricting to the given path,
        one per extension case, in the order (a), (b), ...

        :param lattice: A coherent LatticePath object of size n >= 4
        :return:        List of 3, 4 or 5 lists of triples
        """
        n = lattice.n
        steps = cls._triples(lattice)
        ending = cls.classify(lattice)
        top = n + 1
        x = ending.x

        if ending.tag == TYPE_I:
            return [
                steps + [(n - 1, top, n)],
                steps + [(n, top, n - 1), (n - 1, n, top)],
                steps[:-1] + [(x, top, n - 1), (n - 1, n, top)],
            ]

        if ending.tag == TYPE_II:
            ys = ending.ys
            m = len(ys)
            base = steps[:len(steps) - (m - 1) - 1]             # Without the whole ending block
            chain = [(ys[p], ys[p + 1], top) for p in range(m - 2)]
            return [
                steps + [(n - 1, top, n)],
                steps[:-1] + [(ys[m - 2], top, n)],
                base + [(x, top, ys[0])] + chain + [(ys[m - 2], n - 1, top), (n - 1, n, top)],
                base + [(x, top, ys[0])] + chain + [(ys[m - 2], n, top)],
            ]

        # TYPE_III
        (y,) = ending.ys
        base = steps[:-2]
        return [
            steps + [(n - 1, top, n)],
            steps[:-1] + [(y, top, n)],
            steps[:-1] + [(n, top, y), (y, n, top)],
            base + [(x, top, y), (y, n - 1, top), (n - 1, n, top)],
            base + [(x, top, y), (y, n, top)],
        ]



    @classmethod
    def extend(cls, lattice: LatticePath) -> List[LatticePath]:
        """
        All the coherent lattice paths of size n+1 whose restriction is the given path:
        3 for a TypeI path, 4 for a TypeII path, 5 for a TypeIII path.
        Each child is validated as a diagonal-avoiding path, and its ending type is checked

        :param lattice: A coherent LatticePath object of size n >= 4
        :return:        List of LatticePath objects
        """
        ending = cls.classify(lattice)
        children = []
        for case, triples in enumerate(cls.extension_steps(lattice)):
            child = LatticePaths.from_steps(lattice.n + 1, 2, [EnhancedStep(x=u, y=v, Z=(z,)) for (u, v, z) in triples])

            expected = CHILD_TYPES[ending.tag][case]
            assert cls.classify(child).tag == expected, \
                f"CoherentGenerator.extend(): case {'abcde'[case]} of {ending} gave {cls.classify(child)}, " \
                f"not {expected}"
            assert child.length == lattice.length + CHILD_LENGTH_CHANGE[ending.tag][case], \
                f"CoherentGenerator.extend(): case {'abcde'[case]} of {ending} has an unexpected length"

            children.append(child)

        return children



    #####################################################################################################

    '''                                       ~   GENERATION   ~                                        '''

    def ________GENERATION________(DIVIDER):
        pass        # Used to get a better structure view in IDEs
    #####################################################################################################

    def generate_coherent(self, n: int) -> List[LatticePath]:
        """
        All the coherent lattice paths of size n (dimension 2).
            n = 3:      the 2 diagonal-avoiding paths (all coherent)
            n = 4:      the 8 coherent ones among the 10 diagonal-avoiding paths
            n >= 5:     all the extensions of the paths of size n-1

        EXAMPLE:  generate_coherent(5) has 33 elements

        :param n:   Size, at least 3
        :return:    List of LatticePath objects, in deterministic order
        """
        if type(n) != int or n < 3:
            raise InvalidParameter(f"CoherentGenerator.generate_coherent(): n must be an integer >= 3 (got {n})")

        base_size = min(n, 4)
        core = HypersimplexCore(base_size, 2)
        level = [LatticePaths.lattice_path_of(p) for p in core.enumerate_monotone_paths()]
        level = [lp for lp in level if self.is_coherent_lattice_path(lp)]

        for size in range(base_size, n):
            level = self._extend_level(level)
            if self.debug:
                print(f"CoherentGenerator.generate_coherent(): {len(level)} coherent paths of size {size + 1}")

        return level



    def _extend_level(self, parents: List[LatticePath]) -> List[LatticePath]:
        """
        Extend all the parents, keeping the children grouped in the order of their parents
        """
        if self.threads == 1 or len(parents) < 2 * self.threads:
            return [child for parent in parents for child in self.extend(parent)]

        batches = np.array_split(np.arange(len(parents)), self.threads)
        with ProcessPoolExecutor(max_workers=self.threads) as pool:
            futures = [pool.submit(extend_batch, [parents[i] for i in idx]) for idx in batches]
            return [child for f in futures for child in f.result()]



    @classmethod
    def census(cls, paths: List[LatticePath]) -> Tuple[int, int, int]:
        """
        Number of paths of each ending type

        :param paths:   List of coherent LatticePath objects of size >= 4
        :return:        Triple (t, q, c) with the number of TypeI, TypeII and TypeIII paths
        """
        tally = Counter(cls.classify(lp).tag for lp in paths)
        return tally[TYPE_I], tally[TYPE_II], tally[TYPE_III]



    @classmethod
    def length_histogram(cls, paths) -> dict:
        """
        Number of paths of each length (number of points)

        :param paths:   Iterable of LatticePath (or MonotonePath) objects
        :return:        Dict length -> count, sorted by length
        """
        tally = Counter(p.length for p in paths)
        return dict(sorted(tally.items()))



def extend_batch(parents: List[LatticePath]) -> List[LatticePath]:
    """
    Extend a batch of parents in a worker process, keeping the children grouped in the order of their parents
    """
    return [child for parent in parents for child in CoherentGenerator.extend(parent)]
