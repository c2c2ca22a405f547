# This file contains the monotone paths for the non-generic directions e_S, and their lifts:
#       - ESPath        A sequence of bases increasing |B ∩ S| by one at each swap
#       - Lifting       Static class to enumerate the e_S-monotone paths and lift them to generic monotone paths

from .path_utils import Support, MonotonePath, InvalidParameter
from dataclasses import dataclass
from itertools import combinations
from typing import Union, List, Tuple, Iterator



@dataclass(frozen=True)
class ESPath:
    """
    A monotone path of Delta(n,k) for the direction e_S, with S = [n-s+1 .. n]:
    bases B_1, ..., B_{m+1}, with B_{i+1} = (B_i - {a_i}) | {b_i}, where a_i is not in S and b_i is in S.
    B_1 minimizes |B ∩ S|, and the final base maximizes it
    """
    n: int
    k: int
    s: int
    bases: Tuple[Support, ...]
    swaps: Tuple[Tuple[int, int], ...]


    def __post_init__(self):
        n, k, s = self.n, self.k, self.s
        S = set(self.S)

        if len(self.bases) != len(self.swaps) + 1:
            raise InvalidParameter("ESPath(): there must be exactly one more base than swaps")
        if len(set(self.bases[0].elems) & S) != max(0, k - (n - s)):
            raise InvalidParameter(f"ESPath(): the first base {self.bases[0]} doesn't minimize |B ∩ S|")
        if len(set(self.bases[-1].elems) & S) != min(k, s):
            raise InvalidParameter(f"ESPath(): the last base {self.bases[-1]} doesn't maximize |B ∩ S|")

        for (before, after), (a, b) in zip(zip(self.bases, self.bases[1:]), self.swaps):
            if a in S or b not in S:
                raise InvalidParameter(f"ESPath(): the swap {a} -> {b} must take an index out of S into S")
            if after != before.swap(a, b):
                raise InvalidParameter(f"ESPath(): {before} -> {after} is not the swap {a} -> {b}")

        indexes = [v for pair in self.swaps for v in pair]
        if len(set(indexes)) != len(indexes):
            raise InvalidParameter(f"ESPath(): the swapped indexes {self.swaps} are not all distinct")


    @property
    def S(self) -> Tuple[int, ...]:
        return tuple(range(self.n - self.s + 1, self.n + 1))


    def __str__(self):
        return "(" + ",".join(str(b) for b in self.bases) + ")"




######################################################################################################################

class Lifting:
    """
    Static class with the e_S-monotone paths of the hypersimplex, and their lifts P↑:
    generic monotone paths (for c = (1, ..., n)) containing the e_S-monotone path as a contiguous sub-path,
    made of three blocks of steps:
        - prefix:   from v_min = [k] to B_1;     x_p -> a, the latest-leaving a entering first
        - middle:   the swaps a_i -> b_i, in order
        - suffix:   from B_last to v_max;        b -> y_q, the latest-entered b leaving first
    Elements of B_1 outside [k] that are never swapped enter first (in the prefix),
    and elements of B_last outside [n-k+1, n] that were never swapped leave last (in the suffix)
    """

    @classmethod
    def normalize_subset(cls, subset, n: int) -> Tuple[int, Tuple[int, ...]]:
        """
        Relabel [n] so that the given subset becomes a suffix [n-s+1 .. n],
        keeping the relative order inside and outside the subset.

        EXAMPLE:  subset {1, 3}, n = 4 -> (2, (3, 1, 4, 2))    [1 -> 3, 2 -> 1, 3 -> 4, 4 -> 2]

        :param subset:  Iterable of distinct integers in [1..n]
        :param n:       Ambient dimension
        :return:        Pair (s, relabel), where relabel[i-1] is the new label of i
        """
        chosen = sorted(set(subset))
        if not chosen or any(not (1 <= v <= n) for v in chosen) or len(chosen) >= n:
            raise InvalidParameter(f"Lifting.normalize_subset(): {subset} must be a non-empty proper subset of [1..{n}]")

        rest = [i for i in range(1, n + 1) if i not in chosen]
        relabel = [0] * n
        for new, old in enumerate(rest + chosen, start=1):
            relabel[old - 1] = new

        return len(chosen), tuple(relabel)



    @classmethod
    def enumerate_es_paths(cls, n: int, k: int, s: int) -> Iterator[ESPath]:
        """
        Stream all the e_S-monotone paths of Delta(n,k), for S = [n-s+1 .. n]:
        first bases in lexicographic order, then swaps (a, b) in lexicographic order

        :param n:   Ambient dimension
        :param k:   Number of ones in each vertex, 1 <= k <= n-1
        :param s:   Size of S, 1 <= s <= n-1
        :return:    A generator of ESPath objects
        """
        if type(n) != int or type(k) != int or type(s) != int:
            raise InvalidParameter(f"Lifting.enumerate_es_paths(): n, k, s must be integers")
        if n < 2 or not (1 <= k <= n - 1) or not (1 <= s <= n - 1):
            raise InvalidParameter(f"Lifting.enumerate_es_paths(): invalid parameters n={n}, k={k}, s={s}")

        S = set(range(n - s + 1, n + 1))
        lowest = max(0, k - (n - s))
        highest = min(k, s)

        def descend(bases: List[Support], swaps: List[Tuple[int, int]]):
            current = bases[-1]
            if len(set(current.elems) & S) == highest:
                yield ESPath(n=n, k=k, s=s, bases=tuple(bases), swaps=tuple(swaps))
                return
            for a in current.elems:
                if a in S:
                    continue
                for b in sorted(S - set(current.elems)):
                    bases.append(current.swap(a, b))
                    swaps.append((a, b))
                    yield from descend(bases, swaps)
                    bases.pop()
                    swaps.pop()

        for elems in combinations(range(1, n + 1), k):
            if len(set(elems) & S) == lowest:
                yield from descend([Support(n=n, elems=elems)], [])



    @classmethod
    def lift(cls, es_path: ESPath) -> MonotonePath:
        """
        The lifted path P↑ of an e_S-monotone path

        EXAMPLE:  ({1,2},{2,3},{3,4}) in Delta(4,2) -> steps (1->3 over {2}), (2->4 over {3})

        :param es_path: An ESPath object
        :return:        A MonotonePath object for the direction (1, ..., n)
        """
        n, k = es_path.n, es_path.k
        leaving = [a for (a, _) in es_path.swaps]
        entering = [b for (_, b) in es_path.swaps]
        first = set(es_path.bases[0].elems)
        last = set(es_path.bases[-1].elems)

        xs = sorted(set(range(1, k + 1)) - first)
        incoming = first - set(range(1, k + 1))
        prefix_targets = sorted(v for v in incoming if v not in leaving) \
                       + sorted((v for v in incoming if v in leaving), key=lambda v: -leaving.index(v))

        ys = sorted(set(range(n - k + 1, n + 1)) - last)
        outgoing = last - set(range(n - k + 1, n + 1))
        suffix_sources = sorted((v for v in outgoing if v in entering), key=lambda v: -entering.index(v)) \
                       + sorted(v for v in outgoing if v not in entering)

        assert len(xs) == len(prefix_targets) and len(ys) == len(suffix_sources), \
            f"Lifting.lift(): unbalanced prefix/suffix blocks for {es_path}"

        moves = list(zip(xs, prefix_targets)) + list(es_path.swaps) + list(zip(suffix_sources, ys))

        current = Support(n=n, elems=tuple(range(1, k + 1)))
        supports = [current]
        for (x, y) in moves:
            current = current.swap(x, y)
            supports.append(current)

        return MonotonePath(n=n, k=k, supports=tuple(supports))
