# This file contains the diagonal-avoiding lattice paths, and their utilities:
#       - LatticePath       A path in [n]^k whose points have pairwise-distinct coordinates
#       - DACount           Total number of diagonal-avoiding paths (and, for k=2, its split d_n + s_n)
#       - LatticePaths      Static class with the bijection to monotone paths, and the restriction (k=2)

from .path_utils import (Support, EnhancedStep, MonotonePath,
                         InvalidParameter, InvalidLatticePath, InvalidStepSequence, Unsupported, ResourceLimit)
from .hypersimplex import HypersimplexCore
from dataclasses import dataclass
from typing import Union, List, Tuple, Optional



@dataclass(frozen=True)
class LatticePath:
    """
    A diagonal-avoiding lattice path of size n and dimension k:
    a sequence of points of [n]^k such that
        - the first point is (k, k-1, ..., 1)
        - the coordinates of the final point are {n-k+1, ..., n}, in some order
        - within each point, the coordinates are pairwise distinct
        - consecutive points differ in exactly one coordinate, which strictly increases

    All the validations take place at construction, raising InvalidLatticePath
    """
    n: int
    k: int
    points: Tuple[Tuple[int, ...], ...]


    def __post_init__(self):
        points = tuple(tuple(int(v) for v in p) for p in self.points)
        object.__setattr__(self, "points", points)
        n, k = self.n, self.k

        if not (1 <= k <= n - 1):
            raise InvalidLatticePath(f"LatticePath(): invalid size/dimension n={n}, k={k}")
        if len(points) < 2:
            raise InvalidLatticePath("LatticePath(): a path needs at least 2 points")
        if points[0] != tuple(range(k, 0, -1)):
            raise InvalidLatticePath(f"LatticePath(): the path must start at {tuple(range(k, 0, -1))}, not {points[0]}")
        if set(points[-1]) != set(range(n - k + 1, n + 1)):
            raise InvalidLatticePath(f"LatticePath(): the final point {points[-1]} doesn't have coordinates "
                                     f"{set(range(n - k + 1, n + 1))}")

        for p in points:
            if len(p) != k or any(not (1 <= v <= n) for v in p):
                raise InvalidLatticePath(f"LatticePath(): the point {p} is not in [{n}]^{k}")
            if len(set(p)) != k:
                raise InvalidLatticePath(f"LatticePath(): the point {p} lies on a diagonal")

        for before, after in zip(points, points[1:]):
            changed = [i for i in range(k) if before[i] != after[i]]
            if len(changed) != 1 or not before[changed[0]] < after[changed[0]]:
                raise InvalidLatticePath(f"LatticePath(): {before} -> {after} is not a step "
                                         f"increasing exactly one coordinate")


    @property
    def length(self) -> int:
        return len(self.points)


    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "points": [list(p) for p in self.points]}


    @classmethod
    def from_json(cls, record: dict) -> "LatticePath":
        try:
            return cls(n=int(record["n"]), k=int(record["k"]), points=tuple(tuple(p) for p in record["points"]))
        except (KeyError, TypeError) as ex:
            raise InvalidLatticePath(f"LatticePath.from_json(): malformed record ({ex})")


    def __str__(self):
        return "(" + ",".join("(" + ",".join(str(v) for v in p) + ")" for p in self.points) + ")"



@dataclass(frozen=True)
class DACount:
    total: int
    d: Optional[int] = None     # Paths ending with a step (x -> n over n-1); only for k=2
    s: Optional[int] = None     # All the other ones; only for k=2




######################################################################################################################

class LatticePaths:
    """
    Static class with the operations on diagonal-avoiding lattice paths:
    the bijection with the monotone paths of the hypersimplex,
    the restriction from size n+1 to size n (dimension 2 only), and the path counts
    """

    @classmethod
    def steps_of(cls, lattice: LatticePath) -> List[EnhancedStep]:
        """
        The enhanced steps of a lattice path: at each step, the coordinate that changes goes from x to y,
        and Z is the set of the unchanged coordinates

        :param lattice: A LatticePath object
        :return:        List of EnhancedStep objects
        """
        steps = []
        for before, after in zip(lattice.points, lattice.points[1:]):
            (i,) = [i for i in range(lattice.k) if before[i] != after[i]]
            steps.append(EnhancedStep(x=before[i], y=after[i], Z=tuple(v for j, v in enumerate(before) if j != i)))
        return steps



    @classmethod
    def from_steps(cls, n: int, k: int, steps: List[EnhancedStep]) -> LatticePath:
        """
        Build the lattice path with the given enhanced steps, starting from (k, k-1, ..., 1):
        each step replaces the coordinate equal to x with y

        :param n:       Size
        :param k:       Dimension
        :param steps:   List of EnhancedStep objects
        :return:        A LatticePath object (InvalidLatticePath if the steps don't chain)
        """
        current = list(range(k, 0, -1))
        points = [tuple(current)]
        for i, step in enumerate(steps):
            if step.x not in current:
                raise InvalidLatticePath(f"LatticePaths.from_steps(): step #{i+1} {step} "
                                         f"doesn't apply to the point {tuple(current)}")
            p = current.index(step.x)
            if sorted(current[:p] + current[p+1:]) != list(step.Z):
                raise InvalidLatticePath(f"LatticePaths.from_steps(): step #{i+1} {step} "
                                         f"doesn't match the point {tuple(current)}")
            current[p] = step.y
            points.append(tuple(current))

        return LatticePath(n=n, k=k, points=tuple(points))



    @classmethod
    def lattice_path_of(cls, path: MonotonePath) -> LatticePath:
        """
        The image L(P) of a monotone path under the bijection:
        same enhanced steps, with the leaving index x replaced in place by y

        EXAMPLE:  ({1,2},{1,3},{2,3}) -> ((2,1),(3,1),(3,2))

        :param path:    A MonotonePath object
        :return:        A LatticePath object
        """
        return cls.from_steps(path.n, path.k, HypersimplexCore.enhanced_steps(path))



    @classmethod
    def path_of_lattice(cls, lattice: LatticePath) -> MonotonePath:
        """
        The monotone path whose supports are the coordinate sets of the points (inverse of lattice_path_of)

        :param lattice: A LatticePath object
        :return:        A MonotonePath object
        """
        if not isinstance(lattice, LatticePath):
            raise InvalidLatticePath(f"LatticePaths.path_of_lattice(): expected a LatticePath, not {type(lattice)}")
        try:
            return MonotonePath(n=lattice.n, k=lattice.k,
                                supports=tuple(Support.of(lattice.n, p) for p in lattice.points))
        except InvalidStepSequence as ex:
            raise InvalidLatticePath(f"LatticePaths.path_of_lattice(): {ex}")



    @classmethod
    def restrict(cls, lattice: LatticePath) -> LatticePath:
        """
        Restriction of a diagonal-avoiding lattice path of size n+1 (dimension 2) to size n:
            1) every coordinate equal to n+1 is capped to n
            2) the last point is retargeted: if the previous (capped) point is (x, n), it becomes (n-1, n);
               if it is (n, x), it becomes (n, n-1)
            3) consecutive duplicate points are discarded, until no doubles remain

        :param lattice: A LatticePath object of dimension 2 and size at least 4
        :return:        A LatticePath object of size one less
        """
        if lattice.k != 2:
            raise Unsupported(f"LatticePaths.restrict(): the restriction is only defined in dimension 2 (k={lattice.k})")
        if lattice.n < 4:
            raise InvalidParameter(f"LatticePaths.restrict(): size {lattice.n} is too small; at least 4 is required")

        n = lattice.n - 1
        capped = [tuple(min(v, n) for v in p) for p in lattice.points]

        previous = capped[-2]
        second_is_top = (previous[1] == n)      # (x, n)
        first_is_top = (previous[0] == n)       # (n, x)
        assert second_is_top != first_is_top, \
            f"LatticePaths.restrict(): ambiguous retargeting of the last point after {previous} in {lattice}"

        capped[-1] = (n - 1, n) if second_is_top else (n, n - 1)

        points = capped
        while True:
            deduped = [points[0]] + [p for before, p in zip(points, points[1:]) if p != before]
            if len(deduped) == len(points):
                break
            points = deduped

        return LatticePath(n=n, k=2, points=tuple(points))



    @classmethod
    def count_all_da_paths(cls, n: int, k: int, max_paths=None) -> DACount:
        """
        Count all the diagonal-avoiding lattice paths of size n and dimension k
        (equivalently, all the monotone paths of Delta(n,k)).
        For k=2, also split the total into d_n (paths ending with a step (x -> n over n-1)) and s_n (the others)

        EXAMPLE:  (4, 2) -> DACount(total=10, d=3, s=7)

        :param n:           Size
        :param k:           Dimension
        :param max_paths:   Optional budget: a ResourceLimit exception is raised if the total exceeds it
        :return:            A DACount object
        """
        core = HypersimplexCore(n, k, max_paths=max_paths)
        into = core.paths_into()
        total = into[core.v_max]

        if core.max_paths is not None and total > core.max_paths:
            raise ResourceLimit(f"LatticePaths.count_all_da_paths(): {total} paths exceed the budget of {core.max_paths}")

        if k != 2:
            return DACount(total=total)

        # The step (x -> n over n-1) leaves the vertex {x, n-1}, with x < n-1
        d = sum(into[Support(n=n, elems=(x, n - 1))] for x in range(1, n - 1))
        return DACount(total=total, d=d, s=total - d)
