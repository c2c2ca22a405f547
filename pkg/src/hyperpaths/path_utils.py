# This file contains the shared building blocks of the hyperpaths library:
#       - HyperpathsError (and subclasses)  The error hierarchy raised by every module
#       - Direction         A generic linear functional c, normalized to strictly increasing entries
#       - Support           A k-subset of [n], i.e. the support of a 0/1 vertex of the hypersimplex
#       - EnhancedStep      A step "x -> y over Z" of a monotone path
#       - MonotonePath      An ordered list of Supports from v_min to v_max
#       - PathUtils         Static class with rational parsing/formatting and JSON helpers

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Union, List, Tuple, Optional, Iterable



class HyperpathsError(Exception):
    """
    Base class of all the errors raised by the hyperpaths library
    """


class InvalidParameter(HyperpathsError):
    pass

class InvalidSupport(HyperpathsError):
    pass

class InvalidStepSequence(HyperpathsError):
    pass

class InvalidLatticePath(HyperpathsError):
    pass

class Unsupported(HyperpathsError):
    pass

class ResourceLimit(HyperpathsError):
    pass

class ClassificationError(HyperpathsError):
    pass


class NonGenericOmega(HyperpathsError):
    """
    Raised when a functional omega does not single out an improving neighbor:
    two (or more) neighbors share the maximum slope.
    The vertex and the tied pair of neighbors are kept for diagnostics
    """
    def __init__(self, message: str, at=None, tied_pair=None):
        super().__init__(message)
        self.at = at                    # The Support where the tie occurred
        self.tied_pair = tied_pair      # Pair of Supports with equal maximum slope




######################################################################################################################

class PathUtils:
    """
    Static class with assorted utilities shared by all the modules:
    exact-rational parsing and "p/q" formatting, environment-variable configuration,
    and JSON conversion of paths and steps
    """

    @classmethod
    def to_fraction(cls, value) -> Fraction:
        """
        Turn an int, Fraction or string ("3", "-2/5") into an exact Fraction.
        Floats are rejected, since they would silently bring rounding into exact computations

        :param value:   An int, a Fraction, or a string of the form "p" or "p/q"
        :return:        A Fraction
        """
        if isinstance(value, bool) or isinstance(value, float):
            raise InvalidParameter(f"PathUtils.to_fraction(): only exact values are accepted, not `{value}`")

        if isinstance(value, (int, Fraction)):
            return Fraction(value)

        if isinstance(value, str):
            text = value.strip()
            if "." in text or "e" in text.lower():
                raise InvalidParameter(f"PathUtils.to_fraction(): decimal notation is not allowed (`{value}`); use p/q")
            try:
                return Fraction(text)
            except (ValueError, ZeroDivisionError):
                raise InvalidParameter(f"PathUtils.to_fraction(): unable to parse `{value}` as a rational number")

        raise InvalidParameter(f"PathUtils.to_fraction(): unsupported type {type(value)}")



    @classmethod
    def parse_rational_list(cls, text: str) -> Tuple[Fraction, ...]:
        """
        EXAMPLE:  "1, 2, 7/2" -> (Fraction(1), Fraction(2), Fraction(7, 2))

        :param text:    Comma-separated list of rationals
        :return:        Tuple of Fractions
        """
        parts = [p for p in text.split(",") if p.strip() != ""]
        if not parts:
            raise InvalidParameter("PathUtils.parse_rational_list(): empty list of rationals")

        return tuple(cls.to_fraction(p) for p in parts)



    @classmethod
    def format_rational(cls, value) -> str:
        """
        Lossless "p/q" notation, in lowest terms, with q > 0 (the Fraction class normalizes the sign)

        :param value:   Anything accepted by to_fraction()
        :return:        A string such as "7/2" or "3/1"
        """
        q = cls.to_fraction(value)
        return f"{q.numerator}/{q.denominator}"


    @classmethod
    def format_vector(cls, values) -> List[str]:
        return [cls.format_rational(v) for v in values]



    @classmethod
    def env_int(cls, name: str) -> Optional[int]:
        """
        Read an optional positive integer from the environment variable `name`

        :return:    The integer, or None if the variable is unset or blank
        """
        raw = os.getenv(name)
        if raw is None or raw.strip() == "":
            return None
        try:
            value = int(raw)
        except ValueError:
            raise InvalidParameter(f"PathUtils.env_int(): the environment variable {name} must be an integer (got `{raw}`)")
        if value <= 0:
            raise InvalidParameter(f"PathUtils.env_int(): the environment variable {name} must be positive (got {value})")
        return value


    @classmethod
    def env_float(cls, name: str) -> Optional[float]:
        raw = os.getenv(name)
        if raw is None or raw.strip() == "":
            return None
        try:
            return float(raw)
        except ValueError:
            raise InvalidParameter(f"PathUtils.env_float(): the environment variable {name} must be a number (got `{raw}`)")


    @classmethod
    def env_flag(cls, name: str) -> bool:
        return (os.getenv(name) or "").strip().lower() in ("1", "true", "yes", "on")



    @classmethod
    def path_to_json(cls, path) -> dict:
        """
        EXAMPLE:  {"n": 4, "k": 2, "supports": [[1, 2], [1, 4], [3, 4]]}
        """
        return {"n": path.n, "k": path.k, "supports": [list(s.elems) for s in path.supports]}


    @classmethod
    def path_from_json(cls, record: dict):
        """
        Inverse of path_to_json().  Keys other than "n", "k", "supports" are ignored

        :param record:  A dict in the path JSON schema
        :return:        A MonotonePath object
        """
        try:
            n = int(record["n"])
            k = int(record["k"])
            supports = tuple(Support.of(n, s) for s in record["supports"])
        except (KeyError, TypeError) as ex:
            raise InvalidParameter(f"PathUtils.path_from_json(): malformed path record ({ex})")

        return MonotonePath(n=n, k=k, supports=supports)


    @classmethod
    def step_to_json(cls, step) -> dict:
        return {"x": step.x, "y": step.y, "Z": list(step.Z)}


    @classmethod
    def step_from_json(cls, record: dict):
        return EnhancedStep(x=int(record["x"]), y=int(record["y"]), Z=tuple(int(z) for z in record["Z"]))




######################################################################################################################

@dataclass(frozen=True)
class Direction:
    """
    A generic direction c for the hypersimplex: n pairwise-distinct exact rationals,
    stored in strictly increasing order.

    Since the hypersimplex is invariant under reordering of the coordinates,
    any generic direction can be brought to this form; the sorting permutation is kept in `permutation`:
    the i-th smallest entry (1-based position i) was originally at index permutation[i-1]
    """
    c: Tuple[Fraction, ...]
    permutation: Tuple[int, ...] = None


    def __post_init__(self):
        if len(self.c) < 2:
            raise InvalidParameter(f"Direction(): at least 2 entries are required (got {len(self.c)})")

        for i in range(len(self.c) - 1):
            if not self.c[i] < self.c[i+1]:
                raise InvalidParameter(f"Direction(): the entries must be strictly increasing; "
                                       f"use Direction.from_values() to normalize arbitrary distinct values")

        if self.permutation is None:
            object.__setattr__(self, "permutation", tuple(range(1, len(self.c) + 1)))

        assert sorted(self.permutation) == list(range(1, len(self.c) + 1)), \
            f"Direction(): `permutation` must be a permutation of 1..{len(self.c)}"


    @classmethod
    def default(cls, n: int) -> "Direction":
        """
        The standard direction c = (1, 2, ..., n)

        :param n:   An integer >= 2
        :return:    A Direction object
        """
        if type(n) != int or n < 2:
            raise InvalidParameter(f"Direction.default(): n must be an integer >= 2 (got {n})")

        return cls(c=tuple(Fraction(i) for i in range(1, n+1)))


    @classmethod
    def from_values(cls, values: Iterable) -> "Direction":
        """
        Normalize an arbitrary list of distinct rationals.

        EXAMPLE:  (5, 1, 3) -> c = (1, 3, 5), permutation = (2, 3, 1)

        :param values:  Iterable of ints, Fractions or "p/q" strings, pairwise distinct
        :return:        A Direction object
        """
        vals = [PathUtils.to_fraction(v) for v in values]
        if len(set(vals)) != len(vals):
            raise InvalidParameter(f"Direction.from_values(): the direction is not generic; "
                                   f"entries must be pairwise distinct (got {PathUtils.format_vector(vals)})")

        order = sorted(range(len(vals)), key=lambda i: vals[i])
        return cls(c=tuple(vals[i] for i in order), permutation=tuple(i + 1 for i in order))



    def to_sorted(self, values) -> tuple:
        """
        Relabel a vector given in the original coordinates into sorted positions,
        the labels used by every path and functional paired with this direction

        EXAMPLE:  from_values((5, 1, 3)).to_sorted(("a", "b", "c")) -> ("b", "c", "a")

        :param values:  Sequence of n entries, indexed by the original coordinates
        :return:        Tuple of the same n entries, indexed by sorted position
        """
        if len(values) != len(self.c):
            raise InvalidParameter(f"Direction.to_sorted(): {len(values)} entries given, but n={len(self.c)}")
        return tuple(values[i - 1] for i in self.permutation)


    @property
    def n(self) -> int:
        return len(self.c)


    def __getitem__(self, i: int) -> Fraction:
        """
        1-based access, matching the [n] convention of the supports
        """
        return self.c[i - 1]


    def is_identity(self) -> bool:
        return self.permutation == tuple(range(1, self.n + 1))


    def relabel(self, support: "Support") -> Tuple[int, ...]:
        """
        Express a support, given in the normalized (sorted) labels, in the caller's original labels

        :param support: A Support object
        :return:        Sorted tuple of original indices
        """
        return tuple(sorted(self.permutation[i - 1] for i in support.elems))


    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.c) + ")"




######################################################################################################################

@dataclass(frozen=True, order=True)
class Support:
    """
    The support {i ; v_i = 1} of a vertex v of the hypersimplex Delta(n,k):
    a strictly increasing tuple of k integers in [1..n].
    Instances compare lexicographically on (n, elems)
    """
    n: int
    elems: Tuple[int, ...]


    def __post_init__(self):
        if type(self.n) != int or self.n < 1:
            raise InvalidSupport(f"Support(): n must be a positive integer (got {self.n})")

        for i, e in enumerate(self.elems):
            if not (1 <= e <= self.n):
                raise InvalidSupport(f"Support(): index {e} is out of the range [1..{self.n}]")
            if i > 0 and not self.elems[i-1] < e:
                raise InvalidSupport(f"Support(): the elements {self.elems} are not strictly increasing")


    @classmethod
    def of(cls, n: int, elems: Iterable[int]) -> "Support":
        """
        Build a Support from the given elements, in any order.  Repeated elements are an error

        :param n:       The ambient dimension
        :param elems:   Iterable of integers in [1..n]
        :return:        A Support object
        """
        items = [int(e) for e in elems]
        if len(set(items)) != len(items):
            raise InvalidSupport(f"Support.of(): repeated elements in {items}")
        return cls(n=n, elems=tuple(sorted(items)))


    @property
    def k(self) -> int:
        return len(self.elems)

    def __contains__(self, item) -> bool:
        return item in self.elems

    def __iter__(self):
        return iter(self.elems)

    def __len__(self):
        return len(self.elems)


    def swap(self, x: int, y: int) -> "Support":
        """
        Replace x (which must be present) with y (which must be absent)
        """
        if x not in self.elems or y in self.elems:
            raise InvalidSupport(f"Support.swap(): cannot swap {x} -> {y} in {self}")
        return Support.of(self.n, [e for e in self.elems if e != x] + [y])


    def __str__(self):
        return "{" + ",".join(str(e) for e in self.elems) + "}"




######################################################################################################################

@dataclass(frozen=True)
class EnhancedStep:
    """
    The step "x -> y over Z" of a monotone path:
    x leaves the support, y enters it, and Z is the common support of the two endpoints
    """
    x: int
    y: int
    Z: Tuple[int, ...]


    def __post_init__(self):
        object.__setattr__(self, "Z", tuple(sorted(self.Z)))
        if self.x == self.y or self.x in self.Z or self.y in self.Z:
            raise InvalidStepSequence(f"EnhancedStep(): inconsistent step {self.x} -> {self.y} over {set(self.Z)}")


    def is_improving(self) -> bool:
        """
        With the direction normalized to increasing entries, "c_x < c_y" is just "x < y"
        """
        return self.x < self.y


    def __str__(self):
        return f"({self.x}->{self.y} over {{{','.join(str(z) for z in self.Z)}}})"




######################################################################################################################

@dataclass(frozen=True)
class MonotonePath:
    """
    A monotone path of vertices of Delta(n,k), from v_min = {1..k} to v_max = {n-k+1..n},
    stored as the tuple of the supports of its vertices.
    Every step is a hypersimplex edge (a single swap) that strictly increases the weight
    under the normalized direction.
    The length of the path is its number of vertices
    """
    n: int
    k: int
    supports: Tuple[Support, ...]


    def __post_init__(self):
        object.__setattr__(self, "supports", tuple(self.supports))
        n, k = self.n, self.k

        if not (1 <= k <= n - 1):
            raise InvalidStepSequence(f"MonotonePath(): no monotone path exists for n={n}, k={k}")
        if len(self.supports) < 2:
            raise InvalidStepSequence(f"MonotonePath(): a path needs at least 2 vertices")

        if self.supports[0].elems != tuple(range(1, k + 1)):
            raise InvalidStepSequence(f"MonotonePath(): the path must start at v_min = {set(range(1, k+1))} "
                                      f"(it starts at {self.supports[0]})")
        if self.supports[-1].elems != tuple(range(n - k + 1, n + 1)):
            raise InvalidStepSequence(f"MonotonePath(): the path must end at v_max = {set(range(n-k+1, n+1))} "
                                      f"(it ends at {self.supports[-1]})")

        for s in self.supports:
            if s.n != n or s.k != k:
                raise InvalidStepSequence(f"MonotonePath(): the support {s} doesn't belong to Delta({n},{k})")

        for before, after in zip(self.supports, self.supports[1:]):
            gone = set(before.elems) - set(after.elems)
            new = set(after.elems) - set(before.elems)
            if len(gone) != 1:
                raise InvalidStepSequence(f"MonotonePath(): {before} -> {after} is not an edge of the hypersimplex")
            if not min(gone) < min(new):
                raise InvalidStepSequence(f"MonotonePath(): {before} -> {after} is not an improving step")


    @property
    def length(self) -> int:
        return len(self.supports)


    def key(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(s.elems for s in self.supports)


    def __str__(self):
        return "(" + ",".join(str(s) for s in self.supports) + ")"
