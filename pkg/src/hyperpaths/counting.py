# This file contains the exact counting of the coherent monotone paths on Delta(n,2):
#       - CountState        (t, q, c): number of coherent paths of size n ending with TypeI, TypeII, TypeIII
#       - PolyCountState    (T, Q, C): the same, refined by length, as integer polynomials in z
#       - ColumnFit         Polynomial fitted to a column v_{., l} of the length table
#       - CoherentCounting  Static class with the recursions, closed forms and checks

from .path_utils import InvalidParameter
from .hypersimplex import HypersimplexCore
from .lattice_paths import LatticePaths
from dataclasses import dataclass, field
from math import comb
from typing import Union, List, Tuple, Optional

import numpy as np
import pandas as pd
import sympy as sp



@dataclass(frozen=True)
class CountState:
    n: int
    t: int
    q: int
    c: int

    def __post_init__(self):
        assert 2 * self.t == 2 * self.q + self.c, f"CountState(): 2t != 2q + c at n={self.n}"
        assert self.c == self.t + 1, f"CountState(): c != t + 1 at n={self.n}"

    @property
    def total(self) -> int:
        return self.t + self.q + self.c



@dataclass(frozen=True, eq=False)
class PolyCountState:
    """
    Dense coefficient arrays (numpy object arrays of Python ints), indexed by the exponent of z,
    i.e. by the length of the paths.  All three arrays have the same size
    """
    n: int
    T: np.ndarray
    Q: np.ndarray
    C: np.ndarray

    @property
    def V(self) -> np.ndarray:
        return self.T + self.Q + self.C

    def evaluate_at_one(self) -> Tuple[int, int, int]:
        return int(sum(self.T)), int(sum(self.Q)), int(sum(self.C))



@dataclass(frozen=True)
class ColumnFit:
    ell: int
    n0: int                             # First size of the column; the fitting variable is m = n - n0 + 1
    polynomial: sp.Expr                 # In the symbol m
    degree: int
    residuals: dict = field(default_factory=dict)   # Size -> residual, on the points not used for the fit

    @property
    def ok(self) -> bool:
        return self.degree <= self.ell - 3 and all(r == 0 for r in self.residuals.values())




######################################################################################################################

class CoherentCounting:
    """
    Static class with the counting results on the coherent monotone paths of Delta(n,2):
        - the integer matrix recursion on (t, q, c) and the closed form (25 * 4^(n-4) - 1) / 3
        - the polynomial recursion refining the counts by length
        - the longest coherent paths
        - the Catalan count of the longest (not necessarily coherent) monotone paths
        - log-concavity checks, and polynomial fits of the columns of the length table
    """

    M = np.array([[1, 2, 2],
                  [0, 2, 1],
                  [2, 0, 2]], dtype=object)

    START = (3, 1, 4)       # (t_4, q_4, c_4)


    @classmethod
    def count_vector(cls, n: int) -> CountState:
        """
        EXAMPLE:  count_vector(5) -> CountState(n=5, t=13, q=6, c=14)

        :param n:   Size, at least 4
        :return:    A CountState object
        """
        cls._check_size(n, "count_vector")
        v = np.array(cls.START, dtype=object)
        for _ in range(n - 4):
            v = cls.M.dot(v)
        return CountState(n=n, t=int(v[0]), q=int(v[1]), c=int(v[2]))



    @classmethod
    def count_total(cls, n: int) -> int:
        """
        Closed form of the number of coherent monotone paths on Delta(n,2)

        EXAMPLE:  count_total(5) -> 33

        :param n:   Size, at least 4
        :return:    (25 * 4^(n-4) - 1) / 3, exactly
        """
        cls._check_size(n, "count_total")
        numerator = 25 * 4 ** (n - 4) - 1
        assert numerator % 3 == 0, f"CoherentCounting.count_total(): {numerator} is not divisible by 3"
        return numerator // 3



    #####################################################################################################

    '''                                  ~   LENGTH POLYNOMIALS   ~                                     '''

    def ________LENGTH_POLYNOMIALS________(DIVIDER):
        pass        # Used to get a better structure view in IDEs
    #####################################################################################################

    @staticmethod
    def _shift(p: np.ndarray, by: int) -> np.ndarray:
        """
        Multiply the polynomial by z^by
        """
        return np.concatenate((np.zeros(by, dtype=object), p))


    @staticmethod
    def _add(*polys) -> np.ndarray:
        size = max(len(p) for p in polys)
        total = np.zeros(size, dtype=object)
        for p in polys:
            total[:len(p)] += p
        return total


    @classmethod
    def length_polys(cls, n: int) -> PolyCountState:
        """
        Iterate the recursion
                T' = z T + (1+z) Q + (1+z) C
                Q' =       (1+z) Q +     z C
                C' = (z + z^2) T   + (1+z) C
        from T_4 = z^4 + 2z^3,  Q_4 = z^4,  C_4 = 2z^4 + 2z^3

        :param n:   Size, at least 4
        :return:    A PolyCountState object
        """
        cls._check_size(n, "length_polys")
        for state in cls.iter_length_polys(n):
            pass
        return state



    @classmethod
    def iter_length_polys(cls, n_max: int):
        """
        Generator of the PolyCountState objects for the sizes 4, 5, ..., n_max, in that order

        :param n_max:   Largest size, at least 4
        :return:        A generator of PolyCountState objects
        """
        cls._check_size(n_max, "iter_length_polys")
        T = np.array([0, 0, 0, 2, 1], dtype=object)
        Q = np.array([0, 0, 0, 0, 1], dtype=object)
        C = np.array([0, 0, 0, 2, 2], dtype=object)
        z = cls._shift

        for n in range(4, n_max + 1):
            if n > 4:
                T, Q, C = (cls._add(z(T, 1), Q, z(Q, 1), C, z(C, 1)),
                           cls._add(Q, z(Q, 1), z(C, 1)),
                           cls._add(z(T, 1), z(T, 2), C, z(C, 1)))
            yield cls._poly_state(n, T, Q, C)



    @classmethod
    def _poly_state(cls, n: int, T, Q, C) -> PolyCountState:
        size = max(len(T), len(Q), len(C))
        T, Q, C = (cls._add(p, np.zeros(size, dtype=object)) for p in (T, Q, C))

        for p in (T, Q, C):
            assert all(v == 0 for v in p[:3]), "CoherentCounting.length_polys(): nonzero coefficient below length 3"
            assert all(v >= 0 for v in p), "CoherentCounting.length_polys(): negative coefficient"

        return PolyCountState(n=n, T=T, Q=Q, C=C)



    @classmethod
    def length_distribution(cls, n: int) -> dict:
        """
        Number of coherent paths of size n of each length (number of vertices)

        EXAMPLE:  length_distribution(5) -> {3: 4, 4: 16, 5: 12, 6: 1}

        :param n:   Size, at least 4
        :return:    Dict length -> count, over the lengths with a nonzero count
        """
        V = cls.length_polys(n).V
        return {ell: int(v) for ell, v in enumerate(V) if v != 0}



    @classmethod
    def length_table(cls, n_min: int, n_max: int) -> pd.DataFrame:
        """
        The table of the numbers v_{n,l} of coherent paths of size n and length l, in long format

        :param n_min:   First size, at least 4
        :param n_max:   Last size
        :return:        A pandas DataFrame with columns "n", "length", "count"
        """
        cls._check_size(n_min, "length_table")
        if n_max < n_min:
            raise InvalidParameter(f"CoherentCounting.length_table(): empty range of sizes [{n_min}, {n_max}]")

        rows = []
        for n in range(n_min, n_max + 1):
            ell_max, _ = cls.max_coherent_length(n)
            dist = cls.length_distribution(n)
            rows.extend({"n": n, "length": ell, "count": dist.get(ell, 0)} for ell in range(3, ell_max + 1))

        return pd.DataFrame(rows, columns=["n", "length", "count"])



    @classmethod
    def max_coherent_length(cls, n: int) -> Tuple[int, int]:
        """
        The length of the longest coherent paths of size n, and their number:
        floor(3(n-1)/2), reached by a single path if n is odd, and by floor(3(n-1)/2) paths if n is even.
        The values are checked against the length polynomials

        EXAMPLE:  max_coherent_length(10) -> (13, 13)

        :param n:   Size, at least 4
        :return:    Pair (longest length, number of longest paths)
        """
        ell_max = 3 * (n - 1) // 2
        top_count = 1 if n % 2 == 1 else ell_max

        V = cls.length_polys(n).V
        degree = max(i for i, v in enumerate(V) if v != 0)
        assert (degree, V[degree]) == (ell_max, top_count), \
            f"CoherentCounting.max_coherent_length(): the length polynomial at n={n} has degree {degree} " \
            f"and leading coefficient {V[degree]}, not ({ell_max}, {top_count})"

        return ell_max, top_count



    #####################################################################################################

    '''                                  ~   MONOTONE PATH COUNTS   ~                                   '''

    def ________MONOTONE_PATH_COUNTS________(DIVIDER):
        pass        # Used to get a better structure view in IDEs
    #####################################################################################################

    @classmethod
    def catalan_longest_count(cls, n: int) -> int:
        """
        Number of the longest monotone paths on Delta(n,2), which have 2(n-2) steps (2n-3 vertices):
        the standard Young tableaux of the 2 x (n-2) rectangle, C(2(n-2), n-2) / (n-1)

        EXAMPLE:  catalan_longest_count(5) -> 5

        :param n:   Size, at least 3
        :return:    An exact integer
        """
        if type(n) != int or n < 3:
            raise InvalidParameter(f"CoherentCounting.catalan_longest_count(): n must be an integer >= 3 (got {n})")
        return comb(2 * (n - 2), n - 2) // (n - 1)



    @classmethod
    def longest_monotone_paths(cls, n: int) -> list:
        """
        Exhaustively collect the monotone paths of Delta(n,2) with the maximum number of vertices, 2n-3

        :param n:   Size, at least 3
        :return:    List of MonotonePath objects
        """
        core = HypersimplexCore(n, 2)
        return [p for p in core.enumerate_monotone_paths() if p.length == 2 * n - 3]



    @classmethod
    def growth_split(cls, n: int) -> Tuple[int, int]:
        """
        The split of all the diagonal-avoiding paths of size n (dimension 2) into d_n (ending with a step
        (x -> n over n-1)) and s_n (the others), checked against size n+1:
                d_{n+1} = d_n + 2 s_n       s_{n+1} >= 2 d_n + 4 s_n

        :param n:   Size, at least 3
        :return:    Pair (d_n, s_n)
        """
        now = LatticePaths.count_all_da_paths(n, 2)
        after = LatticePaths.count_all_da_paths(n + 1, 2)

        assert after.d == now.d + 2 * now.s, f"CoherentCounting.growth_split(): d_{n+1} != d_{n} + 2 s_{n}"
        assert after.s >= 2 * now.d + 4 * now.s, f"CoherentCounting.growth_split(): s_{n+1} < 2 d_{n} + 4 s_{n}"

        return now.d, now.s



    #####################################################################################################

    '''                                     ~   CHECKERS   ~                                            '''

    def ________CHECKERS________(DIVIDER):
        pass        # Used to get a better structure view in IDEs
    #####################################################################################################

    @classmethod
    def is_log_concave(cls, seq) -> bool:
        """
        True iff a_l^2 >= a_{l-1} a_{l+1} for every interior index of the positive support
        (the span between the first and the last positive entries)

        EXAMPLE:  (1, 2, 1) -> True ;  (1, 1, 3) -> False
        """
        values = [int(v) for v in seq]
        positive = [i for i, v in enumerate(values) if v > 0]
        if len(positive) < 3:
            return True

        span = values[positive[0]: positive[-1] + 1]
        return all(span[i] * span[i] >= span[i - 1] * span[i + 1] for i in range(1, len(span) - 1))



    @classmethod
    def column_polynomial_check(cls, ell: int, n_range) -> ColumnFit:
        """
        For a fixed length l, v_{n,l} is a polynomial in n of degree l-3, from n0 = max(4, ceil(2l/3 + 1)) on.
        Interpolate it, in the variable m = n - n0 + 1, on the first l-2 sizes of n_range,
        and report the residuals on the remaining ones

        EXAMPLE:  ell = 4 -> 12 m - 8

        :param ell:     Length, at least 3
        :param n_range: Iterable of sizes, all >= n0, at least l-2 of them
        :return:        A ColumnFit object
        """
        if type(ell) != int or ell < 3:
            raise InvalidParameter(f"CoherentCounting.column_polynomial_check(): ell must be an integer >= 3 (got {ell})")

        n0 = max(4, (2 * ell + 5) // 3)     # ceil((2 ell + 3) / 3)
        sizes = sorted(set(n_range))
        if any(n < n0 for n in sizes):
            raise InvalidParameter(f"CoherentCounting.column_polynomial_check(): the column of length {ell} "
                                   f"is polynomial only from n = {n0} on")
        if len(sizes) < ell - 2:
            raise InvalidParameter(f"CoherentCounting.column_polynomial_check(): {ell - 2} sizes are needed "
                                   f"for length {ell}, only {len(sizes)} given")

        m = sp.Symbol("m")
        values = {n: cls.length_distribution(n).get(ell, 0) for n in sizes}
        fit_points = [(n - n0 + 1, values[n]) for n in sizes[:ell - 2]]

        polynomial = sp.expand(sp.interpolate(fit_points, m))
        degree = sp.Poly(polynomial, m).degree() if polynomial != 0 else -1
        residuals = {n: values[n] - polynomial.subs(m, n - n0 + 1) for n in sizes[ell - 2:]}

        return ColumnFit(ell=ell, n0=n0, polynomial=polynomial, degree=degree, residuals=residuals)



    @classmethod
    def _check_size(cls, n, caller: str) -> None:
        if type(n) != int or n < 4:
            raise InvalidParameter(f"CoherentCounting.{caller}(): n must be an integer >= 4 (got {n})")
