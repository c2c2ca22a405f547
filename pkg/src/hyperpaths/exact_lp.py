# Exact rational linear programming: a two-phase tableau simplex on numpy object arrays of Fractions,
# with Bland's anti-cycling rule.  No floating point is ever involved.
#
#       - LPResult          Outcome of a solve: status, optimal value and optimal point
#       - ExactLinProg      A linear program in canonical form:  maximize c.x  subject to  a.x <= b,  x >= 0

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Union, List, Tuple, Optional

import numpy as np


logger = logging.getLogger(__name__)


BOUNDED = "bounded"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"



@dataclass(frozen=True)
class LPResult:
    status: str
    value: Optional[Fraction] = None
    x: Optional[Tuple[Fraction, ...]] = None
    pivots: int = 0

    @property
    def feasible(self) -> bool:
        return self.status != INFEASIBLE




class ExactLinProg:
    """
    A linear program in canonical form
            maximize    c.x
            subject to  a.x <= b
                        x >= 0
    solved exactly over the rationals.

    If the origin is feasible (b >= 0), the slack variables give the initial basis;
    otherwise a first phase maximizes minus the sum of artificial variables attached to the rows with b_i < 0.
    The tableau keeps the reduced costs in its last row, and minus the objective value in its bottom-right corner
    """

    def __init__(self, a, b, c):
        """
        :param a:   m x n matrix (list of lists) of ints/Fractions
        :param b:   List of m ints/Fractions
        :param c:   List of n ints/Fractions
        """
        self.n = len(c)
        self.m = len(b)

        if len(a) != self.m or any(len(row) != self.n for row in a):
            raise ValueError(f"ExactLinProg(): wrong constraint matrix shape (expected {self.m} x {self.n})")

        self.a = np.array([[Fraction(v) for v in row] for row in a], dtype=object).reshape(self.m, self.n)
        self.b = np.array([Fraction(v) for v in b], dtype=object)
        self.c = np.array([Fraction(v) for v in c], dtype=object)



    @classmethod
    def with_equalities(cls, a_ub, b_ub, a_eq, b_eq, c) -> "ExactLinProg":
        """
        Build a canonical-form program also honoring equality constraints,
        each one turned into a pair of opposite inequalities
        """
        a = [list(row) for row in a_ub]
        b = list(b_ub)
        for row, rhs in zip(a_eq, b_eq):
            a.append(list(row))
            b.append(rhs)
            a.append([-v for v in row])
            b.append(-rhs)
        return cls(a, b, c)



    def solve(self) -> LPResult:
        """
        Run the (one or two) phases of the simplex method

        :return:    An LPResult object
        """
        n, m = self.n, self.m
        bad = [i for i in range(m) if self.b[i] < 0]
        n_art = len(bad)
        width = n + m + n_art       # Number of variables: original, slack, artificial

        tb = np.full((m + 1, width + 1), Fraction(0), dtype=object)
        tb[:m, :n] = self.a
        for i in range(m):
            tb[i, n + i] = Fraction(1)
        tb[:m, -1] = self.b
        basis = list(range(n, n + m))

        for t, i in enumerate(bad):
            tb[i, :] = -tb[i, :]
            tb[i, n + m + t] = Fraction(1)
            basis[i] = n + m + t

        pivots = 0

        if n_art > 0:
            logger.debug("PHASE 1 (%d rows with negative right-hand side)", n_art)
            cost = [Fraction(0)] * (n + m) + [Fraction(-1)] * n_art
            self._set_objective(tb, basis, cost)
            status, steps = self._run(tb, basis)
            pivots += steps
            assert status == BOUNDED, "ExactLinProg.solve(): the first phase cannot be unbounded"

            if tb[-1, -1] != 0:
                return LPResult(status=INFEASIBLE, pivots=pivots)

            # Drive the artificial variables still in the basis (at zero level) out of it
            redundant = []
            for i in range(m):
                if basis[i] >= n + m:
                    j = next((j for j in range(n + m) if tb[i, j] != 0), None)
                    if j is None:
                        redundant.append(i)
                    else:
                        self._pivot(tb, basis, i, j)
                        pivots += 1

            tb = np.delete(tb, redundant, axis=0)
            basis = [v for i, v in enumerate(basis) if i not in redundant]
            tb = np.delete(tb, list(range(n + m, width)), axis=1)

        logger.debug("PHASE 2 (initial basis: %s)", basis)
        cost = list(self.c) + [Fraction(0)] * m
        self._set_objective(tb, basis, cost)
        status, steps = self._run(tb, basis)
        pivots += steps

        if status == UNBOUNDED:
            return LPResult(status=UNBOUNDED, pivots=pivots)

        x = [Fraction(0)] * (n + m)
        for i, v in enumerate(basis):
            x[v] = tb[i, -1]

        return LPResult(status=BOUNDED, value=-tb[-1, -1], x=tuple(x[:n]), pivots=pivots)



    @staticmethod
    def _set_objective(tb, basis, cost) -> None:
        """
        Write the reduced costs of `cost` into the last row, given the current basis
        """
        tb[-1, :-1] = np.array(cost, dtype=object)
        tb[-1, -1] = Fraction(0)
        for i, v in enumerate(basis):
            if cost[v] != 0:
                tb[-1, :] -= cost[v] * tb[i, :]



    @staticmethod
    def _pivot(tb, basis, i: int, j: int) -> None:
        """
        Pivot with entering variable `j` and leaving variable `basis[i]`
        """
        logger.debug("pivoting with entering variable: x_%s and leaving variable: x_%s", j, basis[i])
        basis[i] = j
        tb[i, :] = tb[i, :] / tb[i, j]
        mask = np.full(tb.shape[0], True)
        mask[i] = False
        tb[mask, :] -= np.outer(tb[mask, j], tb[i, :])



    @classmethod
    def _run(cls, tb, basis) -> Tuple[str, int]:
        """
        Pivot by Bland's rule until optimality or unboundedness.
        Entering: the lowest-index variable with positive reduced cost;
        leaving: among the rows attaining the minimum ratio, the one whose basic variable has the lowest index

        :return:    Pair (status, number of pivots)
        """
        rows = tb.shape[0] - 1
        cols = tb.shape[1] - 1
        steps = 0
        while True:
            entering = next((j for j in range(cols) if tb[-1, j] > 0), None)
            if entering is None:
                return BOUNDED, steps

            candidates = [i for i in range(rows) if tb[i, entering] > 0]
            if not candidates:
                return UNBOUNDED, steps

            best = min(tb[i, -1] / tb[i, entering] for i in candidates)
            leaving = min((i for i in candidates if tb[i, -1] / tb[i, entering] == best), key=lambda i: basis[i])

            cls._pivot(tb, basis, leaving, entering)
            steps += 1
