# This file contains the embedding of the monotone paths as points of R^n,
# whose convex hull is the monotone path polytope M(n,k):
#       - EmbeddedPoint         The point psi(P) of a monotone path P
#       - MonotonePathPolytope  Child class of CoherenceOracle: embedding, exact convex-position test, vertices

from .path_utils import PathUtils, MonotonePath
from .coherence import CoherenceOracle
from .exact_lp import ExactLinProg, INFEASIBLE
from dataclasses import dataclass
from fractions import Fraction
from typing import Union, List, Tuple, Optional
import logging

import pandas as pd


logger = logging.getLogger(__name__)



@dataclass(frozen=True)
class EmbeddedPoint:
    coords: Tuple[Fraction, ...]
    source: str                     # Identifies the monotone path (its string representation)

    @property
    def total(self) -> Fraction:
        return sum(self.coords, Fraction(0))




######################################################################################################################

class MonotonePathPolytope(CoherenceOracle):
    """
    The monotone path polytope of Delta(n,k) for the direction c:
    the convex hull of the points
            psi(P) = sum_j  <v_j - v_{j-1}, c> / (2 <v_max - v_min, c>) * (v_j + v_{j-1})
    over all the monotone paths P = (v_1, ..., v_r).
    Its vertices are exactly the points of the coherent paths

    SECTIONS IN THIS CLASS:
        * EMBEDDING
        * VERTICES
    """

    #####################################################################################################

    '''                                       ~   EMBEDDING   ~                                         '''

    def ________EMBEDDING________(DIVIDER):
        pass        # Used to get a better structure view in IDEs
    #####################################################################################################

    def psi_embed(self, path: MonotonePath) -> EmbeddedPoint:
        """
        EXAMPLE:  Delta(2,1), path ({1},{2}), c = (1,2) -> (1/2, 1/2)

        :param path:    A MonotonePath object of this hypersimplex
        :return:        An EmbeddedPoint object, whose coordinates add up to k
        """
        self._check_path(path)
        span = 2 * (self.weight(self.v_max) - self.weight(self.v_min))

        coords = [Fraction(0)] * self.n
        for before, after in zip(path.supports, path.supports[1:]):
            factor = (self.weight(after) - self.weight(before)) / span
            for v in (before, after):
                for i in v.elems:
                    coords[i - 1] += factor

        point = EmbeddedPoint(coords=tuple(coords), source=str(path))
        assert point.total == self.k, f"MonotonePathPolytope.psi_embed(): the coordinates of {point} don't add up to k"
        return point



    #####################################################################################################

    '''                                        ~   VERTICES   ~                                         '''

    def ________VERTICES________(DIVIDER):
        pass        # Used to get a better structure view in IDEs
    #####################################################################################################

    @classmethod
    def is_extreme(cls, point: EmbeddedPoint, cloud: List[EmbeddedPoint]) -> bool:
        """
        True iff the point is not a convex combination of the other points of the cloud
        (the points with different coordinates), decided by the exact feasibility of
                sum_i lambda_i s_i = p,   sum_i lambda_i = 1,   lambda >= 0

        :param point:   An EmbeddedPoint object
        :param cloud:   List of EmbeddedPoint objects
        :return:        True or False
        """
        others = [q.coords for q in cloud if q.coords != point.coords]
        if not others:
            return True

        dim = len(point.coords)
        a_eq = [[q[i] for q in others] for i in range(dim)] + [[1] * len(others)]
        b_eq = list(point.coords) + [1]
        lp = ExactLinProg.with_equalities([], [], a_eq, b_eq, [0] * len(others))

        return lp.solve().status == INFEASIBLE



    @classmethod
    def merge_coincident(cls, points: List[EmbeddedPoint]) -> List[EmbeddedPoint]:
        """
        Keep one point per distinct coordinate vector, in order of first appearance;
        a warning names each coordinate vector shared by several paths

        :param points:  List of EmbeddedPoint objects
        :return:        List of EmbeddedPoint objects with pairwise-distinct coordinates
        """
        distinct = {}
        shared = {}
        for pt in points:
            first = distinct.setdefault(pt.coords, pt)
            if first is not pt:
                shared.setdefault(pt.coords, [first.source]).append(pt.source)

        for coords, sources in shared.items():
            logger.warning("MonotonePathPolytope: %d paths share the point %s and were merged: %s",
                           len(sources), PathUtils.format_vector(coords), ", ".join(sources))

        return list(distinct.values())



    def embed_all(self) -> List[Tuple[MonotonePath, EmbeddedPoint, bool]]:
        """
        Embed every monotone path, and decide the extremeness of each point.
        Coincident points are merged before testing (see merge_coincident);
        the verdict then applies to all the paths sharing the point.
        Every verdict is cross-checked against the LP coherence oracle

        :return:    List of triples (path, point, is_vertex), in canonical path order
        """
        paths = list(self.enumerate_monotone_paths())
        points = [self.psi_embed(p) for p in paths]

        cloud = self.merge_coincident(points)
        extreme = {pt.coords: self.is_extreme(pt, cloud) for pt in cloud}

        result = []
        for path, pt in zip(paths, points):
            verdict = extreme[pt.coords]
            coherent = self.is_coherent_lp(path).verdict
            if verdict != coherent:
                raise Exception(f"MonotonePathPolytope.embed_all(): the oracles disagree on {path}: "
                                f"extreme={verdict}, LP-coherent={coherent}")
            result.append((path, pt, verdict))

        return result



    def mpp_vertices(self) -> List[Tuple[MonotonePath, EmbeddedPoint]]:
        """
        The vertices of the monotone path polytope, with their monotone paths

        EXAMPLE:  Delta(5,2) -> 33 vertices

        :return:    List of pairs (path, point)
        """
        return [(path, pt) for (path, pt, is_vertex) in self.embed_all() if is_vertex]



    def embedding_table(self) -> pd.DataFrame:
        """
        One row per monotone path: the path, its coordinates as "p/q" strings, and the vertex flag

        :return:    A pandas DataFrame with columns "path", "coord_1", ..., "coord_n", "is_vertex"
        """
        rows = []
        for (path, pt, is_vertex) in self.embed_all():
            row = {"path": str(path)}
            row.update({f"coord_{i + 1}": PathUtils.format_rational(v) for i, v in enumerate(pt.coords)})
            row["is_vertex"] = is_vertex
            rows.append(row)

        return pd.DataFrame(rows, columns=["path"] + [f"coord_{i + 1}" for i in range(self.n)] + ["is_vertex"])
