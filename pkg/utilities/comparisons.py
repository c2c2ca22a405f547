# Utilities for comparisons of path collections, JSON records and length histograms, used by the tests

import collections


def path_key(path) -> tuple:
    """
    A hashable key for a MonotonePath or a LatticePath, independent of the object class

    :param path:    A MonotonePath object (keyed by its supports) or a LatticePath object (keyed by its points)
    :return:        A tuple of tuples of integers
    """
    if hasattr(path, "supports"):
        return tuple(tuple(s.elems) for s in path.supports)
    return tuple(tuple(p) for p in path.points)



def compare_path_collections(c1: list, c2: list) -> bool:
    """
    Compare two collections of paths WITHOUT REGARD to their order.
    Duplicate paths, if present, are treated as completely separate.

    EXAMPLES:   [P, Q] will match [Q, P]
                [P, P] will NOT match [P]

    :param c1:  A (possibly empty) list of MonotonePath or LatticePath objects
    :param c2:  Same as above
    :return:    True if there's a match, or False otherwise
    """
    return collections.Counter(map(path_key, c1)) == collections.Counter(map(path_key, c2))



def compare_recordsets(rs1: [{}], rs2: [{}]) -> bool:
    """
    Compare 2 lists of JSON records (dictionaries) WITHOUT REGARD to the position of the records,
    and to the position of the key:value pairs within each record.
    Duplicate records are treated as completely separate.

    WARNING: meant for SMALL datasets, because it's Order n square

    :param rs1: A (possibly empty) list of dictionaries
    :param rs2: A (possibly empty) list of dictionaries
    :return:    True if there's a match, or False otherwise
    """
    assert isinstance(rs1, list), "compare_recordsets() : The 1st argument is not a list!  Value = " + str(rs1)
    assert isinstance(rs2, list), "compare_recordsets() : The 2nd argument is not a list!  Value = " + str(rs2)

    if len(rs1) != len(rs2):
        return False

    remaining = rs2.copy()      # To avoid altering the list that was passed as argument
    for rec in rs1:
        if rec not in remaining:
            return False
        remaining.remove(rec)

    return True



def compare_histogram(histogram: dict, coefficients, first_length=3) -> bool:
    """
    Compare a histogram {length: count} with a row of consecutive counts starting at `first_length`,
    as found in the published tables; zero counts may be omitted from the histogram

    EXAMPLE:    {3: 4, 4: 4} will match (4, 4)

    :param histogram:       Dict length -> count
    :param coefficients:    Sequence of counts for the lengths first_length, first_length+1, ...
    :param first_length:    Length of the first entry of `coefficients`
    :return:                True if there's a match, or False otherwise
    """
    expected = {first_length + i: v for i, v in enumerate(coefficients) if v != 0}
    actual = {length: v for length, v in histogram.items() if v != 0}
    return expected == actual
