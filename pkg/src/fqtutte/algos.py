"""Uniform front door to the three Tutte algorithms.

Algorithm names: 'def' is the subset-enumeration oracle, 'general' the
independent-set enumeration, 'wt2' the weight-<=2 lattice DP.  All three
produce the identical rank-size table for inputs they accept, so the
polynomial files they emit are byte-identical.
"""

from .lexgen import tutte_lexgen
from .tutte import tau_to_tutte, tutte_bruteforce
from .wt2 import tutte_wt2

ALGORITHMS = ("def", "general", "wt2")


def tutte_table(mat, algo="general", counters=None, threads=1):
    if algo == "def":
        return tutte_bruteforce(mat, threads=threads)
    if algo == "general":
        return tutte_lexgen(mat, counters=counters)
    if algo == "wt2":
        return tutte_wt2(mat, counters=counters)
    raise ValueError("unknown algorithm %r; expected one of %s" % (algo, (ALGORITHMS,)))


def tutte_poly(mat, algo="general", counters=None, threads=1):
    """Tutte polynomial of a full-rank matrix via the chosen algorithm.

    Monomial coefficients of an actual matroid are nonnegative; that is
    asserted here, so a failure indicates an algorithm bug.
    """
    table = tutte_table(mat, algo, counters=counters, threads=threads)
    poly = tau_to_tutte(table)
    poly.assert_nonnegative()
    return poly
