"""Exact Tutte polynomials of linear matroids over finite fields.

Three interchangeable algorithms produce the same rank-size table:
subset enumeration ('def'), independent-set enumeration ('general'), and
a lattice dynamic program for column weight at most two ('wt2').  On top
sit full-support codeword counting with the Crapo-Rota correspondence
and a chain of counting-preserving CSP reductions ending in generator
matrices.
"""

from .algos import ALGORITHMS, tutte_poly, tutte_table
from .critical import (
    LinearCode,
    count_full_support,
    count_full_support_tuples,
    extension_code,
    verify_critical,
)
from .gf import FieldCtx, ctx_new, embed, embedding_map
from .lexgen import (
    is_least_generator,
    least_generator,
    prefix_dependent_set,
    tutte_lexgen,
)
from .matroid import (
    FqMatrix,
    from_graph,
    mask_of,
    max_col_weight,
    parse_graph,
    parse_matrix,
    rank,
    restrict_to_row_basis,
    write_graph,
    write_matrix,
)
from .tutte import (
    RankSizeTable,
    TuttePoly,
    evaluate,
    poly_from_text,
    tau_to_tutte,
    tutte_bruteforce,
)
from .wt2 import Multigraph, edge_counts, multigraph_of, tutte_wt2, wt2_tables

__version__ = "0.1.0"
