"""Transitive subsets and acyclic colorings of tournaments without a forbidden directed path."""
from .alphaseq import (AlphaReport, AlphaSequence, check_alpha, check_smooth, concat,
                       directed_neighbors, make_smooth, truncate)
from .coloring import Coloring, acyclic_coloring, verify_coloring
from .core import (Density, Tournament, build_tournament, density, find_triangle, induced,
                   is_transitive, transitive_tournament, vertex_set)
from .errors import (BudgetExceeded, DegenerateSize, InvariantViolation, MalformedInput,
                     PathfreeError, PatternWitness, PreconditionError, UnsupportedSize)
from .extract import DensePair, PatternState, Trace, create_sequence, make_dense_pair
from .findtrans import TransResult, backward_edge_walk, find_trans, verify_trans_result
from .generators import (FamilySpec, family, random_tournament, search_base,
                         shuffled_transitive, substitution_product)
from .oracles import (OracleBudget, dichromatic_exact, find_pk_exhaustive, homogeneous_sets,
                      max_transitive_exact)
from .patterns import PkPattern, check_pk_witness, path_tournament, pk_pattern
from .schedule import ConstantSchedule, schedule_for

__version__ = "0.1.0"
