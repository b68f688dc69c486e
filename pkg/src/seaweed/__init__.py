"""Index of seaweed (biparabolic) subalgebras of the classical Lie algebras.

Three independent routes to the same integer:

* :mod:`seaweed.meander` counts cycles and segments of the arc diagram;
* :mod:`seaweed.reduction` rewrites compositions gcd-style, at any scale;
* :mod:`seaweed.oracle` realizes the subalgebra as matrices and measures
  the rank of a sampled antisymmetric pairing.

:mod:`seaweed.formulas` adds closed forms and Frobenius classifications,
and :mod:`seaweed.cli` wires everything to the ``seaweed`` command.
"""

from .core import (Composition, InvalidComposition, SeaweedSpec, SpecError,
                   XiMembership, make_spec, normalize, parse_spec, format_spec,
                   xi_membership)
from .meander import (Meander, ComponentReport, build, build_A, build_BC,
                      build_D, components, index_A, index_BC, index_D,
                      index_from_meander, psi_A, render)
from .reduction import (ReductionState, ReductionTrace, index_A_reduced,
                        index_BC_reduced, index_D_reduced, reduce_index,
                        reduce_step_C, to_parabolic_C, insert_block_C,
                        alpha_step_C, reduction_core, replay_trace)
from .formulas import (ThreeBlockParams, FrobeniusVerdict, index_A_twoblock,
                       index_A_threeblock, index_C_twoblock,
                       index_BC_threeblock, index_D_threeblock,
                       frobenius_threeblock, frobenius_chain_family,
                       padded_parabolic_family, index_A_repeated,
                       index_D_repeated, frobenius_D_repeated,
                       frobenius_doubling, frobenius_census)
from .oracle import (MatrixAlgebraBasis, OracleResult, realize, oracle_dim,
                     oracle_index)

__version__ = "0.1.0"
