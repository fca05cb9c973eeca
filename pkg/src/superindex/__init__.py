"""Exact representation-ring machinery for the unitary supergroups U(p|q):
characters, restriction, formal induction and the homogeneous index."""

from .characters import bl_char, decompose, irr_char, kac_char, schur_char
from .errors import DomainError
from .index import (Symbol, atypical_report, bott_verify, euler_symbol, find_symbol_for_module,
                    numeric_index, refined_index)
from .repring import (FormalSeries, LeviEmbedding, TruncationBox, VirtualModule, char_of, dims, induce,
                      pair, parity_shift, restrict, super_dim, tensor)
from .rootdata import GroupSpec, Weight, atypical_roots, is_dominant
from .superpoly import EPS, ONE, ZERO, EpsInt, LaurentPoly, exact_div, permute_vars, specialize, super_eval

__version__ = "0.1.0"
