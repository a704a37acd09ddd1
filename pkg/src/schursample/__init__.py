"""Exact sampling of Schur processes and the tiling models they encode.

The package grows interlaced partition sequences box by box with bijective
local rules, so samples follow the target Boltzmann measure exactly and the
consumed randomness can be reconstructed from the output.
"""

from .partitions import EMPTY, Partition, conjugate, from_maya, interlaces, to_maya
from .rng import RandomSource
from .sampler import (
    DivergenceError,
    ProcessSample,
    in_place_boundary_sample,
    reconstruct_inputs,
    schur_sample,
)
from .symmetric import SymmetricSample, symmetric_schur_sample, symmetric_weight
from .unbounded import (
    ParamSeq,
    PyramidalParameters,
    PyramidalSampler,
    WordConvention,
    mixed_plancherel_sample,
    plancherel_sample,
    unbounded_schur_sample,
)
from .words import (
    Rel,
    Word,
    encoded_shape,
    format_word,
    parse_word,
    precompute_par,
    q_volume_parameters,
    symmetrize,
)
from .zfun import ZValue, z_finite, z_pyramidal, z_symmetric

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "DivergenceError",
    "ParamSeq",
    "Partition",
    "ProcessSample",
    "PyramidalParameters",
    "PyramidalSampler",
    "RandomSource",
    "Rel",
    "SymmetricSample",
    "Word",
    "WordConvention",
    "ZValue",
    "conjugate",
    "encoded_shape",
    "format_word",
    "from_maya",
    "in_place_boundary_sample",
    "interlaces",
    "mixed_plancherel_sample",
    "parse_word",
    "plancherel_sample",
    "precompute_par",
    "q_volume_parameters",
    "reconstruct_inputs",
    "schur_sample",
    "symmetric_schur_sample",
    "symmetric_weight",
    "symmetrize",
    "to_maya",
    "unbounded_schur_sample",
    "z_finite",
    "z_pyramidal",
    "z_symmetric",
]
