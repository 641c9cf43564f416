"""Halidon rings on Z_n and what they buy you.

A halidon ring of index m carries a primitive m-th root of unity (in the
strong, geometric-sum sense) with m invertible.  On top of that structure
this package computes group-ring spectra, units and idempotents in Z_n[C_m],
number-theoretic Fourier transforms and convolution, circulant bilinear
forms, and Maschke-style module splittings for finite groups given as
multiplication tables.
"""

from .errors import (
    EvenModulus,
    HalidonError,
    InvalidStructure,
    InvalidTable,
    MismatchedRing,
    NotIdempotentSpectrum,
    NotProjection,
    NotUnit,
    OrderNotInvertible,
    ReconstructionMismatch,
    TooLarge,
)
from .group_ring import GroupRingElement, Spectrum, census, idempotent_from_spectrum
from .maschke import (
    GroupTable,
    Projection,
    Representation,
    SplitModule,
    average_projection,
    cyclic_decomposition,
    permutation_rep,
    regular_rep_cyclic,
    split_module,
)
from .ring_core import (
    RingProfile,
    carmichael,
    euler_phi,
    factorize,
    halidon_psi,
    idempotents,
    involutions,
    mod_inv,
    profile,
    units,
)
from .rings import (
    HalidonRing,
    aut_quadratic,
    detect,
    is_primitive_root,
    primitive_roots,
    rigidity_check,
)
from .transform import (
    bilinear_eval,
    circulant,
    convolve,
    dft,
    gram_closed_form,
    gram_inverse,
    gram_s_basis,
    idft,
    is_nondegenerate,
    s_basis,
    vandermonde,
    vandermonde_conjugate,
)

__version__ = "0.1.0"

__all__ = [
    "EvenModulus",
    "GroupRingElement",
    "GroupTable",
    "HalidonError",
    "HalidonRing",
    "InvalidStructure",
    "InvalidTable",
    "MismatchedRing",
    "NotIdempotentSpectrum",
    "NotProjection",
    "NotUnit",
    "OrderNotInvertible",
    "Projection",
    "ReconstructionMismatch",
    "Representation",
    "RingProfile",
    "Spectrum",
    "SplitModule",
    "TooLarge",
    "aut_quadratic",
    "average_projection",
    "bilinear_eval",
    "carmichael",
    "census",
    "circulant",
    "convolve",
    "cyclic_decomposition",
    "detect",
    "dft",
    "euler_phi",
    "factorize",
    "gram_closed_form",
    "gram_inverse",
    "gram_s_basis",
    "halidon_psi",
    "idempotent_from_spectrum",
    "idempotents",
    "idft",
    "involutions",
    "is_nondegenerate",
    "is_primitive_root",
    "mod_inv",
    "permutation_rep",
    "primitive_roots",
    "profile",
    "regular_rep_cyclic",
    "rigidity_check",
    "s_basis",
    "split_module",
    "units",
    "vandermonde",
    "vandermonde_conjugate",
]
