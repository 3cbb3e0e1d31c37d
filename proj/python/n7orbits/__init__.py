"""Orbit-method toolkit for the 7-dimensional nilpotent group N7.

The heavy lifting lives in the compiled extension ``_n7orbits``; this package
re-exports its surface.
"""

from _n7orbits import (  # noqa: F401
    Grid,
    OrbitSequence,
    StructureConstants,
    TestFunction,
    bch_product,
    bch_product_f,
    classify_layer,
    coadjoint,
    induced_kernel,
    limit_set,
    ncdl_report,
    operator_norm,
    orbit_invariants,
    pi0_sup_norm,
    polarization_dim,
    sigma_gamma0_norm,
    stabilizer_dim,
    verify_limit,
)

__all__ = [
    "Grid",
    "OrbitSequence",
    "StructureConstants",
    "TestFunction",
    "bch_product",
    "bch_product_f",
    "classify_layer",
    "coadjoint",
    "induced_kernel",
    "limit_set",
    "ncdl_report",
    "operator_norm",
    "orbit_invariants",
    "pi0_sup_norm",
    "polarization_dim",
    "sigma_gamma0_norm",
    "stabilizer_dim",
    "verify_limit",
]
