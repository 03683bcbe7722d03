from ._core import (
    acceptance,
    alexander_u3,
    c_lattice,
    eigenvalue_set,
    elliptic_coefficients,
    framed_euler_char,
    k3_spec_json,
    lattice_count,
    run_cli,
    simple_type_census,
    verify_blowup,
    zeta_table,
)

__all__ = [
    "acceptance",
    "alexander_u3",
    "c_lattice",
    "eigenvalue_set",
    "elliptic_coefficients",
    "framed_euler_char",
    "k3_spec_json",
    "lattice_count",
    "run_cli",
    "simple_type_census",
    "verify_blowup",
    "zeta_table",
]
