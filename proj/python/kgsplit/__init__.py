"""Splitting symplectic integrators for the disordered Klein-Gordon chain."""

from ._kgsplit import (  # noqa: F401
    BenchRow,
    BenchTable,
    ConfigFile,
    Diagnostics,
    Lattice,
    ObservationRecord,
    RunConfig,
    RunResult,
    Scheme,
    Stage,
    StageKind,
    State,
    ValidationCheck,
    ValidationReport,
    WorkCounter,
    bench_suite,
    calibrate_tau,
    catalog_names,
    catalog_scheme,
    central_site_index,
    default_order_taus,
    diagnostics,
    epsilon_scaling_probe,
    flow_a,
    flow_b,
    flow_corrector,
    format_catalog_table,
    format_csv,
    grad_b,
    kinetic_energy,
    load_config,
    load_lattice,
    make_lattice,
    measure_order,
    parse_config,
    potential_energy,
    run_experiment,
    save_lattice,
    serialize_config,
    single_site_excitation,
    site_energies,
    step,
    total_energy,
    validate,
    yoshida_compose,
)

__all__ = [name for name in dir() if not name.startswith("_")]
