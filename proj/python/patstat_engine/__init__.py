"""Patent indicator engine over Patstat-style table files.

The heavy lifting lives in the compiled ``_core`` extension; this package
re-exports its surface. Typical use::

    import patstat_engine as pe

    ds = pe.load_dataset("path/to/tables")        # or pe.golden_fixture()
    store = pe.Store(ds)
    cohort = pe.select_cohort(store, "F03D", 2005)
    sizes = pe.family_size(store, cohort)
    for appln_id, size in sizes.rows:
        ...

``patstat_engine.oracle`` holds the brute-force reference implementations
used to audit the indexed operations on small datasets.
"""

from ._core import (  # noqa: F401
    Cohort,
    Dataset,
    Date,
    DuplicateKeyError,
    EngineError,
    ExternalNumberRow,
    Fraction,
    FractionalCountRow,
    FractionalDenominator,
    GeneratorParams,
    IndicatorTable,
    InvalidParamsError,
    InvalidRoleError,
    MissingColumnError,
    NationalPhaseRow,
    PersonRole,
    Store,
    UnknownOfficeFormatterError,
    ValidationIssue,
    ValidationReport,
    __version__,
    external_publication_numbers,
    family_size,
    forward_citations_window,
    fractional_count_by_country,
    generate_random_dataset,
    geographic_family_size,
    golden_fixture,
    grant_status,
    inventor_country_count,
    load_dataset,
    national_phase_entries,
    oracle,
    priority_status,
    select_cohort,
    validate_dataset,
    write_dataset,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
