"""Smoke tests for the patstat_engine python package.

The C++ suites carry the heavy verification; these check that the binding
surface works end to end: datasets, stores, every indicator, the oracle
twins, file round-trips and the CLI binary (path via $PATSTAT_CLI).
"""

import os
import subprocess
import sys

import pytest

import patstat_engine as pe


@pytest.fixture(scope="module")
def golden():
    ds = pe.golden_fixture()
    store = pe.Store(ds)
    cohort = pe.select_cohort(store, "F03D", 2005)
    return ds, store, cohort


def test_golden_fixture_loads(golden):
    ds, store, cohort = golden
    assert ds.n_applications > 90
    assert len(cohort) == 35
    assert cohort.members[0] == 55286477


def test_validation_is_clean(golden):
    ds, _, _ = golden
    report = pe.validate_dataset(ds)
    assert report.clean()
    assert report.violation_count() == 0


def test_family_sizes(golden):
    _, store, cohort = golden
    rows = dict(pe.family_size(store, cohort).rows)
    assert rows[65303] == 9
    assert rows[149552] == 14
    geo = dict(pe.geographic_family_size(store, cohort).rows)
    assert geo[65303] == 4


def test_priority_and_grant(golden):
    _, store, cohort = golden
    priority = dict(pe.priority_status(store, cohort).rows)
    assert priority[149552] == 1
    assert priority[65303] == 0
    granted = dict(pe.grant_status(store, cohort, "GB").rows)
    assert granted[21465239] == 1
    assert granted[21466952] == 0


def test_national_phase(golden):
    _, store, cohort = golden
    rows = pe.national_phase_entries(store, cohort, "DK", {"CN", "JP"})
    assert len(rows) == 5
    assert rows[0].pct_appln_id == 15563101
    assert rows[0].entry_appln_auth == "CN"


def test_fractional_shares(golden):
    _, store, _ = golden
    one = pe.Cohort.from_ids([273390])
    rows = pe.fractional_count_by_country(store, one, pe.PersonRole.inventor)
    shares = {r.country: (r.count.numerator, r.count.denominator) for r in rows}
    assert shares["CH"] == ("1", "4")
    assert shares["DE"] == ("3", "4")
    assert rows[0].count.to_decimal(2) == "0.75"


def test_forward_citations_and_external(golden):
    _, store, cohort = golden
    cites = dict(pe.forward_citations_window(store, cohort, "DE", "EP", 3).rows)
    assert cites[14995919] == 5
    ext = pe.external_publication_numbers(store, cohort)
    assert (ext[0].appln_id, ext[0].publn_nr_external) == (21465239, "GB2410379")


def test_oracle_agrees_on_a_random_dataset():
    params = pe.GeneratorParams()
    params.seed = 2024
    params.n_applications = 300
    params.n_persons = 200
    ds = pe.generate_random_dataset(params)
    store = pe.Store(ds)
    fast = pe.select_cohort(store, "F03D", 2005)
    slow = pe.oracle.select_cohort(ds, "F03D", 2005)
    assert fast.members == slow.members
    cohort = fast
    assert (
        pe.family_size(store, cohort).rows == pe.oracle.family_size(ds, cohort).rows
    )
    assert (
        pe.forward_citations_window(store, cohort, "DE", "EP").rows
        == pe.oracle.forward_citations_window(ds, cohort, "DE", "EP").rows
    )


def test_dataset_round_trip(tmp_path):
    params = pe.GeneratorParams()
    params.seed = 99
    params.n_applications = 120
    ds = pe.generate_random_dataset(params)
    pe.write_dataset(ds, tmp_path / "data")
    reloaded = pe.load_dataset(tmp_path / "data")
    assert ds.same_rows(reloaded)


def test_errors_surface_as_python_exceptions():
    params = pe.GeneratorParams()
    params.pct_share = 7.0
    with pytest.raises(pe.InvalidParamsError):
        pe.generate_random_dataset(params)
    ds = pe.golden_fixture()
    store = pe.Store(ds)
    with pytest.raises(pe.UnknownOfficeFormatterError):
        pe.external_publication_numbers(store, pe.Cohort.from_ids([1]), "FR")


@pytest.mark.skipif("PATSTAT_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_end_to_end(tmp_path):
    cli = os.environ["PATSTAT_CLI"]
    data = tmp_path / "data"
    sub = subprocess.run
    assert sub([cli, "fixture", "golden", "--out", str(data)], check=False).returncode == 0

    cohort_file = tmp_path / "cohort.csv"
    out = sub(
        [cli, "cohort", str(data), "--ipc-prefix", "F03D", "--year", "2005",
         "--save", str(cohort_file), "--format", "csv"],
        capture_output=True, text=True, check=False)
    assert out.returncode == 0
    assert out.stdout.splitlines()[0] == "appln_id,appln_auth,appln_nr,appln_kind"
    assert out.stdout.splitlines()[1] == "55286477,AP,200603687,A"

    run = sub(
        [cli, "indicator", "family-size", str(data), "--cohort", str(cohort_file),
         "--format", "csv"],
        capture_output=True, text=True, check=False)
    assert run.returncode == 0
    assert run.stdout.splitlines()[1] == "65303,9"

    oracle_run = sub(
        [cli, "indicator", "family-size", str(data), "--cohort", str(cohort_file),
         "--format", "csv", "--oracle"],
        capture_output=True, text=True, check=False)
    assert oracle_run.returncode == 0
    assert oracle_run.stdout == run.stdout

    fwd = sub(
        [cli, "indicator", "forward-citations", str(data), "--cohort", str(cohort_file),
         "--cited-office", "DE", "--citing-office", "EP", "--format", "csv"],
        capture_output=True, text=True, check=False)
    fwd_oracle = sub(
        [cli, "indicator", "forward-citations", str(data), "--cohort", str(cohort_file),
         "--cited-office", "DE", "--citing-office", "EP", "--format", "csv", "--oracle"],
        capture_output=True, text=True, check=False)
    assert fwd.returncode == 0 and fwd_oracle.returncode == 0
    assert fwd.stdout == fwd_oracle.stdout
    assert fwd.stdout.splitlines()[1] == "14995919,5"

    validate = sub([cli, "validate", str(data)], capture_output=True, text=True, check=False)
    assert validate.returncode == 0

    usage = sub([cli, "indicator", "no-such", str(data), "--cohort", str(cohort_file)],
                capture_output=True, text=True, check=False)
    assert usage.returncode == 1

    unknown_flag = sub([cli, "cohort", str(data), "--no-such-flag"],
                       capture_output=True, text=True, check=False)
    assert unknown_flag.returncode == 1

    missing = sub([cli, "validate", str(tmp_path / "nowhere")],
                  capture_output=True, text=True, check=False)
    assert missing.returncode == 2

    # an empty cohort is a value, not an error
    empty = sub(
        [cli, "cohort", str(data), "--ipc-prefix", "ZZZZ", "--year", "2005",
         "--format", "csv"],
        capture_output=True, text=True, check=False)
    assert empty.returncode == 0
    assert empty.stdout.splitlines() == ["appln_id,appln_auth,appln_nr,appln_kind"]

    # the data directory can come from the environment
    env = dict(os.environ, PATSTAT_DATA_DIR=str(data))
    from_env = sub(
        [cli, "cohort", "--ipc-prefix", "F03D", "--year", "2005", "--format", "csv"],
        capture_output=True, text=True, check=False, env=env)
    assert from_env.returncode == 0
    assert from_env.stdout.splitlines()[1] == "55286477,AP,200603687,A"


@pytest.mark.skipif("PATSTAT_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_validate_flags_broken_data(tmp_path):
    cli = os.environ["PATSTAT_CLI"]
    data = tmp_path / "broken"
    data.mkdir()
    (data / "tls201_appln.csv").write_text(
        "appln_id,appln_auth,appln_nr,appln_kind,appln_filing_date,internat_appln_id\n"
        "1,DE,100,A,2005-01-01,0\n"
        "1,DE,101,A,2005-01-02,0\n"
    )
    result = subprocess.run([cli, "validate", str(data)],
                            capture_output=True, text=True, check=False)
    assert result.returncode == 3
    assert "duplicate appln_id" in result.stdout


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
