#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <utility>
#include <vector>

#include "patstat/errors.hpp"
#include "patstat/fixtures.hpp"
#include "patstat/ingest.hpp"
#include "patstat/oracle.hpp"
#include "patstat/report.hpp"
#include "patstat/store.hpp"

namespace py = pybind11;
using namespace patstat;

namespace {

std::vector<std::pair<long long, long long>> table_rows(const IndicatorTable& table) {
  std::vector<std::pair<long long, long long>> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) out.emplace_back(row.appln_id, row.value);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "patent indicator engine over Patstat-style tables";

  // the base translator first: translators run newest-first, so the
  // specific exceptions must be registered after their base
  py::register_exception<Error>(m, "EngineError");
  py::register_exception<MissingColumnError>(m, "MissingColumnError");
  py::register_exception<DuplicateKeyError>(m, "DuplicateKeyError");
  py::register_exception<UnknownOfficeFormatterError>(m, "UnknownOfficeFormatterError");
  py::register_exception<InvalidParamsError>(m, "InvalidParamsError");
  py::register_exception<InvalidRoleError>(m, "InvalidRoleError");

  py::class_<Date>(m, "Date")
      .def_static(
          "make",
          [](int y, int mth, int d) -> std::optional<Date> { return Date::make(y, mth, d); })
      .def_property_readonly("year", &Date::year)
      .def_property_readonly("month", &Date::month)
      .def_property_readonly("day", &Date::day)
      .def("add_years", &Date::add_years)
      .def("__str__", &Date::to_string)
      .def("__repr__", [](const Date& d) { return "Date(" + d.to_string() + ")"; })
      .def(py::self == py::self)
      .def(py::self < py::self);

  py::class_<Fraction>(m, "Fraction")
      .def(py::init<long long, long long>(), py::arg("numerator"),
           py::arg("denominator") = 1)
      .def_property_readonly("numerator",
                             [](const Fraction& f) { return f.numerator().str(); })
      .def_property_readonly("denominator",
                             [](const Fraction& f) { return f.denominator().str(); })
      .def("to_decimal", &Fraction::to_decimal, py::arg("places") = 1)
      .def("__str__", &Fraction::to_string)
      .def("__repr__", [](const Fraction& f) { return "Fraction(" + f.to_string() + ")"; })
      .def("__eq__",
           [](const Fraction& a, const Fraction& b) { return a == b; })
      .def("__float__", [](const Fraction& f) {
        return std::stod(f.numerator().str()) / std::stod(f.denominator().str());
      });

  py::class_<PatstatDataset>(m, "Dataset")
      .def(py::init<>())
      .def_property_readonly(
          "n_applications",
          [](const PatstatDataset& ds) { return ds.applications.size(); })
      .def_property_readonly(
          "n_publications",
          [](const PatstatDataset& ds) { return ds.publications.size(); })
      .def_property_readonly("n_persons",
                             [](const PatstatDataset& ds) { return ds.persons.size(); })
      .def_property_readonly("total_rows", &PatstatDataset::total_rows)
      .def("same_rows", &PatstatDataset::same_rows)
      .def("__repr__", [](const PatstatDataset& ds) {
        return "<Dataset applications=" + std::to_string(ds.applications.size()) +
               " publications=" + std::to_string(ds.publications.size()) +
               " total_rows=" + std::to_string(ds.total_rows()) + ">";
      });

  py::class_<ValidationIssue>(m, "ValidationIssue")
      .def_readonly("table", &ValidationIssue::table)
      .def_readonly("check", &ValidationIssue::check)
      .def_readonly("violation", &ValidationIssue::violation)
      .def_readonly("count", &ValidationIssue::count)
      .def_readonly("sample_keys", &ValidationIssue::sample_keys);

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("issues", &ValidationReport::issues)
      .def("clean", &ValidationReport::clean)
      .def("violation_count", &ValidationReport::violation_count)
      .def("__str__", &ValidationReport::to_string);

  py::class_<Cohort>(m, "Cohort")
      .def_static("from_ids", &Cohort::from_ids)
      .def_readonly("members", &Cohort::members)
      .def("__len__", [](const Cohort& c) { return c.members.size(); })
      .def_property_readonly("provenance",
                             [](const Cohort& c) { return c.provenance.describe(); });

  py::class_<GeneratorParams>(m, "GeneratorParams")
      .def(py::init<>())
      .def_readwrite("seed", &GeneratorParams::seed)
      .def_readwrite("n_applications", &GeneratorParams::n_applications)
      .def_readwrite("n_persons", &GeneratorParams::n_persons)
      .def_readwrite("family_geometric_p", &GeneratorParams::family_geometric_p)
      .def_readwrite("citation_density", &GeneratorParams::citation_density)
      .def_readwrite("pct_share", &GeneratorParams::pct_share)
      .def_readwrite("missing_date_share", &GeneratorParams::missing_date_share)
      .def_readwrite("missing_country_share", &GeneratorParams::missing_country_share)
      .def_readwrite("sequence_gap_share", &GeneratorParams::sequence_gap_share)
      .def_readwrite("family_membership_share", &GeneratorParams::family_membership_share)
      .def_readwrite("priority_share", &GeneratorParams::priority_share)
      .def_readwrite("authorities", &GeneratorParams::authorities)
      .def_readwrite("filing_year_min", &GeneratorParams::filing_year_min)
      .def_readwrite("filing_year_max", &GeneratorParams::filing_year_max);

  py::class_<IndexedStore>(m, "Store")
      .def(py::init([](const PatstatDataset& ds) { return IndexedStore::build(ds); }),
           py::arg("dataset"))
      .def("application_exists",
           [](const IndexedStore& s, long long id) { return s.application(id) != nullptr; })
      .def("earliest_publication_date",
           [](const IndexedStore& s, long long id) -> std::optional<std::string> {
             const auto date = s.earliest_publication_date(id);
             if (!date) return std::nullopt;
             return date->to_string();
           });

  py::class_<NationalPhaseRow>(m, "NationalPhaseRow")
      .def_readonly("pct_appln_id", &NationalPhaseRow::pct_appln_id)
      .def_readonly("pct_appln_auth", &NationalPhaseRow::pct_appln_auth)
      .def_readonly("pct_appln_nr", &NationalPhaseRow::pct_appln_nr)
      .def_readonly("pct_appln_kind", &NationalPhaseRow::pct_appln_kind)
      .def_readonly("entry_appln_id", &NationalPhaseRow::entry_appln_id)
      .def_readonly("entry_appln_auth", &NationalPhaseRow::entry_appln_auth)
      .def("__repr__", [](const NationalPhaseRow& r) {
        return "<NationalPhaseRow pct=" + std::to_string(r.pct_appln_id) +
               " entry=" + std::to_string(r.entry_appln_id) + " " + r.entry_appln_auth + ">";
      });

  py::class_<FractionalCountRow>(m, "FractionalCountRow")
      .def_readonly("country", &FractionalCountRow::country)
      .def_readonly("count", &FractionalCountRow::count)
      .def("__repr__", [](const FractionalCountRow& r) {
        return "<FractionalCountRow " + (r.country ? *r.country : std::string("None")) +
               "=" + r.count.to_string() + ">";
      });

  py::class_<ExternalNumberRow>(m, "ExternalNumberRow")
      .def_readonly("appln_id", &ExternalNumberRow::appln_id)
      .def_readonly("publn_nr_patstat", &ExternalNumberRow::publn_nr_patstat)
      .def_readonly("publn_nr_external", &ExternalNumberRow::publn_nr_external);

  py::class_<IndicatorTable>(m, "IndicatorTable")
      .def_readonly("indicator", &IndicatorTable::indicator)
      .def_readonly("value_column", &IndicatorTable::value_column)
      .def_readonly("order_rule", &IndicatorTable::order_rule)
      .def_property_readonly("rows", &table_rows)
      .def("__len__", [](const IndicatorTable& t) { return t.rows.size(); });

  py::enum_<PersonRole>(m, "PersonRole")
      .value("inventor", PersonRole::inventor)
      .value("applicant", PersonRole::applicant);

  py::enum_<FractionalDenominator>(m, "FractionalDenominator")
      .value("max_sequence", FractionalDenominator::max_sequence)
      .value("row_count", FractionalDenominator::row_count);

  // dataset sources
  m.def("golden_fixture", &golden_fixture);
  m.def("generate_random_dataset", &generate_random_dataset, py::arg("params"));
  m.def(
      "load_dataset",
      [](const std::filesystem::path& directory) { return load_dataset(directory); },
      py::arg("directory"));
  m.def("write_dataset", &write_dataset, py::arg("dataset"), py::arg("directory"));
  m.def("validate_dataset", &validate_dataset, py::arg("dataset"));

  // indicator operations over an indexed store
  m.def(
      "select_cohort",
      [](const IndexedStore& store, const std::string& prefix, int year,
         const std::vector<std::string>& kinds) {
        return select_cohort(store, {prefix, year, kinds});
      },
      py::arg("store"), py::arg("ipc_prefix"), py::arg("filing_year"),
      py::arg("kinds") = std::vector<std::string>{"A", "W"});
  m.def("national_phase_entries", &national_phase_entries, py::arg("store"),
        py::arg("cohort"), py::arg("receiving_office"), py::arg("target_offices"));
  m.def("priority_status", &priority_status, py::arg("store"), py::arg("cohort"));
  m.def("family_size", &family_size, py::arg("store"), py::arg("cohort"),
        py::arg("emit_defaults") = false);
  m.def("geographic_family_size", &geographic_family_size, py::arg("store"),
        py::arg("cohort"), py::arg("emit_defaults") = false);
  m.def("fractional_count_by_country", &fractional_count_by_country, py::arg("store"),
        py::arg("cohort"), py::arg("role"),
        py::arg("denominator") = FractionalDenominator::max_sequence);
  m.def("inventor_country_count", &inventor_country_count, py::arg("store"),
        py::arg("cohort"), py::arg("emit_defaults") = false);
  m.def("forward_citations_window", &forward_citations_window, py::arg("store"),
        py::arg("cohort"), py::arg("cited_office"), py::arg("citing_office"),
        py::arg("window_years") = 3, py::arg("emit_defaults") = false);
  m.def("grant_status", &grant_status, py::arg("store"), py::arg("cohort"),
        py::arg("office"), py::arg("kind") = "A", py::arg("emit_defaults") = false);
  m.def(
      "external_publication_numbers",
      [](const IndexedStore& store, const Cohort& cohort, const std::string& office) {
        return external_publication_numbers(store, cohort, office);
      },
      py::arg("store"), py::arg("cohort"), py::arg("office") = "GB");

  // brute-force reference implementations over the raw dataset
  auto oracle_mod = m.def_submodule("oracle", "nested-scan reference implementations");
  oracle_mod.def(
      "select_cohort",
      [](const PatstatDataset& ds, const std::string& prefix, int year,
         const std::vector<std::string>& kinds) {
        return oracle::select_cohort(ds, {prefix, year, kinds});
      },
      py::arg("dataset"), py::arg("ipc_prefix"), py::arg("filing_year"),
      py::arg("kinds") = std::vector<std::string>{"A", "W"});
  oracle_mod.def("national_phase_entries", &oracle::national_phase_entries,
                 py::arg("dataset"), py::arg("cohort"), py::arg("receiving_office"),
                 py::arg("target_offices"));
  oracle_mod.def("priority_status", &oracle::priority_status, py::arg("dataset"),
                 py::arg("cohort"));
  oracle_mod.def("family_size", &oracle::family_size, py::arg("dataset"), py::arg("cohort"),
                 py::arg("emit_defaults") = false);
  oracle_mod.def("geographic_family_size", &oracle::geographic_family_size,
                 py::arg("dataset"), py::arg("cohort"), py::arg("emit_defaults") = false);
  oracle_mod.def("fractional_count_by_country", &oracle::fractional_count_by_country,
                 py::arg("dataset"), py::arg("cohort"), py::arg("role"),
                 py::arg("denominator") = FractionalDenominator::max_sequence);
  oracle_mod.def("inventor_country_count", &oracle::inventor_country_count,
                 py::arg("dataset"), py::arg("cohort"), py::arg("emit_defaults") = false);
  oracle_mod.def("forward_citations_window", &oracle::forward_citations_window,
                 py::arg("dataset"), py::arg("cohort"), py::arg("cited_office"),
                 py::arg("citing_office"), py::arg("window_years") = 3,
                 py::arg("emit_defaults") = false);
  oracle_mod.def("grant_status", &oracle::grant_status, py::arg("dataset"), py::arg("cohort"),
                 py::arg("office"), py::arg("kind") = "A", py::arg("emit_defaults") = false);
  oracle_mod.def(
      "external_publication_numbers",
      [](const PatstatDataset& ds, const Cohort& cohort, const std::string& office) {
        return oracle::external_publication_numbers(ds, cohort, office);
      },
      py::arg("dataset"), py::arg("cohort"), py::arg("office") = "GB");

#ifdef VERSION_INFO
#define PATSTAT_STR2(x) #x
#define PATSTAT_STR(x) PATSTAT_STR2(x)
  m.attr("__version__") = PATSTAT_STR(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
