// patstat: ingest Patstat-style table files, validate them, build cohorts
// and run the indicator operations from the command line.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "patstat/errors.hpp"
#include "patstat/fixtures.hpp"
#include "patstat/ingest.hpp"
#include "patstat/oracle.hpp"
#include "patstat/report.hpp"
#include "patstat/store.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitValidation = 3;

struct RunConfig {
  std::string data_dir;
  std::string format = "table";  // csv | json | table
  std::string out_path;          // empty = stdout
  int decimal_places = 1;
  bool emit_defaults = false;
  bool oracle_mode = false;
};

std::string resolve_data_dir(const std::string& from_cli) {
  if (!from_cli.empty()) return from_cli;
  if (const char* env = std::getenv("PATSTAT_DATA_DIR")) return env;
  return {};
}

void emit(const patstat::ResultSet& result, const RunConfig& config,
          const std::string& indicator,
          const std::map<std::string, std::string>& params) {
  std::string text;
  if (config.format == "csv") {
    text = patstat::to_csv(result);
  } else if (config.format == "json") {
    text = patstat::to_json(result, indicator, params);
  } else {
    text = patstat::to_table(result);
  }
  if (config.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(config.out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw patstat::Error("cannot write output file: " + config.out_path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

void report_ingest_log(const patstat::IngestLog& log) {
  for (const auto& notice : log.notices) std::cerr << "notice: " << notice << "\n";
  for (const auto& warning : log.warnings) std::cerr << "warning: " << warning << "\n";
  if (!log.rejects.empty()) {
    std::cerr << "warning: " << log.rejects.size() << " rejected row(s)\n";
    std::size_t shown = 0;
    for (const auto& reject : log.rejects) {
      if (++shown > 10) {
        std::cerr << "  ...\n";
        break;
      }
      std::cerr << "  " << reject.table << " line " << reject.line << ": " << reject.reason
                << "\n";
    }
  }
}

patstat::PatstatDataset load_or_throw(const RunConfig& config) {
  if (config.data_dir.empty()) {
    throw CLI::ValidationError("data-dir",
                               "no data directory given and PATSTAT_DATA_DIR is not set");
  }
  patstat::IngestLog log;
  auto ds = patstat::load_dataset(config.data_dir, {}, &log);
  report_ingest_log(log);
  return ds;
}

std::vector<std::string> split_codes(const std::string& csv) {
  std::vector<std::string> out;
  std::string current;
  for (char c : csv) {
    if (c == ',') {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"in-memory patent indicator engine over Patstat-style table files"};
  app.require_subcommand(1);

  RunConfig config;

  // ---- validate ----------------------------------------------------------
  auto* validate_cmd = app.add_subcommand("validate", "check a data directory for "
                                                      "duplicate keys and dangling references");
  std::string validate_dir;
  validate_cmd->add_option("data-dir", validate_dir, "directory of <table>.csv files");

  // ---- cohort ------------------------------------------------------------
  auto* cohort_cmd =
      app.add_subcommand("cohort", "select a cohort by IPC prefix, filing year and kind");
  std::string cohort_dir;
  patstat::CohortFilter filter;
  std::string kinds_csv = "A,W";
  std::string save_path;
  cohort_cmd->add_option("data-dir", cohort_dir, "directory of <table>.csv files");
  cohort_cmd->add_option("--ipc-prefix", filter.ipc_prefix, "IPC symbol prefix, e.g. F03D")
      ->required();
  cohort_cmd->add_option("--year", filter.filing_year, "filing year")->required();
  cohort_cmd->add_option("--kinds", kinds_csv, "application kinds (default A,W)");
  cohort_cmd->add_option("--save", save_path, "write the cohort to this file");
  cohort_cmd->add_option("--format", config.format, "csv | json | table");
  cohort_cmd->add_option("--out", config.out_path, "output file (default stdout)");

  // ---- indicator ---------------------------------------------------------
  auto* indicator_cmd = app.add_subcommand("indicator", "run one indicator over a cohort");
  std::string indicator_name;
  std::string indicator_dir;
  std::string cohort_file;
  std::string receiving_office = "DK";
  std::string target_offices_csv;
  std::string role_name = "inventor";
  std::string denominator_name = "max-seq";
  std::string cited_office = "DE";
  std::string citing_office = "EP";
  int window_years = 3;
  std::string office = "GB";
  std::string kind = "A";
  indicator_cmd
      ->add_option("name", indicator_name,
                   "one of: national-phase, priority-status, family-size, geog-family-size, "
                   "fractional-count, country-count, forward-citations, grant-status, "
                   "external-numbers")
      ->required();
  indicator_cmd->add_option("data-dir", indicator_dir, "directory of <table>.csv files");
  indicator_cmd->add_option("--cohort", cohort_file, "cohort file from 'cohort --save'")
      ->required();
  indicator_cmd->add_option("--receiving-office", receiving_office,
                            "national-phase: PCT receiving office");
  indicator_cmd->add_option("--target-offices", target_offices_csv,
                            "national-phase: comma-separated entry offices (empty = all)");
  indicator_cmd->add_option("--role", role_name, "fractional-count: inventor | applicant");
  indicator_cmd->add_option("--denominator", denominator_name,
                            "fractional-count: max-seq | row-count");
  indicator_cmd->add_option("--cited-office", cited_office, "forward-citations: cited office");
  indicator_cmd->add_option("--citing-office", citing_office,
                            "forward-citations: citing office");
  indicator_cmd->add_option("--window-years", window_years, "forward-citations: window width");
  indicator_cmd->add_option("--office", office, "grant-status / external-numbers office");
  indicator_cmd->add_option("--kind", kind, "grant-status application kind");
  indicator_cmd->add_flag("--emit-defaults", config.emit_defaults,
                          "emit rows the inner joins would drop");
  indicator_cmd->add_flag("--oracle", config.oracle_mode,
                          "run the brute-force reference implementation");
  indicator_cmd->add_option("--decimal-places", config.decimal_places,
                            "fractional-count rendering precision (0-12)");
  indicator_cmd->add_option("--format", config.format, "csv | json | table");
  indicator_cmd->add_option("--out", config.out_path, "output file (default stdout)");

  // ---- fixture -----------------------------------------------------------
  auto* fixture_cmd = app.add_subcommand("fixture", "write a built-in dataset as table files");
  auto* golden_cmd = fixture_cmd->add_subcommand("golden", "the hand-built reference dataset");
  std::string golden_out;
  golden_cmd->add_option("--out", golden_out, "output directory")->required();
  auto* random_cmd = fixture_cmd->add_subcommand("random", "a seeded synthetic dataset");
  patstat::GeneratorParams gen;
  std::string gen_out;
  std::string authorities_csv;
  random_cmd->add_option("--seed", gen.seed, "PRNG seed");
  random_cmd->add_option("--apps", gen.n_applications, "number of applications");
  random_cmd->add_option("--persons", gen.n_persons, "number of persons");
  random_cmd->add_option("--family-p", gen.family_geometric_p,
                         "geometric family size parameter");
  random_cmd->add_option("--citation-density", gen.citation_density,
                         "citation rows per publication");
  random_cmd->add_option("--pct-share", gen.pct_share, "share of PCT (kind W) applications");
  random_cmd->add_option("--missing-date-share", gen.missing_date_share,
                         "share of unknown dates");
  random_cmd->add_option("--missing-country-share", gen.missing_country_share,
                         "share of unknown residences");
  random_cmd->add_option("--gap-share", gen.sequence_gap_share,
                         "chance of sequence-number gaps");
  random_cmd->add_option("--authorities", authorities_csv,
                         "comma-separated authority alphabet");
  random_cmd->add_option("--year-min", gen.filing_year_min, "earliest filing year");
  random_cmd->add_option("--year-max", gen.filing_year_max, "latest filing year");
  random_cmd->add_option("--out", gen_out, "output directory")->required();
  fixture_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) {
      config.data_dir = resolve_data_dir(validate_dir);
      const auto ds = load_or_throw(config);
      const auto report = patstat::validate_dataset(ds);
      std::cout << report.to_string();
      return report.clean() ? kExitOk : kExitValidation;
    }

    if (cohort_cmd->parsed()) {
      config.data_dir = resolve_data_dir(cohort_dir);
      filter.kinds = split_codes(kinds_csv);
      const auto store = patstat::IndexedStore::build(load_or_throw(config));
      const auto cohort = patstat::select_cohort(store, filter);
      if (!save_path.empty()) patstat::save_cohort(cohort, save_path);
      emit(patstat::make_result(store, cohort), config, "cohort",
           {{"ipc_prefix", filter.ipc_prefix},
            {"filing_year", std::to_string(filter.filing_year)},
            {"kinds", kinds_csv}});
      return kExitOk;
    }

    if (indicator_cmd->parsed()) {
      config.data_dir = resolve_data_dir(indicator_dir);
      const auto dataset = load_or_throw(config);
      const auto cohort = patstat::load_cohort(cohort_file);

      // the oracle path scans the raw dataset; the default path indexes it
      std::optional<patstat::IndexedStore> store;
      if (!config.oracle_mode) store.emplace(patstat::IndexedStore::build(dataset));

      std::map<std::string, std::string> params{{"cohort", cohort_file},
                                                {"oracle", config.oracle_mode ? "1" : "0"}};
      patstat::ResultSet result;

      if (indicator_name == "national-phase") {
        std::set<std::string> targets;
        for (const auto& code : split_codes(target_offices_csv)) targets.insert(code);
        params["receiving_office"] = receiving_office;
        params["target_offices"] = target_offices_csv;
        result = patstat::make_result(
            config.oracle_mode
                ? patstat::oracle::national_phase_entries(dataset, cohort, receiving_office,
                                                          targets)
                : patstat::national_phase_entries(*store, cohort, receiving_office, targets));
      } else if (indicator_name == "priority-status") {
        result = patstat::make_result(
            config.oracle_mode ? patstat::oracle::priority_status(dataset, cohort)
                               : patstat::priority_status(*store, cohort));
      } else if (indicator_name == "family-size") {
        result = patstat::make_result(
            config.oracle_mode
                ? patstat::oracle::family_size(dataset, cohort, config.emit_defaults)
                : patstat::family_size(*store, cohort, config.emit_defaults));
      } else if (indicator_name == "geog-family-size") {
        result = patstat::make_result(
            config.oracle_mode
                ? patstat::oracle::geographic_family_size(dataset, cohort,
                                                          config.emit_defaults)
                : patstat::geographic_family_size(*store, cohort, config.emit_defaults));
      } else if (indicator_name == "fractional-count") {
        const auto role = patstat::parse_person_role(role_name);
        patstat::FractionalDenominator denominator;
        if (denominator_name == "max-seq") {
          denominator = patstat::FractionalDenominator::max_sequence;
        } else if (denominator_name == "row-count") {
          denominator = patstat::FractionalDenominator::row_count;
        } else {
          throw patstat::InvalidParamsError("unknown denominator mode: " + denominator_name);
        }
        params["role"] = role_name;
        params["denominator"] = denominator_name;
        result = patstat::make_result(
            config.oracle_mode
                ? patstat::oracle::fractional_count_by_country(dataset, cohort, role,
                                                               denominator)
                : patstat::fractional_count_by_country(*store, cohort, role, denominator),
            {.decimal_places = config.decimal_places});
      } else if (indicator_name == "country-count") {
        result = patstat::make_result(
            config.oracle_mode
                ? patstat::oracle::inventor_country_count(dataset, cohort,
                                                          config.emit_defaults)
                : patstat::inventor_country_count(*store, cohort, config.emit_defaults));
      } else if (indicator_name == "forward-citations") {
        params["cited_office"] = cited_office;
        params["citing_office"] = citing_office;
        params["window_years"] = std::to_string(window_years);
        result = patstat::make_result(
            config.oracle_mode
                ? patstat::oracle::forward_citations_window(dataset, cohort, cited_office,
                                                            citing_office, window_years,
                                                            config.emit_defaults)
                : patstat::forward_citations_window(*store, cohort, cited_office,
                                                    citing_office, window_years,
                                                    config.emit_defaults));
      } else if (indicator_name == "grant-status") {
        params["office"] = office;
        params["kind"] = kind;
        result = patstat::make_result(
            config.oracle_mode
                ? patstat::oracle::grant_status(dataset, cohort, office, kind,
                                                config.emit_defaults)
                : patstat::grant_status(*store, cohort, office, kind, config.emit_defaults));
      } else if (indicator_name == "external-numbers") {
        params["office"] = office;
        std::vector<std::string> warnings;
        result = patstat::make_result(
            config.oracle_mode
                ? patstat::oracle::external_publication_numbers(dataset, cohort, office,
                                                                &warnings)
                : patstat::external_publication_numbers(*store, cohort, office, &warnings));
        for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
      } else {
        std::cerr << "unknown indicator: " << indicator_name << "\n";
        return kExitUsage;
      }

      emit(result, config, indicator_name, params);
      return kExitOk;
    }

    if (golden_cmd->parsed()) {
      patstat::write_dataset(patstat::golden_fixture(), golden_out);
      std::cout << "golden fixture written to " << golden_out << "\n";
      return kExitOk;
    }
    if (random_cmd->parsed()) {
      if (!authorities_csv.empty()) gen.authorities = split_codes(authorities_csv);
      patstat::write_dataset(patstat::generate_random_dataset(gen), gen_out);
      std::cout << "random dataset (seed " << gen.seed << ") written to " << gen_out << "\n";
      return kExitOk;
    }
  } catch (const patstat::InvalidParamsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const patstat::InvalidRoleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const patstat::UnknownOfficeFormatterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const patstat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
