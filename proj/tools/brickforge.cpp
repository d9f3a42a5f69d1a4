// Command-line front end: reproduces the worked-example tables, runs the
// three verification suites over selected types and Coxeter elements, checks
// the two counterexample words and scans short words against the
// cluster-complex characterization.

#include "brickforge/serialize.hpp"
#include "brickforge/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <atomic>
#include <thread>
#include <iostream>
#include <numeric>

namespace bf = brickforge;

namespace {

struct CheckResult {
  std::string type;
  std::string coxeter_word;
  std::string check;
  std::string status;  // pass | fail | skip
  std::string witness;
  long long millis = 0;
};

struct Options {
  std::vector<std::string> type_names;
  int rank_max = 0;
  std::string coxeter;
  bool all_coxeter = false;
  std::string format = "text";
  std::string fixtures = "fixtures";
  std::uint64_t seed = 2024;
  double budget_seconds = 0;
  bool timing = false;
  bool minkowski = false;
  int scan_length = 0;
  std::string plot_path;
};

std::string word_string(const bf::Word& w) {
  std::string s;
  for (int x : w) s += std::to_string(x);
  return s;
}

bf::Word parse_word(const std::string& s) {
  bf::Word w;
  for (char c : s) {
    if (c == ',' || c == ' ') continue;
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw CLI::ValidationError("--coxeter expects digits, got: " + s);
    w.push_back(c - '0');
  }
  return w;
}

std::vector<bf::CartanType> selected_types(const Options& opt) {
  std::vector<bf::CartanType> types;
  if (opt.rank_max > 0) {
    if (opt.rank_max > 8) throw CLI::ValidationError("rank bound must be <= 8");
    types = bf::CartanType::all_up_to_rank(opt.rank_max);
  }
  for (const std::string& name : opt.type_names) {
    bf::CartanType t = bf::CartanType::parse(name);
    if (t.rank > 8) throw CLI::ValidationError("rank bound must be <= 8");
    types.push_back(t);
  }
  if (types.empty()) throw CLI::ValidationError("select types via --type and/or --rank-max");
  std::sort(types.begin(), types.end(), [](auto a, auto b) {
    return std::make_pair(a.family, a.rank) < std::make_pair(b.family, b.rank);
  });
  types.erase(std::unique(types.begin(), types.end(),
                          [](auto a, auto b) { return a.family == b.family && a.rank == b.rank; }),
              types.end());
  return types;
}

std::vector<bf::Word> selected_coxeter_words(const Options& opt, const bf::CartanMatrix& C) {
  if (!opt.coxeter.empty()) {
    bf::Word w = parse_word(opt.coxeter);
    bf::check_coxeter_word(C, w);
    return {w};
  }
  return bf::instance_coxeter_words(C, opt.all_coxeter);
}

void emit(const Options& opt, const std::vector<CheckResult>& results) {
  if (opt.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results)
      arr.push_back({{"type", r.type},
                     {"coxeter_word", r.coxeter_word},
                     {"check", r.check},
                     {"status", r.status},
                     {"witness", r.witness},
                     {"millis", opt.timing ? r.millis : 0}});
    std::cout << arr.dump(2) << '\n';
    return;
  }
  for (const auto& r : results) {
    std::cout << (r.status == "pass" ? "[PASS] " : r.status == "skip" ? "[SKIP] " : "[FAIL] ") << r.type;
    if (!r.coxeter_word.empty()) std::cout << " c=" << r.coxeter_word;
    std::cout << ' ' << r.check;
    if (opt.timing) std::cout << " (" << r.millis << " ms)";
    if (!r.witness.empty()) std::cout << "\n       " << r.witness;
    std::cout << '\n';
  }
}

int exit_code(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.status == "fail") return 1;
  return 0;
}

// Fans (type, Coxeter word) tasks out to a bounded worker pool; results merge
// in deterministic key order regardless of completion order.
template <typename Task>
std::vector<CheckResult> run_instances(const Options& opt, const std::string& check_name, Task task) {
  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(opt.budget_seconds));
  std::vector<std::pair<bf::CartanType, bf::Word>> instances;
  for (bf::CartanType t : selected_types(opt)) {
    bf::CartanMatrix C = bf::build_cartan(t);
    for (const bf::Word& w : selected_coxeter_words(opt, C)) instances.emplace_back(t, w);
  }
  std::vector<CheckResult> results(instances.size());
  std::atomic<std::size_t> next{0};
  unsigned workers = std::min<unsigned>(std::max<unsigned>(std::thread::hardware_concurrency(), 1), 8);
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < workers; ++i)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t idx = next.fetch_add(1);
        if (idx >= instances.size()) return;
        const auto& [t, w] = instances[idx];
        CheckResult r{t.name(), word_string(w), check_name, "pass", "", 0};
        if (opt.budget_seconds > 0 && std::chrono::steady_clock::now() > deadline) {
          r.status = "skip";
          r.witness = "budget exhausted";
          results[idx] = std::move(r);
          continue;
        }
        auto start = std::chrono::steady_clock::now();
        try {
          auto witness = task(t, w);
          if (witness) {
            r.status = "fail";
            r.witness = *witness;
          }
        } catch (const std::exception& e) {
          r.status = "fail";
          r.witness = e.what();
        }
        r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                       .count();
        results[idx] = std::move(r);
      }
    });
  for (auto& th : pool) th.join();
  std::sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
    return std::tie(a.type, a.coxeter_word, a.check) < std::tie(b.type, b.coxeter_word, b.check);
  });
  return results;
}

// A TSV table as structured records: one JSON object per row, keyed by header.
nlohmann::json table_records(const std::string& tsv) {
  nlohmann::json rows = nlohmann::json::array();
  std::istringstream is(tsv);
  std::string line;
  std::vector<std::string> header;
  while (std::getline(is, line)) {
    std::vector<std::string> cols;
    std::string cur;
    for (char c : line) {
      if (c == '\t') {
        cols.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    cols.push_back(cur);
    if (header.empty()) {
      header = cols;
      continue;
    }
    nlohmann::json row;
    for (std::size_t i = 0; i < cols.size() && i < header.size(); ++i) row[header[i]] = cols[i];
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_tables(const Options& opt) {
  std::vector<CheckResult> results;
  nlohmann::json json_out = nlohmann::json::array();
  for (bf::CartanType t : selected_types(opt)) {
    bf::CartanMatrix C = bf::build_cartan(t);
    for (const bf::Word& w : selected_coxeter_words(opt, C)) {
      bf::SubwordComplex spec = bf::SubwordComplex::cluster_word(C, w);
      bf::BrickGeometry brick(spec);
      auto ambient = bf::paper_ambient_basis(t);
      if (opt.format == "json") {
        nlohmann::json entry;
        entry["type"] = t.name();
        entry["coxeter_word"] = word_string(w);
        entry["root_function"] = table_records(bf::root_table_tsv(spec, ambient));
        entry["weight_function"] = table_records(bf::weight_table_tsv(spec, ambient));
        entry["shifted_weights"] = table_records(bf::shifted_table_tsv(brick));
        entry["cluster_variables"] =
            table_records(bf::cluster_table_tsv(bf::all_cluster_variables(C, w), t.rank));
        json_out.push_back(std::move(entry));
      } else {
        std::cout << "== " << t.name() << " c=" << word_string(w) << " root function\n"
                  << bf::root_table_tsv(spec, ambient) << '\n'
                  << "== " << t.name() << " c=" << word_string(w) << " weight function\n"
                  << bf::weight_table_tsv(spec, ambient) << '\n'
                  << "== " << t.name() << " c=" << word_string(w) << " shifted weights\n"
                  << bf::shifted_table_tsv(brick) << '\n'
                  << "== " << t.name() << " c=" << word_string(w) << " cluster variables\n"
                  << bf::cluster_table_tsv(bf::all_cluster_variables(C, w), t.rank) << '\n';
      }
      if (!opt.plot_path.empty() && t.rank == 2) {
        nlohmann::json j;
        j["brick_polytope"] = nlohmann::json::parse(bf::polytope_to_json(brick.asso_polytope()));
        j["g_vector_fan"] = nlohmann::json::parse(bf::fan_to_json(brick.g_vector_fan()));
        auto& summands = j["summands"] = nlohmann::json::array();
        for (int k = t.rank + 1; k <= spec.word_length(); ++k)
          summands.push_back(
              nlohmann::json::parse(bf::polytope_to_json(brick.summand_polytope(brick.root_of_position(k)))));
        std::ofstream out(opt.plot_path);
        out << j.dump(2) << '\n';
      }
    }
    // Fixture diffs exist for the two worked examples with the standard word.
    bool standard_word = opt.coxeter.empty() && !opt.all_coxeter;
    bool has_fixture = (t.family == 'A' && t.rank == 3) || (t.family == 'B' && t.rank == 2);
    if (!opt.fixtures.empty() && has_fixture && standard_word) {
      bf::Word c(static_cast<std::size_t>(t.rank));
      std::iota(c.begin(), c.end(), 1);
      for (const std::string& which : {"root", "weight", "shifted", "cluster"}) {
        CheckResult r{t.name(), word_string(c), which + std::string("-table-fixture"), "pass", "", 0};
        try {
          auto witness = bf::check_tables_against_fixtures(opt.fixtures, t, which);
          if (witness) {
            r.status = "fail";
            r.witness = *witness;
          }
        } catch (const std::exception& e) {
          r.status = "fail";
          r.witness = e.what();
        }
        results.push_back(std::move(r));
      }
    }
  }
  if (opt.format == "json") {
    nlohmann::json out;
    out["tables"] = std::move(json_out);
    auto& fixture_checks = out["fixture_checks"] = nlohmann::json::array();
    for (const auto& r : results)
      fixture_checks.push_back({{"type", r.type},
                                {"coxeter_word", r.coxeter_word},
                                {"check", r.check},
                                {"status", r.status},
                                {"witness", r.witness},
                                {"millis", opt.timing ? r.millis : 0}});
    std::cout << out.dump(2) << '\n';
  } else {
    emit(opt, results);
  }
  return exit_code(results);
}

int cmd_counterexamples(const Options& opt) {
  std::cout << bf::counterexample_report();
  std::vector<CheckResult> results;
  CheckResult r{"B2", "", "counterexamples", "pass", "", 0};
  auto start = std::chrono::steady_clock::now();
  try {
    auto witness = bf::check_counterexamples(opt.fixtures);
    if (witness) {
      r.status = "fail";
      r.witness = *witness;
    }
  } catch (const std::exception& e) {
    r.status = "fail";
    r.witness = e.what();
  }
  r.millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  results.push_back(std::move(r));
  emit(opt, results);
  return exit_code(results);
}

int cmd_scan(const Options& opt) {
  std::vector<CheckResult> results;
  for (bf::CartanType t : selected_types(opt)) {
    auto start = std::chrono::steady_clock::now();
    bf::CartanMatrix C = bf::build_cartan(t);
    bf::ScanOutcome outcome = bf::scan_conjecture(C, opt.scan_length);
    CheckResult r{t.name(), "", "scan", "pass", "", 0};
    r.witness = std::to_string(outcome.words_scanned) + " words, " +
                std::to_string(outcome.complexes_tested) + " complexes";
    if (!outcome.violations.empty()) {
      r.status = "fail";
      r.witness = "violation: " + outcome.violations.front();
    }
    r.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  emit(opt, results);
  return exit_code(results);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subword-complex brick polytopes, cluster mutation and tropical verification"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool with_coxeter = true) {
    cmd->add_option("--type", opt.type_names, "Cartan types, e.g. A3 B2");
    cmd->add_option("--rank-max", opt.rank_max, "select all types up to this rank (<= 8)");
    if (with_coxeter) {
      cmd->add_option("--coxeter", opt.coxeter, "one Coxeter word, e.g. 213");
      cmd->add_flag("--all-coxeter", opt.all_coxeter, "run every Coxeter element");
    }
    cmd->add_option("--format", opt.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--fixtures", opt.fixtures, "fixture directory (empty disables diffs)");
    cmd->add_option("--seed", opt.seed, "seed for sampled checks");
    cmd->add_option("--budget-seconds", opt.budget_seconds, "skip instances once exceeded");
    cmd->add_flag("--timing", opt.timing, "include wall-clock millis in reports");
  };

  CLI::App* tables = app.add_subcommand("tables", "emit the root/weight/shifted/cluster tables");
  add_common(tables);
  tables->add_option("--plot-data", opt.plot_path, "write 2D plot data (rank-2 types) to this file");

  CLI::App* typecone = app.add_subcommand("verify-typecone", "type-cone simpliciality checks");
  add_common(typecone);
  typecone->add_flag("--minkowski", opt.minkowski, "also verify the full Minkowski decomposition");

  CLI::App* newton = app.add_subcommand("verify-newton", "Newton polytopes vs Minkowski summands");
  add_common(newton);

  CLI::App* tropical = app.add_subcommand("verify-tropical", "tropical slice isomorphism checks");
  add_common(tropical);
  tropical->add_option("--plot-data", opt.plot_path, "write 2D slice-fan plot data to this file");

  CLI::App* counter = app.add_subcommand("counterexamples", "reproduce the two counterexample words");
  counter->add_option("--format", opt.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  counter->add_option("--fixtures", opt.fixtures, "fixture directory");
  counter->add_flag("--timing", opt.timing, "include wall-clock millis in reports");

  CLI::App* scan = app.add_subcommand("scan", "scan words for the cluster-complex characterization");
  add_common(scan, /*with_coxeter=*/false);
  scan->add_option("--max-length", opt.scan_length, "maximum word length to scan")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (tables->parsed()) return cmd_tables(opt);
    if (counter->parsed()) return cmd_counterexamples(opt);
    if (scan->parsed()) return cmd_scan(opt);
    if (typecone->parsed()) {
      auto results = run_instances(opt, "typecone", [&](bf::CartanType t, const bf::Word& w) {
        bf::InstanceData inst = bf::build_instance(t, w);
        return bf::check_typecone(inst, opt.minkowski);
      });
      emit(opt, results);
      return exit_code(results);
    }
    if (newton->parsed()) {
      auto results = run_instances(opt, "newton", [&](bf::CartanType t, const bf::Word& w) {
        bf::InstanceData inst = bf::build_instance(t, w);
        return bf::check_newton(inst);
      });
      emit(opt, results);
      return exit_code(results);
    }
    if (tropical->parsed()) {
      // F4 is opt-in here: a rank bound never selects it, --type F4 does.
      Options trop = opt;
      if (trop.rank_max >= 4) {
        int bound = trop.rank_max;
        trop.rank_max = 3;
        for (bf::CartanType t : bf::CartanType::all_up_to_rank(bound))
          if (t.rank > 3 && t.family != 'F') trop.type_names.push_back(t.name());
      }
      auto results = run_instances(trop, "tropical", [&](bf::CartanType t, const bf::Word& w) {
        bf::InstanceData inst = bf::build_instance(t, w);
        return bf::check_tropical(inst, opt.seed);
      });
      if (!opt.plot_path.empty()) {
        // Slice-fan and Newton-polytope plot data for the rank-2 instances.
        nlohmann::json plots = nlohmann::json::array();
        for (bf::CartanType t : selected_types(trop)) {
          if (t.rank != 2) continue;
          bf::CartanMatrix C = bf::build_cartan(t);
          for (const bf::Word& w : selected_coxeter_words(trop, C)) {
            bf::InstanceData inst = bf::build_instance(t, w);
            nlohmann::json entry;
            entry["type"] = t.name();
            entry["coxeter_word"] = word_string(w);
            entry["slice_fan"] = nlohmann::json::parse(bf::fan_to_json(inst.fan));
            auto& newtons = entry["newton_polytopes"] = nlohmann::json::array();
            for (const auto& rec : inst.records) {
              if (rec.initial) continue;
              nlohmann::json item;
              item["d_vector"] = rec.d_vector;
              item["polytope"] = nlohmann::json::parse(
                  bf::polytope_to_json(bf::newton_polytope(*rec.f_polynomial, t.rank)));
              newtons.push_back(std::move(item));
            }
            plots.push_back(std::move(entry));
          }
        }
        std::ofstream out(opt.plot_path);
        out << plots.dump(2) << '\n';
      }
      emit(opt, results);
      return exit_code(results);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
