#pragma once
// Command-line front end. Every command writes its document to `out` and
// diagnostics to `err`, and returns a process exit status.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mcinv/plethysm.hpp"
#include "mcinv/polyalg.hpp"
#include "mcinv/stu.hpp"

namespace mcinv::cli {

enum ExitCode : int { kOk = 0, kConfigError = 2, kCacheError = 3, kBudgetExhausted = 4, kVerificationFailed = 5 };

enum class Format { Json, Csv, Text };

struct RunConfig {
  std::string subcommand;
  std::string model = "stu";
  int p_max = 4;
  int a_max = 4;
  std::optional<Partition> partition;
  std::uint64_t budget = ComputeBudget::kDefaultLimit;
  Format format = Format::Text;
  std::optional<std::filesystem::path> cache;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  bool timestamp = true;
  std::filesystem::path out_dir = "stu-invariants";
  bool check_hw = false;
  std::optional<std::string> check_derivation;  // e.g. "X1:p167"
};

using json = nlohmann::ordered_json;

inline std::string utc_timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

inline json weight_json(const AlgebraSpec& alg, const Weight& w) {
  json a = json::array();
  for (std::size_t i = 0; i < alg.weight_dim(); ++i) a.push_back(w[i]);
  return a;
}

// ---- table ---------------------------------------------------------------------

inline void render_table(const InvariantTable& t, const RunConfig& cfg, std::ostream& out) {
  switch (cfg.format) {
    case Format::Json: {
      json doc;
      doc["model"] = t.model();
      json cells = json::array();
      for (int p = 1; p <= t.p_max(); ++p)
        for (int a = 0; a <= t.a_max(); ++a) {
          json c;
          c["p"] = p;
          c["a"] = a;
          if (auto d = t.at(p, a)) c["d"] = *d;
          else c["d"] = nullptr;
          cells.push_back(c);
        }
      doc["cells"] = cells;
      doc["version"] = algorithm_version();
      if (cfg.timestamp) doc["generated_at"] = utc_timestamp();
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      out << "p\\a";
      for (int a = 0; a <= t.a_max(); ++a) out << ',' << a;
      out << '\n';
      for (int p = 1; p <= t.p_max(); ++p) {
        out << p;
        for (int a = 0; a <= t.a_max(); ++a) {
          out << ',';
          if (auto d = t.at(p, a)) out << *d;
        }
        out << '\n';
      }
      break;
    }
    case Format::Text: {
      out << "model " << t.model() << " (" << find_model(t.model()).display << "), version " << algorithm_version() << '\n';
      out << std::setw(5) << "p\\a";
      for (int a = 0; a <= t.a_max(); ++a) out << std::setw(8) << a;
      out << '\n';
      for (int p = 1; p <= t.p_max(); ++p) {
        out << std::setw(5) << p;
        for (int a = 0; a <= t.a_max(); ++a) {
          auto d = t.at(p, a);
          out << std::setw(8) << (d ? std::to_string(*d) : std::string("-"));
        }
        out << '\n';
      }
      if (cfg.timestamp) out << "generated " << utc_timestamp() << '\n';
      break;
    }
  }
}

inline int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ModelSpec* model = nullptr;
  try {
    model = &find_model(cfg.model);
  } catch (const UnknownModelError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
  if (cfg.p_max < 1 || cfg.a_max < 0 || cfg.budget == 0) {
    err << "error: need --pmax >= 1, --amax >= 0 and --budget > 0\n";
    return kConfigError;
  }
  try {
    std::optional<TableCache> cache;
    if (cfg.cache) cache.emplace(*cfg.cache);
    TableOptions opt;
    opt.budget = cfg.budget;
    opt.threads = cfg.threads;
    opt.cache = cache ? &*cache : nullptr;
    InvariantTable t = generate_table(*model, cfg.p_max, cfg.a_max, opt);
    render_table(t, cfg, out);
    if (t.computed() < static_cast<std::size_t>(cfg.p_max) * static_cast<std::size_t>(cfg.a_max + 1))
      err << "note: " << (static_cast<std::size_t>(cfg.p_max) * static_cast<std::size_t>(cfg.a_max + 1) - t.computed())
          << " cell(s) exceeded the budget and are left empty\n";
  } catch (const CacheError& e) {
    err << "error: " << e.what() << '\n';
    return kCacheError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: cache: " << e.what() << '\n';
    return kCacheError;
  }
  return kOk;
}

// ---- plethysm ------------------------------------------------------------------

inline int cmd_plethysm(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ModelSpec* model = nullptr;
  try {
    model = &find_model(cfg.model);
  } catch (const UnknownModelError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
  if (!cfg.partition) {
    err << "error: --partition is required\n";
    return kConfigError;
  }
  const Partition& lambda = *cfg.partition;
  if (lambda.height() > model->dim) {
    err << "error: partition " << lambda.str() << " has more rows than dim R = " << model->dim << '\n';
    return kConfigError;
  }
  if (cfg.budget == 0) {
    err << "error: --budget must be positive\n";
    return kConfigError;
  }
  ComputeBudget budget(cfg.budget);
  Decomposition dec;
  try {
    if (lambda.empty()) dec = Decomposition(model->algebra, {{Weight{}, 1}});
    else dec = schur_power(model->algebra, lambda, model->highest_weight, budget);
  } catch (const ResourceLimitError& e) {
    err << "error: budget exhausted after " << budget.used() << " of " << budget.limit()
        << " work units while decomposing S_" << lambda.str() << '(' << model->name << "): " << e.what() << '\n';
    return kBudgetExhausted;
  }
  const AlgebraSpec& alg = model->algebra;
  const mpz_class total = dec.dimension(alg);
  switch (cfg.format) {
    case Format::Json: {
      json doc;
      doc["model"] = model->name;
      doc["partition"] = lambda.str();
      json terms = json::array();
      for (const auto& t : dec.terms()) {
        json j;
        j["highest_weight"] = weight_json(alg, t.hw);
        j["multiplicity"] = t.mult;
        j["dimension"] = weyl_dim(alg, t.hw).get_str();
        terms.push_back(j);
      }
      doc["terms"] = terms;
      doc["dimension"] = total.get_str();
      doc["d"] = dec.trivial();
      doc["version"] = algorithm_version();
      if (cfg.timestamp) doc["generated_at"] = utc_timestamp();
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "highest_weight,multiplicity,dimension\n";
      for (const auto& t : dec.terms())
        out << '"' << alg.weight_str(t.hw) << "\"," << t.mult << ',' << weyl_dim(alg, t.hw) << '\n';
      break;
    case Format::Text: {
      out << "S_" << lambda.str() << " of " << model->display << ", dimension " << total << '\n';
      std::string sum;
      for (const auto& t : dec.terms()) {
        out << "  " << std::setw(4) << t.mult << " x " << alg.weight_str(t.hw) << "  dim " << weyl_dim(alg, t.hw) << '\n';
        if (!sum.empty()) sum += " + ";
        if (t.mult != 1) sum += std::to_string(t.mult) + "*";
        sum += weyl_dim(alg, t.hw).get_str();
      }
      out << "  = " << sum << '\n';
      out << "d = " << dec.trivial() << '\n';
      break;
    }
  }
  return kOk;
}

// ---- stu invariants ------------------------------------------------------------

struct Check {
  std::string key;
  std::string value;
  bool ok = true;
};

// "X1:p167" -> formatted image
inline std::string derivation_check(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("expected GENERATOR:plucker, e.g. X1:p167");
  Generator g = parse_generator(spec.substr(0, colon));
  return format_plucker(act(g, plucker_variable(spec.substr(colon + 1))));
}

inline std::string highest_weight_111() {
  auto hw = highest_weight_vectors(weight_space(1, {1, 1, 1}));
  if (hw.size() != 1) throw std::logic_error("expected one highest weight vector of weight (1,1,1)");
  return format_plucker(hw[0]);
}

inline std::vector<Check> structural_checks() {
  std::vector<Check> c;
  auto dim = [&](const std::string& key, std::size_t got, std::size_t want) {
    c.push_back({key, std::to_string(got), got == want});
  };
  auto w111 = weight_space(1, {1, 1, 1});
  auto w002 = weight_space(2, {0, 0, 2});
  auto hw002 = highest_weight_vectors(w002);
  std::vector<ChargePoly> sub;
  for (const auto& h : hw002) sub.push_back(substitute_plucker(h));
  auto w311 = weight_space(1, {3, 1, 1});
  dim("weight_space_111", w111.size(), 4);
  dim("weight_space_002", w002.size(), 52);
  dim("hw_space_002", hw002.size(), 5);
  dim("substituted_hw_002", poly_rank(sub), 3);
  dim("weight_space_311", w311.size(), 1);
  dim("hw_space_311", highest_weight_vectors(w311).size(), 1);
  const std::string hw = highest_weight_111();
  c.push_back({"highest_weight_111", hw, hw == "p145 - p136 - p127"});
  const std::string x1 = derivation_check("X1:p167");
  c.push_back({"x1_p167", x1, x1 == "p127 - p136"});
  return c;
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
  if (!f) throw std::runtime_error("cannot write " + path.string());
}

inline std::string matrix_csv(const std::vector<InvariantCertificate>& basis, const QMatrix& c) {
  std::ostringstream os;
  os << "label";
  for (std::size_t b = 1; b <= reference_monomials().size(); ++b) os << ",M" << b;
  os << '\n';
  for (std::size_t a = 0; a < basis.size(); ++a) {
    os << basis[a].label;
    for (const auto& q : c[a]) os << ',' << format_rational(q);
    os << '\n';
  }
  return os.str();
}

inline void render_checks(const std::vector<Check>& checks, bool ok, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == Format::Json) {
    json doc;
    json items = json::array();
    for (const auto& c : checks) items.push_back({{"key", c.key}, {"value", c.value}, {"ok", c.ok}});
    doc["checks"] = items;
    doc["status"] = ok ? "ok" : "failed";
    doc["version"] = algorithm_version();
    if (cfg.timestamp) doc["generated_at"] = utc_timestamp();
    out << doc.dump(2) << '\n';
    return;
  }
  if (cfg.format == Format::Csv) {
    out << "key,value,ok\n";
    for (const auto& c : checks) out << c.key << ",\"" << c.value << "\"," << (c.ok ? "true" : "false") << '\n';
    return;
  }
  for (const auto& c : checks) out << c.key << " = " << c.value << (c.ok ? "" : "   [FAILED]") << '\n';
  out << "status = " << (ok ? "ok" : "failed") << '\n';
  if (cfg.timestamp) out << "generated_at = " << utc_timestamp() << '\n';
}

inline int cmd_stu_invariants(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<Check> checks;
  try {
    // quick probes only
    if (cfg.check_hw || cfg.check_derivation) {
      if (cfg.check_hw) out << "v = " << highest_weight_111() << '\n';
      if (cfg.check_derivation) out << derivation_check(*cfg.check_derivation) << '\n';
      return kOk;
    }
    checks = structural_checks();

    Degree12Construction built = construct_degree12();
    auto& basis = built.basis;
    const auto& monos = reference_monomials();
    for (auto& b : basis) b.coordinates = monomial_coordinates(b, monos);
    std::vector<ChargePoly> polys;
    for (const auto& b : basis) polys.push_back(b.poly);
    checks.push_back({"rank_deg12", std::to_string(poly_rank(polys)), poly_rank(polys) == 10});
    std::size_t valid = 0;
    for (const auto& b : basis) valid += certificate_valid(b);
    checks.push_back({"certificates_valid", std::to_string(valid) + "/" + std::to_string(basis.size()), valid == basis.size()});
    const QMatrix cm = coefficient_matrix(basis, monos);
    const std::size_t crank = rank(cm, monos.size());
    checks.push_back({"coefficient_matrix_rank", std::to_string(crank), crank == 10});

    const bool f0_hw = F0_from_highest_weight() == F0_poly();
    checks.push_back({"f0_equals_hw_embedding", f0_hw ? "true" : "false", f0_hw});
    {
      // F0 against the basis without it
      std::vector<InvariantCertificate> rest(basis.begin() + 1, basis.end());
      rest.push_back(basis.front());
      auto rel = relation_vector(rest, F0_poly(), monos);
      std::string s;
      if (rel)
        for (const auto& z : *rel) s += (s.empty() ? "" : " ") + z.get_str();
      checks.push_back({"f0_relation", rel ? s : "none", rel.has_value() && rel->back() > 0});
    }

    auto fixed = triality_project(basis);
    for (auto& f : fixed) f.coordinates = monomial_coordinates(f, monos);
    checks.push_back({"rank_triality", std::to_string(fixed.size()), fixed.size() == 4});
    const auto iso = s3_isotypic_dimensions(basis);
    checks.push_back({"s3_isotypic", std::to_string(iso.trivial) + " " + std::to_string(iso.sign) + " " +
                                         std::to_string(iso.standard),
                      iso.trivial + iso.sign + iso.standard == basis.size()});

    std::filesystem::create_directories(cfg.out_dir / "certificates");
    std::filesystem::create_directories(cfg.out_dir / "triality");
    for (const auto& b : basis) {
      std::ostringstream os;
      write_certificate(os, b);
      write_file(cfg.out_dir / "certificates" / (b.label + ".cert"), os.str());
    }
    for (const auto& f : fixed) {
      std::ostringstream os;
      write_certificate(os, f);
      write_file(cfg.out_dir / "triality" / (f.label + ".cert"), os.str());
    }
    write_file(cfg.out_dir / "coefficient_matrix.csv", matrix_csv(basis, cm));
    bool ok = true;
    for (const auto& c : checks) ok = ok && c.ok;
    std::ostringstream report;
    RunConfig text = cfg;
    text.format = Format::Text;
    render_checks(checks, ok, text, report);
    write_file(cfg.out_dir / "report.txt", report.str());
    render_checks(checks, ok, cfg, out);
    return ok ? kOk : kVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

// ---- argument parsing ----------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant counting and stu invariant construction"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text", partition, cache;
  std::vector<std::string> raw;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--model", cfg.model, "e7, sp6, so12, su6 or stu")->capture_default_str();
    sub->add_option("--budget", cfg.budget, "work units per computation")->capture_default_str();
    sub->add_option("--format", format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    sub->add_flag("--no-timestamp", [&](std::int64_t) { cfg.timestamp = false; }, "omit the generation timestamp");
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  };
  CLI::App* table = app.add_subcommand("table", "invariant dimension table d(p, a)");
  common(table);
  table->add_option("--pmax", cfg.p_max, "largest number of centers")->capture_default_str();
  table->add_option("--amax", cfg.a_max, "largest degree per center")->capture_default_str();
  table->add_option("--cache", cache, "cache directory");

  CLI::App* pleth = app.add_subcommand("plethysm", "decompose S_lambda(R)");
  common(pleth);
  pleth->add_option("--partition", partition, "comma separated parts, e.g. 4,4")->required();

  CLI::App* stu = app.add_subcommand("stu-invariants", "construct and verify the degree-12 stu invariants");
  common(stu);
  stu->add_option("--out", cfg.out_dir, "output directory")->capture_default_str();
  stu->add_flag("--check-hw", cfg.check_hw, "print the highest weight vector of weight (1,1,1)");
  stu->add_option("--check-derivation", raw, "apply a generator to a Plucker variable, e.g. X1:p167")->expected(1);

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
  cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
  if (!cache.empty()) cfg.cache = cache;
  if (!raw.empty()) cfg.check_derivation = raw.front();
  try {
    if (!partition.empty()) cfg.partition = Partition::parse(partition);
  } catch (const std::exception& e) {
    err << "error: bad --partition: " << e.what() << '\n';
    return kConfigError;
  }
  if (*table) {
    cfg.subcommand = "table";
    return cmd_table(cfg, out, err);
  }
  if (*pleth) {
    cfg.subcommand = "plethysm";
    return cmd_plethysm(cfg, out, err);
  }
  cfg.subcommand = "stu-invariants";
  return cmd_stu_invariants(cfg, out, err);
}

}  // namespace mcinv::cli
