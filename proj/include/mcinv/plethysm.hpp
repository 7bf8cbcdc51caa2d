#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "mcinv/budget.hpp"
#include "mcinv/liealg.hpp"
#include "mcinv/symfunc.hpp"

namespace mcinv {

struct ModelSpec {
  std::string name;
  std::string display;
  AlgebraSpec algebra;
  Weight highest_weight;
  long dim = 0;
};

inline ModelSpec make_model(std::string name, std::string display, std::string_view algebra, Weight hw) {
  ModelSpec m{std::move(name), std::move(display), AlgebraSpec::parse(algebra), hw, 0};
  m.dim = weyl_dim(m.algebra, hw).get_si();
  return m;
}

inline const std::vector<ModelSpec>& model_registry() {
  static const std::vector<ModelSpec> models = {
      make_model("e7", "E7, rep 56", "E7", Weight::unit(6)),
      make_model("sp6", "Sp(6), rep 14'", "C3", Weight::unit(2)),
      make_model("so12", "SO(12), rep 32", "D6", Weight::unit(5)),
      make_model("su6", "SU(6), rep 20", "A5", Weight::unit(2)),
      make_model("stu", "SL(2)^3, rep (2,2,2)", "A1A1A1", Weight{1, 1, 1}),
  };
  return models;
}

class UnknownModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline const ModelSpec& find_model(std::string_view name) {
  for (const auto& m : model_registry())
    if (m.name == name) return m;
  throw UnknownModelError("unknown model '" + std::string(name) + "' (expected e7, sp6, so12, su6 or stu)");
}

// A1 acting on its 2-dimensional representation; used as a small test model.
inline ModelSpec toy_a1_model() { return make_model("a1", "SL(2), rep 2", "A1", Weight{1}); }

// ---- counting ------------------------------------------------------------

inline std::int64_t invariants_in_schur(const ModelSpec& model, const Partition& lambda, ComputeBudget& budget) {
  if (lambda.empty()) return 1;
  if (lambda.height() > model.dim) return 0;
  return schur_power(model.algebra, lambda, model.highest_weight, budget).trivial();
}

inline std::int64_t invariants_in_schur(const ModelSpec& model, const Partition& lambda) {
  ComputeBudget b;
  return invariants_in_schur(model, lambda, b);
}

inline std::int64_t horizontal_invariant_dim(const ModelSpec& model, int p, int a, ComputeBudget& budget) {
  if (p < 1 || a < 0) throw std::invalid_argument("horizontal_invariant_dim: need p >= 1 and a >= 0");
  if (a == 0) return 1;
  return invariants_in_schur(model, Partition::rectangle(a, p), budget);
}

inline std::int64_t horizontal_invariant_dim(const ModelSpec& model, int p, int a) {
  ComputeBudget b;
  return horizontal_invariant_dim(model, p, a, b);
}

// Multiplicity of the trivial SL(p) representation in S_lambda(C^p).
inline std::int64_t sl_trivial_multiplicity(const Partition& lambda, int p, ComputeBudget& budget) {
  if (lambda.height() > p) return 0;
  if (p == 1) return 1;
  AlgebraSpec a = AlgebraSpec::simple(CartanType::A, p - 1);
  return schur_power(a, lambda, Weight::unit(0), budget).trivial();
}

// Invariants of SL(p) x G in degree-k polynomials on C^p (x) R, summed over
// all partitions of k.
inline std::int64_t degree_invariant_dim(const ModelSpec& model, int p, int k, ComputeBudget& budget) {
  std::int64_t total = 0;
  for (const Partition& lam : partitions_of(k, p)) {
    std::int64_t h = sl_trivial_multiplicity(lam, p, budget);
    if (h == 0) continue;
    total += h * invariants_in_schur(model, lam, budget);
  }
  return total;
}

// ---- tables and cache ----------------------------------------------------

inline constexpr std::string_view kAlgorithmDescriptor = "mcinv/jacobi-trudi+freudenthal/1";

inline std::string algorithm_version() {
  std::uint32_t h = 0x811c9dc5u;
  for (char ch : kAlgorithmDescriptor) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x01000193u;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(8);
  os.fill('0');
  os << h;
  return os.str();
}

class InvariantTable {
 public:
  InvariantTable(std::string model, int p_max, int a_max)
      : model_(std::move(model)), p_max_(p_max), a_max_(a_max),
        cells_(static_cast<std::size_t>(p_max * (a_max + 1))) {}

  const std::string& model() const { return model_; }
  int p_max() const { return p_max_; }
  int a_max() const { return a_max_; }

  const std::optional<std::int64_t>& at(int p, int a) const { return cells_[index(p, a)]; }
  void set(int p, int a, std::optional<std::int64_t> d) { cells_[index(p, a)] = d; }

  std::size_t computed() const {
    std::size_t n = 0;
    for (const auto& c : cells_) n += c.has_value();
    return n;
  }

  bool operator==(const InvariantTable&) const = default;

 private:
  std::size_t index(int p, int a) const {
    if (p < 1 || p > p_max_ || a < 0 || a > a_max_) throw std::out_of_range("table cell out of range");
    return static_cast<std::size_t>((p - 1) * (a_max_ + 1) + a);
  }

  std::string model_;
  int p_max_, a_max_;
  std::vector<std::optional<std::int64_t>> cells_;
};

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Line-oriented cache `model,p,a,d,version`. Writes go to a temporary file
// that is renamed into place, so concurrent writers leave a complete file.
class TableCache {
 public:
  using Key = std::tuple<std::string, int, int>;

  explicit TableCache(std::filesystem::path dir) : path_(std::move(dir) / "invariant-table.cache") {
    std::lock_guard<std::mutex> lock(mu_);
    entries_ = read_file();
  }

  const std::filesystem::path& path() const { return path_; }

  std::optional<std::int64_t> lookup(const std::string& model, int p, int a) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find({model, p, a});
    if (it == entries_.end() || it->second.second != algorithm_version()) return std::nullopt;
    return it->second.first;
  }

  void store(const std::string& model, int p, int a, std::int64_t d) {
    std::lock_guard<std::mutex> lock(mu_);
    entries_[{model, p, a}] = {d, algorithm_version()};
    auto on_disk = read_file();
    for (const auto& [k, v] : entries_) on_disk[k] = v;
    entries_ = on_disk;
    write_file();
  }

 private:
  std::map<Key, std::pair<std::int64_t, std::string>> read_file() const {
    std::map<Key, std::pair<std::int64_t, std::string>> out;
    std::ifstream in(path_);
    if (!in) return out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      std::vector<std::string> f;
      std::stringstream ss(line);
      std::string tok;
      while (std::getline(ss, tok, ',')) f.push_back(tok);
      auto bad = [&](const std::string& why) {
        return CacheError("corrupt cache " + path_.string() + " line " + std::to_string(lineno) + ": " + why);
      };
      if (f.size() != 5) throw bad("expected 5 fields");
      try {
        std::size_t u1 = 0, u2 = 0, u3 = 0;
        int p = std::stoi(f[1], &u1);
        int a = std::stoi(f[2], &u2);
        long long d = std::stoll(f[3], &u3);
        if (u1 != f[1].size() || u2 != f[2].size() || u3 != f[3].size() || p < 1 || a < 0 || d < 0)
          throw bad("malformed number");
        if (f[0].empty() || f[4].empty()) throw bad("empty field");
        Key k{f[0], p, a};
        auto it = out.find(k);
        if (it != out.end() && it->second.second == f[4] && it->second.first != d) throw bad("conflicting values");
        out[k] = {d, f[4]};
      } catch (const std::logic_error&) {
        throw bad("malformed number");
      }
    }
    return out;
  }

  void write_file() const {
    std::filesystem::create_directories(path_.parent_path());
    std::random_device rd;
    auto tmp = path_;
    tmp += ".tmp." + std::to_string(rd());
    {
      std::ofstream out(tmp);
      if (!out) throw CacheError("cannot write cache file " + tmp.string());
      for (const auto& [k, v] : entries_)
        out << std::get<0>(k) << ',' << std::get<1>(k) << ',' << std::get<2>(k) << ',' << v.first << ',' << v.second << '\n';
      if (!out) throw CacheError("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, path_);
  }

  std::filesystem::path path_;
  mutable std::mutex mu_;
  std::map<Key, std::pair<std::int64_t, std::string>> entries_;
};

struct TableOptions {
  std::uint64_t budget = ComputeBudget::kDefaultLimit;  // per cell
  unsigned threads = 1;
  TableCache* cache = nullptr;
};

inline InvariantTable generate_table(const ModelSpec& model, int p_max, int a_max, const TableOptions& opt = {}) {
  if (p_max < 1 || a_max < 0) throw std::invalid_argument("generate_table: need p_max >= 1 and a_max >= 0");
  InvariantTable table(model.name, p_max, a_max);
  std::vector<std::pair<int, int>> cells;
  for (int p = 1; p <= p_max; ++p)
    for (int a = 0; a <= a_max; ++a) cells.emplace_back(p, a);
  std::vector<std::optional<std::int64_t>> values(cells.size());
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr err;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      auto [p, a] = cells[i];
      try {
        if (opt.cache) {
          if (auto hit = opt.cache->lookup(model.name, p, a)) {
            values[i] = hit;
            continue;
          }
        }
        ComputeBudget budget(opt.budget);
        std::int64_t d = horizontal_invariant_dim(model, p, a, budget);
        values[i] = d;
        if (opt.cache) opt.cache->store(model.name, p, a, d);
      } catch (const ResourceLimitError&) {
        values[i] = std::nullopt;
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(cells.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  for (std::size_t i = 0; i < cells.size(); ++i) table.set(cells[i].first, cells[i].second, values[i]);
  return table;
}

}  // namespace mcinv
