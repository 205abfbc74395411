#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mqmap/error.hpp"
#include "mqmap/ring.hpp"

namespace mqm {

// Bounds and sampling policy for exhaustive scans.
struct CheckConfig {
  std::uint64_t exhaustive_bound = std::uint64_t{1} << 24;  // max tuples scanned
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0x5eed;
  bool allow_sampling = true;
  // Sample even when the exhaustive scan would fit.
  bool force_sampling = false;
};

// exhaustive: every tuple; sampled: random tuples; grid: a product set large
// enough that a polynomial identity of the checked degree must hold everywhere.
enum class CheckMode { exhaustive, sampled, grid };

std::string to_string(CheckMode mode);

struct Witness {
  std::string check;
  std::vector<Elem> args;
  std::string detail;
};

struct CheckResult {
  std::string name;
  bool ok = true;
  CheckMode mode = CheckMode::exhaustive;
  std::uint64_t evaluations = 0;
};

struct Report {
  bool ok = true;
  std::vector<CheckResult> checks;
  std::vector<Witness> witnesses;

  // The witness is read after every argument is evaluated, so
  // add(scan_tuples(..., w), w) sees the witness the scan wrote.
  void add(CheckResult result, const std::optional<Witness>& witness = std::nullopt) {
    ok = ok && result.ok;
    checks.push_back(std::move(result));
    if (witness) witnesses.push_back(*witness);
  }
  void merge(const Report& other) {
    ok = ok && other.ok;
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
  }
  bool sampled() const {
    for (const auto& c : checks)
      if (c.mode == CheckMode::sampled) return true;
    return false;
  }
};

// Runs `pred` over size^arity tuples of ring elements, exhaustively when that
// fits under the bound, otherwise on cfg.samples random tuples (if allowed).
// The first failing tuple becomes the witness. `pred` takes a const Elem*
// and returns true when the property holds.
template <class Pred>
CheckResult scan_tuples(const std::string& name, std::uint32_t size, int arity,
                        const CheckConfig& cfg, bool may_sample, Pred&& pred,
                        std::optional<Witness>& witness) {
  CheckResult result{name, true, CheckMode::exhaustive, 0};
  std::uint64_t total = 1;
  bool fits = true;
  for (int i = 0; i < arity; ++i) {
    total *= size;
    if (total > cfg.exhaustive_bound) fits = false;
  }
  std::vector<Elem> t(arity, 0);
  auto fail = [&] {
    result.ok = false;
    witness = Witness{name, t, ""};
  };
  if (fits && !(cfg.force_sampling && may_sample)) {
    for (std::uint64_t k = 0; k < total; ++k) {
      std::uint64_t x = k;
      for (int i = arity; i-- > 0;) {
        t[i] = static_cast<Elem>(x % size);
        x /= size;
      }
      ++result.evaluations;
      if (!pred(t.data())) {
        fail();
        break;
      }
    }
    return result;
  }
  if (!may_sample || !cfg.allow_sampling)
    throw Error(ErrorCode::DomainTooLarge,
                name + ": " + std::to_string(size) + "^" + std::to_string(arity) +
                    " tuples exceed the exhaustive bound and sampling is disabled");
  result.mode = CheckMode::sampled;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<Elem> pick(0, size - 1);
  for (std::uint64_t k = 0; k < cfg.samples; ++k) {
    for (auto& x : t) x = pick(rng);
    ++result.evaluations;
    if (!pred(t.data())) {
      fail();
      break;
    }
  }
  return result;
}

}  // namespace mqm
