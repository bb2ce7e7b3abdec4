#pragma once

// Ground-truth facilities: exhaustive search for antidirected hamiltonian
// paths, systematic enumeration of all labeled instances of a signature, and
// seeded pseudo-random instance generation.  Everything here is deterministic
// given its inputs so results can be frozen in tests and replayed across
// platforms.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "adhp/adpath.hpp"
#include "adhp/core.hpp"

namespace adhp {

namespace prg {

// splitmix64: state advances by the golden-ratio increment and each output
// applies the finalizing mix below.  Frozen vectors (seed 0): e220a8397b1dcdaf,
// 6e789e6aa1b965f4, 06c45d188009454f, f88bb8a8724c81ec.
inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t x);

struct SplitMix64 {
  std::uint64_t state = 0;
  std::uint64_t next();
};

// Uniform draw from [0, bound) by rejection: accept u >= 2^64 mod bound,
// return u % bound.  Exact for every bound >= 1.
std::uint64_t bounded(SplitMix64& stream, std::uint64_t bound);

}  // namespace prg

struct SearchBudget {
  std::optional<std::uint64_t> node_limit;
  std::optional<std::chrono::milliseconds> time_limit;

  static SearchBudget unlimited() { return {}; }
};

struct SearchStats {
  std::uint64_t nodes = 0;
  bool budget_hit = false;
};

struct NoPathExists {};
struct BudgetExhausted {};

using SearchResult =
    std::variant<AntidirectedPath, NoPathExists, BudgetExhausted>;

// Complete depth-first search over antidirected paths.  Deterministic order:
// start vertices ascending, the first step tried forward before backward,
// next vertices ascending, arc ids ascending; later step directions are
// forced by alternation.  Returns the first hamiltonian path found, or
// NoPathExists after full exhaustion, or BudgetExhausted when a limit cut
// the search.  A node is one vertex placement; `stats` reports the count.
SearchResult find_adhp_exhaustive(const Hypertournament& h,
                                  const SearchBudget& budget,
                                  SearchStats* stats = nullptr);

// Unbudgeted search is only allowed for small instances; beyond this the
// caller must state a budget explicitly (error BudgetRequired).
inline constexpr int kUnbudgetedSearchLimit = 7;

SearchResult find_adhp_exhaustive(const Hypertournament& h);

// k! saturating at u64 max.
std::uint64_t factorial(int k);

// (k!)^C(n,k), saturating: the number of labeled k-hypertournaments on n
// vertices.
std::uint64_t labeled_instance_count(int n, int k);

// Instance number `index` under the fixed ordering: read the index as a
// base-k! numeral with one digit per k-subset, subsets in lexicographic
// order, the first subset most significant; each digit selects the
// lexicographic-rank permutation of its ascending subset.  Arc ids equal
// subset ranks.
Hypertournament labeled_instance(int n, int k, std::uint64_t index);

// 20,000,000 unless the ADHP_ENUM_CAP environment variable overrides it.
std::uint64_t default_enum_cap();

// Visits every labeled instance in index order; stops early when the visitor
// returns false.  Returns the number of instances visited.  Throws
// CapExceeded when the signature holds more instances than the cap (the
// default-capped call honors ADHP_ENUM_CAP).
std::uint64_t for_each_labeled(
    int n, int k,
    const std::function<bool(std::uint64_t, const Hypertournament&)>& visit,
    std::optional<std::uint64_t> cap = std::nullopt);

// What a per-instance check concluded; `agree` is for oracle-vs-constructor
// style comparisons and defaults to true when only one method ran.
struct InstanceOutcome {
  bool has_adhp = false;
  bool agree = true;
};

struct EnumerationReport {
  std::uint64_t total = 0;
  std::uint64_t with_adhp = 0;
  std::vector<std::uint64_t> failures;        // indices without a path
  std::vector<std::uint64_t> disagreements;   // indices with agree == false

  bool all_agree() const { return disagreements.empty(); }
};

EnumerationReport enumerate_all(
    int n, int k,
    const std::function<InstanceOutcome(std::uint64_t, const Hypertournament&)>&
        visit,
    std::optional<std::uint64_t> cap = std::nullopt);

// Seeded uniform instance: every k-subset (lexicographic rank r) draws its
// tuple from its own splitmix64 stream seeded with mix64(seed + (r+1) *
// kGolden) — the r-th output of a splitmix64 stream seeded with `seed` — via
// a Fisher-Yates shuffle of the ascending subset using `bounded` draws.
// Per-subset streams keep the construction well-defined for any k, including
// k where k! overflows 64 bits.
Hypertournament random_hypertournament(int n, int k, std::uint64_t seed);

}  // namespace adhp
