#include "adhp/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace adhp {

namespace prg {

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

std::uint64_t SplitMix64::next() {
  state += kGolden;
  return mix64(state);
}

std::uint64_t bounded(SplitMix64& stream, std::uint64_t bound) {
  if (bound == 0) {
    throw Error(ErrorKind::PreconditionViolated, "bounded draw needs bound >= 1");
  }
  if (bound == 1) return 0;
  // 2^64 mod bound, computed without 128-bit arithmetic.
  std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t u = stream.next();
    if (u >= threshold) return u % bound;
  }
}

}  // namespace prg

namespace {

constexpr std::uint64_t kU64Max = ~0ull;

// Lexicographically next k-subset of {1..n}; false when `subset` is the last.
bool advance_subset(std::vector<VertexId>& subset, int n) {
  int k = static_cast<int>(subset.size());
  for (int i = k - 1; i >= 0; --i) {
    if (subset[static_cast<size_t>(i)] < n - (k - 1 - i)) {
      ++subset[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j) {
        subset[static_cast<size_t>(j)] = subset[static_cast<size_t>(j - 1)] + 1;
      }
      return true;
    }
  }
  return false;
}

std::vector<std::vector<VertexId>> all_subsets(int n, int k) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> subset(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) subset[static_cast<size_t>(i)] = i + 1;
  do {
    out.push_back(subset);
  } while (advance_subset(subset, n));
  return out;
}

// rank-th permutation of `sorted` in lexicographic order, 0 <= rank < k!.
std::vector<VertexId> unrank_permutation(std::vector<VertexId> sorted,
                                         std::uint64_t rank) {
  std::vector<VertexId> out;
  out.reserve(sorted.size());
  std::uint64_t f = factorial(static_cast<int>(sorted.size()));
  while (!sorted.empty()) {
    f /= sorted.size();
    size_t pick = static_cast<size_t>(rank / f);
    rank %= f;
    out.push_back(sorted[pick]);
    sorted.erase(sorted.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

struct SearchDriver {
  const Hypertournament& h;
  std::optional<std::uint64_t> node_limit;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  SearchStats stats;

  std::vector<VertexId> vertices;
  std::vector<ArcId> arc_ids;
  std::vector<char> vertex_used;
  std::vector<char> arc_used;
  bool aborted = false;

  explicit SearchDriver(const Hypertournament& h_in) : h(h_in) {
    vertex_used.assign(static_cast<size_t>(h.n()) + 1, 0);
    arc_used.assign(static_cast<size_t>(h.arc_count()), 0);
  }

  bool spend_node() {
    ++stats.nodes;
    if (node_limit && stats.nodes > *node_limit) {
      aborted = true;
      return false;
    }
    if (deadline && (stats.nodes & 0xFFF) == 0 &&
        std::chrono::steady_clock::now() > *deadline) {
      aborted = true;
      return false;
    }
    return true;
  }

  // next step must have orientation `orient`; true once a hamiltonian path
  // is in `vertices`/`arc_ids`.
  bool extend(StepOrientation orient) {
    if (static_cast<int>(vertices.size()) == h.n()) return true;
    if (aborted) return false;
    VertexId cur = vertices.back();
    for (VertexId u = 1; u <= h.n(); ++u) {
      if (vertex_used[static_cast<size_t>(u)]) continue;
      const std::vector<ArcId>& pool = orient == StepOrientation::Forward
                                           ? h.arcs_preceding(cur, u)
                                           : h.arcs_preceding(u, cur);
      for (ArcId id : pool) {
        if (arc_used[static_cast<size_t>(id)]) continue;
        if (!spend_node()) return false;
        vertices.push_back(u);
        arc_ids.push_back(id);
        vertex_used[static_cast<size_t>(u)] = 1;
        arc_used[static_cast<size_t>(id)] = 1;
        if (extend(orient == StepOrientation::Forward
                       ? StepOrientation::Backward
                       : StepOrientation::Forward)) {
          return true;
        }
        vertex_used[static_cast<size_t>(u)] = 0;
        arc_used[static_cast<size_t>(id)] = 0;
        vertices.pop_back();
        arc_ids.pop_back();
        if (aborted) return false;
      }
    }
    return false;
  }

  bool run() {
    for (VertexId start = 1; start <= h.n(); ++start) {
      for (StepOrientation first :
           {StepOrientation::Forward, StepOrientation::Backward}) {
        if (!spend_node()) return false;
        vertices.assign(1, start);
        arc_ids.clear();
        vertex_used[static_cast<size_t>(start)] = 1;
        if (extend(first)) return true;
        vertex_used[static_cast<size_t>(start)] = 0;
        if (aborted) return false;
      }
    }
    return false;
  }
};

}  // namespace

SearchResult find_adhp_exhaustive(const Hypertournament& h,
                                  const SearchBudget& budget,
                                  SearchStats* stats) {
  SearchDriver driver(h);
  driver.node_limit = budget.node_limit;
  if (budget.time_limit) {
    driver.deadline = std::chrono::steady_clock::now() + *budget.time_limit;
  }
  bool found = driver.run();
  driver.stats.budget_hit = driver.aborted;
  if (stats) *stats = driver.stats;
  if (found) {
    auto checked = validate_adp(h, driver.vertices, driver.arc_ids);
    return std::get<AntidirectedPath>(checked);
  }
  if (driver.aborted) return BudgetExhausted{};
  return NoPathExists{};
}

SearchResult find_adhp_exhaustive(const Hypertournament& h) {
  if (h.n() > kUnbudgetedSearchLimit) {
    throw Error(ErrorKind::BudgetRequired,
                "unbudgeted search is limited to n <= " +
                    std::to_string(kUnbudgetedSearchLimit) +
                    "; pass an explicit SearchBudget");
  }
  return find_adhp_exhaustive(h, SearchBudget::unlimited());
}

std::uint64_t factorial(int k) {
  std::uint64_t result = 1;
  for (int i = 2; i <= k; ++i) {
    std::uint64_t next = result * static_cast<std::uint64_t>(i);
    if (next / static_cast<std::uint64_t>(i) != result) return kU64Max;
    result = next;
  }
  return result;
}

std::uint64_t labeled_instance_count(int n, int k) {
  if (k < 2 || k > n) {
    throw Error(ErrorKind::PreconditionViolated,
                "signature needs 2 <= k <= n");
  }
  std::uint64_t base = factorial(k);
  std::uint64_t m = binomial(n, k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    if (result > kU64Max / base) return kU64Max;
    result *= base;
  }
  return result;
}

Hypertournament labeled_instance(int n, int k, std::uint64_t index) {
  std::uint64_t total = labeled_instance_count(n, k);
  if (index >= total) {
    throw Error(ErrorKind::PreconditionViolated,
                "instance index " + std::to_string(index) +
                    " out of range for the signature");
  }
  auto subsets = all_subsets(n, k);
  std::uint64_t kf = factorial(k);
  std::vector<std::uint64_t> digits(subsets.size(), 0);
  for (size_t r = subsets.size(); r-- > 0;) {
    digits[r] = index % kf;
    index /= kf;
  }
  std::vector<Arc> arcs;
  arcs.reserve(subsets.size());
  for (size_t r = 0; r < subsets.size(); ++r) {
    arcs.push_back(Arc{unrank_permutation(subsets[r], digits[r])});
  }
  return Hypertournament::build(n, k, std::move(arcs));
}

std::uint64_t default_enum_cap() {
  if (const char* env = std::getenv("ADHP_ENUM_CAP")) {
    char* end = nullptr;
    std::uint64_t value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return 20'000'000ull;
}

std::uint64_t for_each_labeled(
    int n, int k,
    const std::function<bool(std::uint64_t, const Hypertournament&)>& visit,
    std::optional<std::uint64_t> cap) {
  std::uint64_t total = labeled_instance_count(n, k);
  std::uint64_t limit = cap.value_or(default_enum_cap());
  if (total > limit) {
    throw Error(ErrorKind::CapExceeded,
                "signature holds " + std::to_string(total) +
                    " instances, above the cap of " + std::to_string(limit));
  }
  auto subsets = all_subsets(n, k);
  std::uint64_t kf = factorial(k);
  std::vector<std::uint64_t> digits(subsets.size(), 0);
  std::uint64_t visited = 0;
  for (std::uint64_t index = 0; index < total; ++index) {
    std::vector<Arc> arcs;
    arcs.reserve(subsets.size());
    for (size_t r = 0; r < subsets.size(); ++r) {
      arcs.push_back(Arc{unrank_permutation(subsets[r], digits[r])});
    }
    Hypertournament h = Hypertournament::build(n, k, std::move(arcs));
    ++visited;
    if (!visit(index, h)) break;
    for (size_t r = subsets.size(); r-- > 0;) {
      if (++digits[r] < kf) break;
      digits[r] = 0;
    }
  }
  return visited;
}

EnumerationReport enumerate_all(
    int n, int k,
    const std::function<InstanceOutcome(std::uint64_t, const Hypertournament&)>&
        visit,
    std::optional<std::uint64_t> cap) {
  EnumerationReport report;
  for_each_labeled(
      n, k,
      [&](std::uint64_t index, const Hypertournament& h) {
        InstanceOutcome outcome = visit(index, h);
        ++report.total;
        if (outcome.has_adhp) {
          ++report.with_adhp;
        } else {
          report.failures.push_back(index);
        }
        if (!outcome.agree) report.disagreements.push_back(index);
        return true;
      },
      cap);
  return report;
}

Hypertournament random_hypertournament(int n, int k, std::uint64_t seed) {
  if (k < 2 || k > n) {
    throw Error(ErrorKind::PreconditionViolated,
                "signature needs 2 <= k <= n");
  }
  std::vector<Arc> arcs;
  std::vector<VertexId> subset(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) subset[static_cast<size_t>(i)] = i + 1;
  std::uint64_t rank = 0;
  do {
    prg::SplitMix64 stream{prg::mix64(seed + (rank + 1) * prg::kGolden)};
    std::vector<VertexId> tuple = subset;
    for (size_t i = tuple.size() - 1; i >= 1; --i) {
      size_t j = static_cast<size_t>(
          prg::bounded(stream, static_cast<std::uint64_t>(i) + 1));
      std::swap(tuple[i], tuple[j]);
    }
    arcs.push_back(Arc{std::move(tuple)});
    ++rank;
  } while (advance_subset(subset, n));
  return Hypertournament::build(n, k, std::move(arcs));
}

}  // namespace adhp
