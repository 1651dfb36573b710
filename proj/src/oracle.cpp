#include "gridcycles/oracle.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>

#include "gridcycles/errors.hpp"
#include "gridcycles/words.hpp"

namespace gridcycles {

namespace {

ExactInt cycle_visits(int n) {
  ExactInt f = 1;  // (n-1)! sequences start with 1
  for (int i = 2; i < n; ++i) f *= i;
  return f;
}

void check_budget(int n, const OracleBudget& budget) {
  if (n < 1) throw std::invalid_argument("oracle: n must be >= 1");
  if (n > budget.max_n) {
    throw budget_error("oracle: enumerating n=" + std::to_string(n) +
                       " needs " + cycle_visits(n).str() +
                       " cycle visits, over the budget cap max_n=" +
                       std::to_string(budget.max_n) +
                       "; raise the budget to proceed");
  }
}

// Runs `visit(shard, cycle)` over every n-cycle exactly once. Work is split
// by the second entry of the defining sequence, so any shard count yields the
// same multiset of visits; callers keep per-shard state and merge in shard
// order for determinism.
void sharded_cycle_scan(
    int n, const OracleBudget& budget,
    const std::function<void(int, std::span<const int>)>& visit) {
  check_budget(n, budget);
  const int shards = std::max(1, budget.parallel_shards);
  auto worker = [&](int shard) {
    if (n == 1) {
      if (shard == 0) {
        int image[1] = {1};
        visit(shard, std::span<const int>(image, 1));
      }
      return;
    }
    std::vector<int> seq(static_cast<size_t>(n));
    std::vector<int> image(static_cast<size_t>(n));
    for (int v = 2; v <= n; ++v) {
      if ((v - 2) % shards != shard) continue;
      seq[0] = 1;
      seq[1] = v;
      int fill = 2;
      for (int x = 2; x <= n; ++x) {
        if (x != v) seq[static_cast<size_t>(fill++)] = x;
      }
      do {
        for (int i = 0; i < n; ++i) {
          image[static_cast<size_t>(seq[static_cast<size_t>(i)] - 1)] =
              seq[static_cast<size_t>((i + 1) % n)];
        }
        visit(shard, std::span<const int>(image));
      } while (std::next_permutation(seq.begin() + 2, seq.end()));
    }
  };
  std::vector<std::future<void>> futures;
  futures.reserve(static_cast<size_t>(shards));
  for (int shard = 0; shard < shards; ++shard) {
    futures.push_back(std::async(std::launch::async, worker, shard));
  }
  for (auto& f : futures) f.get();
}

// Common shape: a per-cycle integer score, totalled deterministically.
ExactInt sharded_cycle_sum(
    int n, const OracleBudget& budget,
    const std::function<long long(std::span<const int>)>& score) {
  const int shards = std::max(1, budget.parallel_shards);
  std::vector<long long> partial(static_cast<size_t>(shards), 0);
  sharded_cycle_scan(n, budget, [&](int shard, std::span<const int> cycle) {
    partial[static_cast<size_t>(shard)] += score(cycle);
  });
  ExactInt total = 0;
  for (long long p : partial) total += p;
  return total;
}

void check_evaluation(const Signature& sigma, int n,
                      const std::vector<long>& eval) {
  if (static_cast<int>(eval.size()) != sigma.size()) {
    throw std::invalid_argument(
        "refined bijection: evaluation length must equal the signature length");
  }
  long sum = 0;
  for (long a : eval) {
    if (a < 0) {
      throw std::invalid_argument("refined bijection: negative evaluation entry");
    }
    sum += a;
  }
  if (sum != n) {
    throw std::invalid_argument("refined bijection: evaluation must sum to n");
  }
}

std::vector<int> boundaries_of(const std::vector<long>& eval) {
  std::vector<int> bounds;
  bounds.reserve(eval.size() + 1);
  bounds.push_back(0);
  long acc = 0;
  for (long a : eval) {
    acc += a;
    bounds.push_back(static_cast<int>(acc));
  }
  return bounds;
}

void for_each_composition(int n, int k,
                          const std::function<void(const std::vector<long>&)>& visit) {
  std::vector<long> parts(static_cast<size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int idx, int remaining) {
    if (idx == k - 1) {
      parts[static_cast<size_t>(idx)] = remaining;
      visit(parts);
      return;
    }
    for (int a = 0; a <= remaining; ++a) {
      parts[static_cast<size_t>(idx)] = a;
      rec(idx + 1, remaining - a);
    }
  };
  rec(0, n);
}

}  // namespace

void for_each_cycle(int n, const OracleBudget& budget,
                    const std::function<void(const Permutation&)>& visit) {
  check_budget(n, budget);
  std::vector<int> seq(static_cast<size_t>(n));
  std::iota(seq.begin(), seq.end(), 1);
  std::vector<int> image(static_cast<size_t>(n));
  do {
    for (int i = 0; i < n; ++i) {
      image[static_cast<size_t>(seq[static_cast<size_t>(i)] - 1)] =
          seq[static_cast<size_t>((i + 1) % n)];
    }
    visit(Permutation(image));
  } while (std::next_permutation(seq.begin() + 1, seq.end()));
}

std::vector<Permutation> enumerate_cycles(int n, const OracleBudget& budget) {
  std::vector<Permutation> out;
  for_each_cycle(n, budget, [&](const Permutation& pi) { out.push_back(pi); });
  return out;
}

ExactInt count_cyclic_in_class(const Signature& sigma, int n,
                               const OracleBudget& budget) {
  return sharded_cycle_sum(n, budget, [&](std::span<const int> cycle) {
    return detail::in_class_span(cycle, sigma) ? 1LL : 0LL;
  });
}

ExactInt segmentation_sum(const Signature& sigma, int n,
                          const OracleBudget& budget) {
  return sharded_cycle_sum(n, budget, [&](std::span<const int> cycle) {
    return static_cast<long long>(detail::count_segmentations_span(cycle, sigma));
  });
}

VerificationRecord refined_bijection_check(const Signature& sigma, int n,
                                           const std::vector<long>& eval,
                                           const OracleBudget& budget) {
  check_evaluation(sigma, n, eval);
  long long necklaces = 0;
  for_each_star_necklace(sigma.size(), n, sigma, [&](const Necklace& nl) {
    if (evaluation(nl.canonical) == eval) ++necklaces;
  });
  const std::vector<int> bounds = boundaries_of(eval);
  ExactInt admitting =
      sharded_cycle_sum(n, budget, [&](std::span<const int> cycle) {
        return detail::admits_boundaries(cycle, sigma,
                                         std::span<const int>(bounds))
                   ? 1LL
                   : 0LL;
      });
  VerificationRecord rec;
  rec.claim = "refined-bijection";
  rec.sigma = sigma.str();
  rec.n = n;
  rec.eval = eval;
  rec.left = necklaces;
  rec.right = admitting;
  return rec;
}

std::vector<VerificationRecord> refined_bijection_sweep(
    const Signature& sigma, int n, const OracleBudget& budget) {
  const int k = sigma.size();
  std::map<std::vector<long>, long long> necklace_hist;
  for_each_star_necklace(k, n, sigma, [&](const Necklace& nl) {
    ++necklace_hist[evaluation(nl.canonical)];
  });

  const int shards = std::max(1, budget.parallel_shards);
  std::vector<std::map<std::vector<long>, long long>> partial(
      static_cast<size_t>(shards));
  sharded_cycle_scan(n, budget, [&](int shard, std::span<const int> cycle) {
    detail::segmentations_span(
        cycle, sigma, [&](std::span<const int> bounds) {
          std::vector<long> eval(static_cast<size_t>(k));
          for (int i = 0; i < k; ++i) {
            eval[static_cast<size_t>(i)] = bounds[static_cast<size_t>(i + 1)] -
                                           bounds[static_cast<size_t>(i)];
          }
          ++partial[static_cast<size_t>(shard)][eval];
        });
  });
  std::map<std::vector<long>, long long> cycle_hist;
  for (const auto& shard_hist : partial) {
    for (const auto& [eval, count] : shard_hist) cycle_hist[eval] += count;
  }

  std::vector<VerificationRecord> out;
  for_each_composition(n, k, [&](const std::vector<long>& eval) {
    VerificationRecord rec;
    rec.claim = "refined-bijection";
    rec.sigma = sigma.str();
    rec.n = n;
    rec.eval = eval;
    auto l = necklace_hist.find(eval);
    rec.left = l == necklace_hist.end() ? 0 : l->second;
    auto r = cycle_hist.find(eval);
    rec.right = r == cycle_hist.end() ? 0 : r->second;
    out.push_back(std::move(rec));
  });
  return out;
}

ExactInt oracle_unimodal_peak_count(int n, int i, const OracleBudget& budget) {
  if (i < 1 || i > n) {
    throw std::invalid_argument(
        "oracle_unimodal_peak_count: position must lie in [1, n]");
  }
  const Signature updown("+-");
  return sharded_cycle_sum(n, budget, [&](std::span<const int> cycle) {
    return cycle[static_cast<size_t>(i - 1)] == n &&
                   detail::in_class_span(cycle, updown)
               ? 1LL
               : 0LL;
  });
}

ExactInt count_cycles_with_descents(int n, int descents,
                                    const OracleBudget& budget) {
  return sharded_cycle_sum(n, budget, [&](std::span<const int> cycle) {
    int d = 0;
    for (size_t i = 0; i + 1 < cycle.size(); ++i) {
      if (cycle[i] > cycle[i + 1]) ++d;
    }
    return d == descents ? 1LL : 0LL;
  });
}

ExactInt count_cycles_with_ascents(int n, int ascents,
                                   const OracleBudget& budget) {
  return sharded_cycle_sum(n, budget, [&](std::span<const int> cycle) {
    int a = 0;
    for (size_t i = 0; i + 1 < cycle.size(); ++i) {
      if (cycle[i] < cycle[i + 1]) ++a;
    }
    return a == ascents ? 1LL : 0LL;
  });
}

int descent_count(const Permutation& pi) {
  int d = 0;
  for (int i = 1; i < pi.size(); ++i) {
    if (pi.at(i) > pi.at(i + 1)) ++d;
  }
  return d;
}

int ascent_count(const Permutation& pi) {
  int a = 0;
  for (int i = 1; i < pi.size(); ++i) {
    if (pi.at(i) < pi.at(i + 1)) ++a;
  }
  return a;
}

}  // namespace gridcycles
