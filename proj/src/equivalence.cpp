#include "gridcycles/equivalence.hpp"

#include <stdexcept>
#include <string>

#include "gridcycles/closedforms.hpp"

namespace gridcycles {

namespace {

std::vector<ExactInt> count_sequence(const Signature& sigma, int n_min,
                                     int n_max, CounterKind counter,
                                     const OracleBudget& budget) {
  std::vector<ExactInt> out;
  out.reserve(static_cast<size_t>(n_max - n_min + 1));
  for (int n = n_min; n <= n_max; ++n) {
    if (counter == CounterKind::formula) {
      auto index = sigma.table_index();
      // Indices 1 and 2 have no closed form for the class itself; their
      // sequences come from the oracle even under the formula counter.
      if (index && *index >= 3) {
        out.push_back(class_count_formula(*index, n));
        continue;
      }
    }
    out.push_back(count_cyclic_in_class(sigma, n, budget));
  }
  return out;
}

}  // namespace

EquivalenceReport classify(const std::vector<Signature>& signatures, int n_max,
                           CounterKind counter, const OracleBudget& budget) {
  if (signatures.empty()) {
    throw std::invalid_argument("classify: need at least one signature");
  }
  EquivalenceReport report;
  if (n_max < report.n_min) {
    throw std::invalid_argument("classify: n_max must be >= " +
                                std::to_string(report.n_min));
  }
  if (counter == CounterKind::formula) {
    for (const Signature& sigma : signatures) {
      if (!sigma.table_index()) {
        throw std::invalid_argument(
            "classify: the formula counter covers only the eight length-3 "
            "signatures, not " + sigma.str());
      }
    }
  }
  report.n_max = n_max;
  report.counter = counter;
  report.signatures = signatures;
  for (const Signature& sigma : signatures) {
    report.counts.push_back(
        count_sequence(sigma, report.n_min, n_max, counter, budget));
  }

  const int count = static_cast<int>(signatures.size());
  auto sequences_equal = [&](int a, int b, bool weak) {
    for (int n = report.n_min; n <= n_max; ++n) {
      if (weak && n % 4 == 2) continue;
      if (report.counts[static_cast<size_t>(a)][static_cast<size_t>(n - report.n_min)] !=
          report.counts[static_cast<size_t>(b)][static_cast<size_t>(n - report.n_min)]) {
        return false;
      }
    }
    return true;
  };
  auto group = [&](bool weak) {
    std::vector<std::vector<int>> classes;
    std::vector<bool> used(static_cast<size_t>(count), false);
    for (int i = 0; i < count; ++i) {
      if (used[static_cast<size_t>(i)]) continue;
      std::vector<int> members{i};
      used[static_cast<size_t>(i)] = true;
      for (int j = i + 1; j < count; ++j) {
        if (!used[static_cast<size_t>(j)] && sequences_equal(i, j, weak)) {
          members.push_back(j);
          used[static_cast<size_t>(j)] = true;
        }
      }
      classes.push_back(std::move(members));
    }
    return classes;
  };
  report.full_classes = group(false);
  report.weak_classes = group(true);

  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      EquivalenceReport::PairDisagreement pair;
      pair.a = a;
      pair.b = b;
      for (int n = report.n_min; n <= n_max; ++n) {
        if (report.counts[static_cast<size_t>(a)][static_cast<size_t>(n - report.n_min)] !=
            report.counts[static_cast<size_t>(b)][static_cast<size_t>(n - report.n_min)]) {
          pair.first_n = n;
          break;
        }
      }
      report.disagreements.push_back(pair);
    }
  }
  return report;
}

std::vector<VerificationRecord> conjecture_complement(int k_max, int n_max,
                                                      const OracleBudget& budget) {
  if (k_max < 2) throw std::invalid_argument("conjecture_complement: k_max must be >= 2");
  if (n_max < 3) throw std::invalid_argument("conjecture_complement: n_max must be >= 3");
  std::vector<VerificationRecord> out;
  for (int k = 2; k <= k_max; ++k) {
    for (const Signature& sigma : all_signatures(k)) {
      Signature comp = complement_signature(sigma);
      if (comp.str() < sigma.str()) continue;  // each unordered pair once
      for (int n = 3; n <= n_max; ++n) {
        if (n % 4 == 2) continue;  // the claim is weak equivalence
        VerificationRecord rec;
        rec.claim = "complement-conjecture";
        rec.sigma = sigma.str();
        rec.n = n;
        rec.note = "compared with " + comp.str();
        rec.left = count_cyclic_in_class(sigma, n, budget);
        rec.right = count_cyclic_in_class(comp, n, budget);
        out.push_back(std::move(rec));
      }
    }
  }
  return out;
}

std::vector<VerificationRecord> conjecture_alternating(int k_max, int n_max,
                                                       const OracleBudget& budget) {
  if (k_max < 2) throw std::invalid_argument("conjecture_alternating: k_max must be >= 2");
  if (n_max < 3) throw std::invalid_argument("conjecture_alternating: n_max must be >= 3");
  std::vector<VerificationRecord> out;
  for (int k = 2; k <= k_max; ++k) {
    std::string plus_first, minus_first;
    for (int i = 0; i < k; ++i) {
      plus_first.push_back(i % 2 == 0 ? '+' : '-');
      minus_first.push_back(i % 2 == 0 ? '-' : '+');
    }
    const Signature a(plus_first);
    const Signature b(minus_first);
    for (int n = 3; n <= n_max; ++n) {
      VerificationRecord rec;
      rec.claim = "alternating-conjecture";
      rec.sigma = a.str();
      rec.n = n;
      rec.note = "compared with " + b.str();
      rec.left = count_cyclic_in_class(a, n, budget);
      rec.right = count_cyclic_in_class(b, n, budget);
      out.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace gridcycles
