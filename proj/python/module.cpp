#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "gridcycles/closedforms.hpp"
#include "gridcycles/equivalence.hpp"
#include "gridcycles/oracle.hpp"
#include "gridcycles/perms.hpp"
#include "gridcycles/report.hpp"
#include "gridcycles/verify.hpp"
#include "gridcycles/version.hpp"
#include "gridcycles/words.hpp"
#include "json.hpp"

namespace py = pybind11;
namespace gc = gridcycles;

// Exact integers cross the boundary as Python ints, via their decimal form.
namespace pybind11 {
namespace detail {

template <>
struct type_caster<gc::ExactInt> {
 public:
  PYBIND11_TYPE_CASTER(gc::ExactInt, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    object text = reinterpret_steal<object>(PyObject_Str(src.ptr()));
    if (!text) return false;
    value = gc::ExactInt(std::string(PyUnicode_AsUTF8(text.ptr())));
    return true;
  }

  static handle cast(const gc::ExactInt& src, return_value_policy, handle) {
    return PyLong_FromString(src.str().c_str(), nullptr, 10);
  }
};

}  // namespace detail
}  // namespace pybind11

namespace {

gc::OracleBudget budget_of(int max_n, int shards) {
  gc::OracleBudget budget;
  budget.max_n = max_n;
  budget.parallel_shards = shards;
  return budget;
}

nlohmann::json record_json(const gc::VerificationRecord& record) {
  nlohmann::json row;
  row["claim"] = record.claim;
  row["sigma"] = record.sigma;
  row["n"] = record.n;
  if (record.pos) row["pos"] = *record.pos;
  if (record.eval) row["eval"] = *record.eval;
  row["left"] = record.left.str();
  row["right"] = record.right.str();
  row["match"] = record.match();
  row["known_discrepancy"] = record.known_discrepancy;
  row["note"] = record.note;
  return row;
}

}  // namespace

PYBIND11_MODULE(_gridcycles, m) {
  m.doc() = "Exact counts of cyclic permutations in monotone grid classes";
  m.attr("__version__") = gc::kVersion;

  // Word layer.
  m.def("lyndon_count", [](int k, int n) { return gc::lyndon_count(k, n); },
        py::arg("k"), py::arg("n"),
        "Primitive necklaces of length n over k letters");
  m.def("lyndon_density_count",
        [](int n, int ones) { return gc::lyndon_density_count(n, ones); },
        py::arg("n"), py::arg("ones"),
        "Primitive binary necklaces of length n with the given number of ones");
  m.def("lyndon_odd_count",
        [](int k, int n, const std::string& sigma) {
          return gc::lyndon_odd_count(k, n, gc::Signature::parse(sigma));
        },
        py::arg("k"), py::arg("n"), py::arg("sigma"),
        "Primitive necklaces whose minus-letter count is odd");
  m.def("star_count",
        [](int k, int n, const std::string& sigma) {
          return gc::star_count(k, n, gc::Signature::parse(sigma));
        },
        py::arg("k"), py::arg("n"), py::arg("sigma"),
        "Primitive necklaces plus odd-parity half-length squares");

  // Permutation layer (permutations travel as text, as in the CLI).
  m.def("theta",
        [](const std::string& pi) {
          return gc::theta(gc::Permutation::parse(pi)).str();
        },
        py::arg("pi"), "One-line form of the cycle (pi_1, ..., pi_n)");
  m.def("is_cyclic",
        [](const std::string& pi) {
          return gc::is_cyclic(gc::Permutation::parse(pi));
        },
        py::arg("pi"));
  m.def("peaks",
        [](const std::string& pi) {
          return gc::peaks(gc::Permutation::parse(pi));
        },
        py::arg("pi"));
  m.def("valleys",
        [](const std::string& pi) {
          return gc::valleys(gc::Permutation::parse(pi));
        },
        py::arg("pi"));
  m.def("in_class",
        [](const std::string& pi, const std::string& sigma) {
          return gc::in_class(gc::Permutation::parse(pi),
                              gc::Signature::parse(sigma));
        },
        py::arg("pi"), py::arg("sigma"));
  m.def("segmentations",
        [](const std::string& pi, const std::string& sigma) {
          std::vector<std::vector<int>> out;
          for (const auto& seg :
               gc::segmentations(gc::Permutation::parse(pi),
                                 gc::Signature::parse(sigma))) {
            out.push_back(seg.boundaries);
          }
          return out;
        },
        py::arg("pi"), py::arg("sigma"));
  m.def("count_segmentations",
        [](const std::string& pi, const std::string& sigma) {
          return gc::count_segmentations(gc::Permutation::parse(pi),
                                         gc::Signature::parse(sigma));
        },
        py::arg("pi"), py::arg("sigma"));

  // Closed forms.
  m.def("class_count_formula",
        [](int index, int n) { return gc::class_count_formula(index, n); },
        py::arg("index"), py::arg("n"),
        "Closed-form count for the table signature of the given index");
  m.def("unimodal_cycle_count",
        [](int n) { return gc::unimodal_cycle_count(n); }, py::arg("n"));
  m.def("unimodal_peak_count",
        [](int n, int i) { return gc::unimodal_peak_count(n, i); },
        py::arg("n"), py::arg("i"));

  // Oracle.
  m.def("enumerate_cycles",
        [](int n, int max_n) {
          std::vector<std::string> out;
          gc::for_each_cycle(n, budget_of(max_n, 1),
                             [&](const gc::Permutation& pi) {
                               out.push_back(pi.str());
                             });
          return out;
        },
        py::arg("n"), py::arg("max_n") = 11);
  m.def("count_cyclic_in_class",
        [](const std::string& sigma, int n, int max_n, int shards) {
          return gc::count_cyclic_in_class(gc::Signature::parse(sigma), n,
                                           budget_of(max_n, shards));
        },
        py::arg("sigma"), py::arg("n"), py::arg("max_n") = 11,
        py::arg("shards") = 4);
  m.def("segmentation_sum",
        [](const std::string& sigma, int n, int max_n, int shards) {
          return gc::segmentation_sum(gc::Signature::parse(sigma), n,
                                      budget_of(max_n, shards));
        },
        py::arg("sigma"), py::arg("n"), py::arg("max_n") = 11,
        py::arg("shards") = 4);

  // Verification and classification, delivered as JSON text; the package
  // wrapper turns them into plain dicts.
  m.def("verify_json",
        [](const std::string& target, int n_max, int max_n, int shards) {
          const gc::VerifySummary summary =
              gc::run_verify(gc::parse_verify_target(target), n_max,
                             budget_of(max_n, shards));
          nlohmann::json doc;
          doc["records"] = nlohmann::json::array();
          for (const auto& record : summary.records) {
            doc["records"].push_back(record_json(record));
          }
          doc["complete"] = summary.complete;
          doc["passed"] = summary.passed();
          if (!summary.complete) doc["stop_reason"] = summary.stop_reason;
          return doc.dump();
        },
        py::arg("target"), py::arg("n_max"), py::arg("max_n") = 11,
        py::arg("shards") = 4);
  m.def("classify_json",
        [](int n_max, const std::string& counter, int max_n, int shards) {
          std::vector<gc::Signature> signatures;
          for (int index = 1; index <= 8; ++index) {
            signatures.push_back(gc::Signature::from_index(index));
          }
          const gc::EquivalenceReport result = gc::classify(
              signatures, n_max,
              counter == "formula" ? gc::CounterKind::formula
                                   : gc::CounterKind::oracle,
              budget_of(max_n, shards));
          nlohmann::json doc;
          doc["n_min"] = result.n_min;
          doc["n_max"] = result.n_max;
          nlohmann::json counts = nlohmann::json::object();
          for (size_t s = 0; s < signatures.size(); ++s) {
            nlohmann::json seq = nlohmann::json::array();
            for (const auto& value : result.counts[s]) seq.push_back(value.str());
            counts[signatures[s].str()] = seq;
          }
          doc["counts"] = counts;
          auto classes_json = [&](const std::vector<std::vector<int>>& classes) {
            nlohmann::json out = nlohmann::json::array();
            for (const auto& members : classes) {
              nlohmann::json group = nlohmann::json::array();
              for (int member : members) {
                group.push_back(signatures[static_cast<size_t>(member)].str());
              }
              out.push_back(group);
            }
            return out;
          };
          doc["full_classes"] = classes_json(result.full_classes);
          doc["weak_classes"] = classes_json(result.weak_classes);
          return doc.dump();
        },
        py::arg("n_max"), py::arg("counter") = "oracle", py::arg("max_n") = 11,
        py::arg("shards") = 4);
  m.def("conjecture_json",
        [](const std::string& which, int k_max, int n_max, int max_n,
           int shards) {
          const auto records =
              which == "complement"
                  ? gc::conjecture_complement(k_max, n_max,
                                              budget_of(max_n, shards))
                  : gc::conjecture_alternating(k_max, n_max,
                                               budget_of(max_n, shards));
          nlohmann::json doc = nlohmann::json::array();
          for (const auto& record : records) doc.push_back(record_json(record));
          return doc.dump();
        },
        py::arg("which"), py::arg("k_max"), py::arg("n_max"),
        py::arg("max_n") = 11, py::arg("shards") = 4);
}
