#include "gridcycles/signature.hpp"

#include <algorithm>
#include <stdexcept>

namespace gridcycles {

namespace {
constexpr const char* kTable[8] = {"+++", "---", "+-+", "-+-",
                                   "++-", "+--", "-++", "--+"};
}  // namespace

Signature::Signature(std::string signs) : signs_(std::move(signs)) {
  if (signs_.size() < 2) {
    throw std::invalid_argument("signature: length must be >= 2, got \"" +
                                signs_ + "\"");
  }
  for (char c : signs_) {
    if (c != '+' && c != '-') {
      throw std::invalid_argument("signature: only '+' and '-' allowed, got \"" +
                                  signs_ + "\"");
    }
  }
}

Signature Signature::from_index(int index) {
  if (index < 1 || index > 8) {
    throw std::invalid_argument("signature index must be in 1..8, got s" +
                                std::to_string(index));
  }
  return Signature(kTable[index - 1]);
}

Signature Signature::parse(const std::string& text) {
  if (!text.empty() && text[0] == 's') {
    int index = 0;
    try {
      size_t used = 0;
      index = std::stoi(text.substr(1), &used);
      if (used != text.size() - 1) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw std::invalid_argument("signature: cannot parse \"" + text + "\"");
    }
    return from_index(index);
  }
  return Signature(text);
}

int Signature::minus_count() const {
  return static_cast<int>(std::count(signs_.begin(), signs_.end(), '-'));
}

std::optional<int> Signature::table_index() const {
  for (int i = 0; i < 8; ++i) {
    if (signs_ == kTable[i]) return i + 1;
  }
  return std::nullopt;
}

Signature reverse_signature(const Signature& sigma) {
  std::string signs = sigma.str();
  std::reverse(signs.begin(), signs.end());
  return Signature(signs);
}

Signature complement_signature(const Signature& sigma) {
  std::string signs = sigma.str();
  for (char& c : signs) c = (c == '+') ? '-' : '+';
  return Signature(signs);
}

SignatureParity parity(const Signature& sigma) {
  SignatureParity p;
  for (int i = 0; i < sigma.size(); ++i) {
    (sigma.is_minus(i) ? p.t_minus : p.t_plus).push_back(i);
  }
  return p;
}

std::vector<Signature> all_signatures(int k) {
  if (k < 2) throw std::invalid_argument("all_signatures: k must be >= 2");
  std::vector<Signature> out;
  out.reserve(1u << k);
  for (unsigned bits = 0; bits < (1u << k); ++bits) {
    std::string signs(static_cast<size_t>(k), '+');
    for (int i = 0; i < k; ++i) {
      if (bits & (1u << i)) signs[static_cast<size_t>(i)] = '-';
    }
    out.emplace_back(signs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gridcycles
