#include "pa/label_set.hpp"

#include <algorithm>

namespace pa {

LabelSet LabelSet::of(std::initializer_list<Label> labels) {
  return of(std::vector<Label>(labels));
}

LabelSet LabelSet::of(const std::vector<Label>& labels) {
  LabelSet s;
  for (Label x : labels) {
    s = s.with(x);
  }
  return s;
}

LabelSet LabelSet::ground(int n) {
  if (n < 0 || n > kMaxN) {
    throw std::invalid_argument("ground set size out of range: n=" + std::to_string(n));
  }
  return from_bits((std::uint64_t{1} << (n + 1)) - 1);
}

LabelSet LabelSet::with(Label x) const {
  if (x < 0 || x > kMaxN) {
    throw std::invalid_argument("label out of range: " + std::to_string(x));
  }
  return from_bits(bits_ | (std::uint64_t{1} << x));
}

std::vector<Label> LabelSet::labels() const {
  std::vector<Label> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

std::string LabelSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (Label x : labels()) {
    if (!first) s += ',';
    s += std::to_string(x);
    first = false;
  }
  s += '}';
  return s;
}

bool lex_less(LabelSet a, LabelSet b) {
  const auto la = a.labels();
  const auto lb = b.labels();
  return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
}

}  // namespace pa
