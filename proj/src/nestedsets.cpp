#include "pa/nestedsets.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

#include "pa/brackets.hpp"

namespace pa {

EnumerationLimits EnumerationLimits::from_environment() {
  EnumerationLimits limits;
  if (const char* env = std::getenv("PA_MAX_N"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 1 || value > kMaxN) {
      throw std::invalid_argument(std::string("invalid PA_MAX_N: ") + env);
    }
    limits.max_n = static_cast<int>(value);
  }
  return limits;
}

void check_dimension(int n) {
  if (n < 1 || n > kMaxN) {
    throw std::invalid_argument("n must be in 1.." + std::to_string(kMaxN) +
                                ", got " + std::to_string(n));
  }
}

void check_enumeration(int n, const EnumerationLimits& limits) {
  check_dimension(n);
  if (n > limits.max_n) {
    throw ResourceCapExceeded(n, limits.max_n);
  }
}

// ---------------------------------------------------------------------------
// Chain
// ---------------------------------------------------------------------------

LabelSet Chain::top() const {
  LabelSet s = core;
  for (Label x : ext) s = s.with(x);
  return s;
}

std::vector<LabelSet> Chain::sets() const {
  std::vector<LabelSet> out(ext.size() + 1);
  LabelSet s = core;
  out.back() = s;
  for (std::size_t j = ext.size(); j-- > 0;) {
    s = s.with(ext[j]);
    out[j] = s;
  }
  return out;
}

void Chain::validate(int n) const {
  check_dimension(n);
  const LabelSet x = LabelSet::ground(n);
  if (core.empty()) {
    throw std::invalid_argument("chain core is empty");
  }
  if (!core.subset_of(x)) {
    throw std::invalid_argument("chain core " + core.to_string() + " not within 0.." +
                                std::to_string(n));
  }
  LabelSet seen = core;
  for (Label e : ext) {
    if (e < 0 || e > n) {
      throw std::invalid_argument("chain label out of range: " + std::to_string(e));
    }
    if (seen.contains(e)) {
      throw std::invalid_argument("chain label repeated: " + std::to_string(e));
    }
    seen = seen.with(e);
  }
  if (seen.size() > n) {
    throw std::invalid_argument("chain top set " + seen.to_string() + " is not a proper subset of X");
  }
}

Chain Chain::from_sets(std::vector<LabelSet> sets) {
  if (sets.empty()) {
    throw std::invalid_argument("chain needs at least one set");
  }
  std::sort(sets.begin(), sets.end(),
            [](LabelSet a, LabelSet b) { return a.size() > b.size(); });
  Chain c;
  c.core = sets.back();
  if (c.core.empty()) {
    throw std::invalid_argument("chain contains the empty set");
  }
  for (std::size_t j = 0; j + 1 < sets.size(); ++j) {
    const LabelSet step = sets[j] - sets[j + 1];
    if (!sets[j + 1].proper_subset_of(sets[j]) || step.size() != 1) {
      throw std::invalid_argument("sets " + sets[j].to_string() + " and " +
                                  sets[j + 1].to_string() + " are not a singleton step");
    }
    c.ext.push_back(step.labels().front());
  }
  return c;
}

std::string Chain::to_string() const {
  std::string s = "[";
  bool first = true;
  for (LabelSet a : sets()) {
    if (!first) s += ',';
    s += a.to_string();
    first = false;
  }
  s += ']';
  return s;
}

std::strong_ordering operator<=>(const Chain& a, const Chain& b) {
  const int sa = a.core.size() + static_cast<int>(a.ext.size());
  const int sb = b.core.size() + static_cast<int>(b.ext.size());
  if (sa != sb) return sa <=> sb;
  if (a.core != b.core) {
    return lex_less(a.core, b.core) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.ext <=> b.ext;
}

// ---------------------------------------------------------------------------
// NestedSet
// ---------------------------------------------------------------------------

NestedSet::NestedSet(std::vector<Chain> chains) : chains_(std::move(chains)) {
  std::sort(chains_.begin(), chains_.end());
  chains_.erase(std::unique(chains_.begin(), chains_.end()), chains_.end());
}

bool NestedSet::contains(const Chain& c) const {
  return std::binary_search(chains_.begin(), chains_.end(), c);
}

bool NestedSet::includes(const NestedSet& other) const {
  return std::includes(chains_.begin(), chains_.end(), other.chains_.begin(), other.chains_.end());
}

NestedSet NestedSet::without(const Chain& c) const {
  NestedSet out;
  out.chains_.reserve(chains_.size());
  for (const Chain& x : chains_) {
    if (!(x == c)) out.chains_.push_back(x);
  }
  return out;
}

std::size_t NestedSet::common(const NestedSet& other) const {
  std::size_t count = 0;
  auto i = chains_.begin();
  auto j = other.chains_.begin();
  while (i != chains_.end() && j != other.chains_.end()) {
    const auto cmp = *i <=> *j;
    if (cmp < 0) {
      ++i;
    } else if (cmp > 0) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::vector<LabelSet> NestedSet::flattened() const {
  std::vector<LabelSet> out;
  for (const Chain& c : chains_) {
    for (LabelSet a : c.sets()) {
      if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    }
  }
  std::sort(out.begin(), out.end(), [](LabelSet a, LabelSet b) {
    return a.size() != b.size() ? a.size() > b.size() : a.bits() < b.bits();
  });
  return out;
}

std::string NestedSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const Chain& c : chains_) {
    if (!first) s += ',';
    s += c.to_string();
    first = false;
  }
  s += '}';
  return s;
}

// ---------------------------------------------------------------------------
// C1 and B1 membership
// ---------------------------------------------------------------------------

namespace {

void sort_by_size_desc(std::vector<LabelSet>& family) {
  std::sort(family.begin(), family.end(), [](LabelSet a, LabelSet b) {
    return a.size() != b.size() ? a.size() > b.size() : a.bits() < b.bits();
  });
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

bool is_sorted_set_chain(const std::vector<LabelSet>& family) {
  for (std::size_t j = 0; j + 1 < family.size(); ++j) {
    if (!family[j + 1].proper_subset_of(family[j])) return false;
  }
  return true;
}

bool has_wide_step(const std::vector<LabelSet>& family) {
  for (std::size_t j = 0; j + 1 < family.size(); ++j) {
    if ((family[j] - family[j + 1]).size() >= 2) return true;
  }
  return false;
}

// Both lists sorted by size descending with distinct sizes.
bool sets_included(const std::vector<LabelSet>& small, const std::vector<LabelSet>& big) {
  return std::all_of(small.begin(), small.end(), [&](LabelSet a) {
    return std::find(big.begin(), big.end(), a) != big.end();
  });
}

bool comparable_sets(const std::vector<LabelSet>& a, const std::vector<LabelSet>& b) {
  return a.size() <= b.size() ? sets_included(a, b) : sets_included(b, a);
}

bool union_in_c1_minus_b1(const std::vector<const std::vector<LabelSet>*>& members) {
  std::vector<LabelSet> u;
  for (const auto* m : members) u.insert(u.end(), m->begin(), m->end());
  sort_by_size_desc(u);
  return is_sorted_set_chain(u) && has_wide_step(u);
}

void validate_all(std::span<const Chain> cands, int n) {
  for (const Chain& c : cands) c.validate(n);
}

}  // namespace

bool is_set_chain(std::vector<LabelSet> family) {
  sort_by_size_desc(family);
  return is_sorted_set_chain(family);
}

bool is_gapped_chain(std::vector<LabelSet> family) {
  sort_by_size_desc(family);
  return is_sorted_set_chain(family) && has_wide_step(family);
}

bool comparable(const Chain& a, const Chain& b) {
  return comparable_sets(a.sets(), b.sets());
}

bool compatible(const Chain& a, const Chain& b) {
  const auto sa = a.sets();
  const auto sb = b.sets();
  return comparable_sets(sa, sb) || union_in_c1_minus_b1({&sa, &sb});
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

std::vector<Chain> enumerate_b1(int n) {
  check_dimension(n);
  if (n > 20) {
    throw std::invalid_argument("enumerate_b1: n too large for explicit enumeration");
  }
  std::vector<Chain> out;
  const std::uint64_t limit = std::uint64_t{1} << (n + 1);
  for (std::uint64_t bits = 1; bits + 1 < limit; ++bits) {
    const LabelSet top = LabelSet::from_bits(bits);
    // Choose the ordered extension list; the rest of `top` is the core.
    std::vector<Label> ext;
    auto extend = [&](auto&& self, LabelSet remaining) -> void {
      out.push_back(Chain{remaining, ext});
      if (remaining.size() == 1) return;
      for (Label x : remaining.labels()) {
        ext.push_back(x);
        self(self, remaining - LabelSet::of({x}));
        ext.pop_back();
      }
    };
    extend(extend, top);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_nested(std::span<const Chain> cands, int n) {
  validate_all(cands, n);
  std::vector<std::vector<LabelSet>> sets;
  sets.reserve(cands.size());
  for (const Chain& c : cands) sets.push_back(c.sets());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (comparable_sets(sets[i], sets[j])) continue;
      if (!union_in_c1_minus_b1({&sets[i], &sets[j]})) return false;
    }
  }
  return true;
}

bool is_nested(const NestedSet& s, int n) {
  return is_nested(std::span<const Chain>(s.chains()), n);
}

bool is_nested_oracle(std::span<const Chain> cands, int n) {
  validate_all(cands, n);
  if (cands.size() > 24) {
    throw std::invalid_argument("is_nested_oracle: too many candidates for subset enumeration");
  }
  std::vector<std::vector<LabelSet>> sets;
  for (const Chain& c : cands) sets.push_back(c.sets());
  const std::size_t m = sets.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<const std::vector<LabelSet>*> members;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) members.push_back(&sets[i]);
    }
    bool antichain = true;
    for (std::size_t i = 0; i < members.size() && antichain; ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        // Equal chains are comparable; duplicates never form an antichain.
        if (comparable_sets(*members[i], *members[j])) {
          antichain = false;
          break;
        }
      }
    }
    if (antichain && !union_in_c1_minus_b1(members)) return false;
  }
  return true;
}

std::vector<NestedSet> enumerate_vertices(int n, const EnumerationLimits& limits) {
  check_enumeration(n, limits);
  std::vector<NestedSet> out;
  out.reserve(vertex_count(n));
  for (const Bracketing& b : enumerate_bracketings(n, limits)) {
    out.push_back(to_nested(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NestedSet> faces(int n, int dim, const EnumerationLimits& limits) {
  check_enumeration(n, limits);
  if (dim < 0 || dim > n) {
    throw std::invalid_argument("face dimension " + std::to_string(dim) + " outside 0.." +
                                std::to_string(n));
  }
  const int card = n - dim;
  std::set<NestedSet> found;
  for (const NestedSet& v : enumerate_vertices(n, limits)) {
    const auto& cs = v.chains();
    // Walk all card-subsets of the n chains via a selection mask.
    std::vector<bool> pick(cs.size(), false);
    std::fill(pick.begin(), pick.begin() + card, true);
    do {
      std::vector<Chain> sub;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (pick[i]) sub.push_back(cs[i]);
      }
      found.insert(NestedSet(std::move(sub)));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return {found.begin(), found.end()};
}

std::vector<NestedSet> faces_by_cliques(int n, int dim, const EnumerationLimits& limits) {
  check_enumeration(n, limits);
  if (dim < 0 || dim > n) {
    throw std::invalid_argument("face dimension " + std::to_string(dim) + " outside 0.." +
                                std::to_string(n));
  }
  const std::size_t card = static_cast<std::size_t>(n - dim);
  const std::vector<Chain> b1 = enumerate_b1(n);
  const std::size_t m = b1.size();
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      adj[i][j] = adj[j][i] = compatible(b1[i], b1[j]);
    }
  }
  std::vector<NestedSet> out;
  std::vector<std::size_t> clique;
  auto grow = [&](auto&& self, std::size_t start) -> void {
    if (clique.size() == card) {
      std::vector<Chain> chains;
      for (std::size_t i : clique) chains.push_back(b1[i]);
      out.emplace_back(std::move(chains));
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      if (std::all_of(clique.begin(), clique.end(), [&](std::size_t j) { return adj[i][j]; })) {
        clique.push_back(i);
        self(self, i + 1);
        clique.pop_back();
      }
    }
  };
  grow(grow, 0);
  std::sort(out.begin(), out.end());
  return out;
}

int superficial_count(const NestedSet& face, const Chain& a) {
  if (!face.contains(a)) {
    throw std::invalid_argument("chain " + a.to_string() + " is not a member of the face");
  }
  const auto sa = a.sets();
  std::vector<bool> covered(sa.size(), false);
  for (const Chain& b : face) {
    if (b == a) continue;
    const auto sb = b.sets();
    if (!sets_included(sb, sa)) continue;
    for (std::size_t i = 0; i < sa.size(); ++i) {
      if (std::find(sb.begin(), sb.end(), sa[i]) != sb.end()) covered[i] = true;
    }
  }
  return static_cast<int>(std::count(covered.begin(), covered.end(), false));
}

std::vector<Chain> full_chains(const NestedSet& s, int n) {
  std::vector<Chain> out;
  for (const Chain& c : s) {
    if (c.depth() == n) out.push_back(c);
  }
  return out;
}

std::uint64_t catalan(int n) {
  if (n < 0 || n > 33) {
    throw std::invalid_argument("catalan: n out of range");
  }
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) {
    c = c * 2 * (2 * static_cast<std::uint64_t>(i) + 1) / (static_cast<std::uint64_t>(i) + 2);
  }
  return c;
}

std::uint64_t vertex_count(int n) {
  if (n < 0 || n > 16) {
    throw std::invalid_argument("vertex_count: n out of range");
  }
  std::uint64_t v = 1;
  for (int i = n + 1; i <= 2 * n; ++i) v *= static_cast<std::uint64_t>(i);
  return v;
}

}  // namespace pa
