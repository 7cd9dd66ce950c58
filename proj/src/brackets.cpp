#include "pa/brackets.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace pa {

// ---------------------------------------------------------------------------
// Bracketing
// ---------------------------------------------------------------------------

namespace {

// Left child of `iv` in a preorder-sorted bracket list: the widest bracket
// sharing iv's left end, or the single leaf at iv.lo.
Interval left_child(const std::vector<Interval>& sorted, const Interval& iv) {
  auto it = std::upper_bound(sorted.begin(), sorted.end(), iv, PreorderLess{});
  if (it != sorted.end() && it->lo == iv.lo && it->hi < iv.hi) {
    return *it;
  }
  return Interval{iv.lo, iv.lo};
}

bool contains_bracket(const std::vector<Interval>& sorted, const Interval& iv) {
  return std::binary_search(sorted.begin(), sorted.end(), iv, PreorderLess{});
}

}  // namespace

Bracketing Bracketing::make(std::vector<Label> perm, std::vector<Interval> brackets) {
  std::sort(brackets.begin(), brackets.end(), PreorderLess{});
  Bracketing b{std::move(perm), std::move(brackets)};
  b.validate();
  return b;
}

void Bracketing::validate() const {
  const int size = n();
  if (size < 1) {
    throw std::invalid_argument("a bracketing needs at least two leaves");
  }
  check_dimension(size);
  std::vector<bool> seen(perm.size(), false);
  for (Label x : perm) {
    if (x < 0 || x > size || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("leaf labels are not a permutation of 0.." + std::to_string(size));
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
  if (brackets.size() != static_cast<std::size_t>(size)) {
    throw std::invalid_argument("expected " + std::to_string(size) + " bracket pairs, got " +
                                std::to_string(brackets.size()));
  }
  if (!std::is_sorted(brackets.begin(), brackets.end(), PreorderLess{}) ||
      std::adjacent_find(brackets.begin(), brackets.end()) != brackets.end()) {
    throw std::invalid_argument("bracket list not in canonical order");
  }
  if (!(brackets.front() == Interval{0, size})) {
    throw std::invalid_argument("missing the outermost bracket pair");
  }
  std::size_t reached = 0;
  std::vector<Interval> stack{brackets.front()};
  while (!stack.empty()) {
    const Interval iv = stack.back();
    stack.pop_back();
    if (iv.width() == 1) continue;
    if (!contains_bracket(brackets, iv)) {
      throw std::invalid_argument("bracket tree is not a full binary tree");
    }
    ++reached;
    const Interval left = left_child(brackets, iv);
    stack.push_back(left);
    stack.push_back(Interval{left.hi + 1, iv.hi});
  }
  if (reached != brackets.size()) {
    throw std::invalid_argument("bracket tree is not a full binary tree");
  }
}

bool Bracketing::has_bracket(const Interval& iv) const {
  return contains_bracket(brackets, iv);
}

int Bracketing::split(const Interval& iv) const {
  return left_child(brackets, iv).hi + 1;
}

std::optional<Interval> Bracketing::parent(const Interval& iv) const {
  std::optional<Interval> best;
  for (const Interval& cand : brackets) {
    if (cand == iv || !cand.contains(iv)) continue;
    if (!best || cand.width() < best->width()) best = cand;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

std::vector<std::vector<Interval>> full_binary_trees(int leaves) {
  if (leaves < 1) {
    throw std::invalid_argument("a tree needs at least one leaf");
  }
  // trees[w] holds the trees over leaves 0..w-1.
  std::vector<std::vector<std::vector<Interval>>> trees(static_cast<std::size_t>(leaves) + 1);
  trees[1] = {{}};
  for (int w = 2; w <= leaves; ++w) {
    for (int left = 1; left < w; ++left) {
      for (const auto& lt : trees[static_cast<std::size_t>(left)]) {
        for (const auto& rt : trees[static_cast<std::size_t>(w - left)]) {
          std::vector<Interval> t{{0, w - 1}};
          t.insert(t.end(), lt.begin(), lt.end());
          for (const Interval& iv : rt) t.push_back({iv.lo + left, iv.hi + left});
          trees[static_cast<std::size_t>(w)].push_back(std::move(t));
        }
      }
    }
  }
  return trees[static_cast<std::size_t>(leaves)];
}

std::vector<Bracketing> enumerate_bracketings(int n, const EnumerationLimits& limits) {
  check_enumeration(n, limits);
  const auto trees = full_binary_trees(n + 1);
  std::vector<Label> perm(static_cast<std::size_t>(n) + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Bracketing> out;
  out.reserve(vertex_count(n));
  do {
    for (const auto& t : trees) out.push_back(Bracketing{perm, t});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Parsing and printing
// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n) : text_(text), n_(n), seen_(static_cast<std::size_t>(n) + 1, false) {}

  Bracketing run() {
    skip_ws();
    if (at_end()) fail("empty input");
    Interval whole = expr();
    skip_ws();
    if (!at_end() && at_operator()) {
      consume_operator();
      const Interval right = expr();
      whole = Interval{whole.lo, right.hi};
      brackets_.push_back(whole);
      skip_ws();
      if (!at_end() && at_operator()) fail("non-binary product: add brackets");
    }
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    if (perm_.size() != static_cast<std::size_t>(n_) + 1) {
      for (int x = 0; x <= n_; ++x) {
        if (!seen_[static_cast<std::size_t>(x)]) fail("missing leaf " + std::to_string(x));
      }
    }
    std::sort(brackets_.begin(), brackets_.end(), PreorderLess{});
    Bracketing b{std::move(perm_), std::move(brackets_)};
    b.validate();
    return b;
  }

 private:
  Interval expr() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      const Interval left = expr();
      skip_ws();
      if (at_end() || !at_operator()) fail("expected '*' or '·'");
      consume_operator();
      const Interval right = expr();
      skip_ws();
      if (!at_end() && at_operator()) fail("non-binary product: add brackets");
      if (at_end() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      const Interval iv{left.lo, right.hi};
      brackets_.push_back(iv);
      return iv;
    }
    if (c >= '0' && c <= '9') return leaf();
    fail(std::string("expected integer or '(', found '") + c + "'");
  }

  Interval leaf() {
    const std::size_t start = pos_;
    long value = 0;
    while (!at_end() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + (text_[pos_] - '0');
      if (value > n_) {
        pos_ = start;
        fail("leaf out of range 0.." + std::to_string(n_));
      }
      ++pos_;
    }
    const auto x = static_cast<std::size_t>(value);
    if (seen_[x]) {
      pos_ = start;
      fail("repeated leaf " + std::to_string(value));
    }
    seen_[x] = true;
    const int position = static_cast<int>(perm_.size());
    perm_.push_back(static_cast<Label>(value));
    return Interval{position, position};
  }

  bool at_end() const { return pos_ >= text_.size(); }

  bool at_operator() const {
    return text_[pos_] == '*' || text_.substr(pos_, 2) == "·";
  }

  void consume_operator() { pos_ += text_[pos_] == '*' ? 1 : 2; }

  void skip_ws() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                         text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
  std::vector<bool> seen_;
  std::vector<Label> perm_;
  std::vector<Interval> brackets_;
};

void print_into(const Bracketing& b, const Interval& iv, std::string& out) {
  if (iv.width() == 1) {
    out += std::to_string(b.perm[static_cast<std::size_t>(iv.lo)]);
    return;
  }
  const int s = b.split(iv);
  out += '(';
  print_into(b, Interval{iv.lo, s - 1}, out);
  out += '*';
  print_into(b, Interval{s, iv.hi}, out);
  out += ')';
}

}  // namespace

Bracketing parse_bracketing(std::string_view text, int n) {
  check_dimension(n);
  return Parser(text, n).run();
}

std::string print_bracketing(const Bracketing& b) {
  std::string out;
  print_into(b, Interval{0, b.n()}, out);
  return out;
}

// ---------------------------------------------------------------------------
// Nested-set correspondence
// ---------------------------------------------------------------------------

NestedSet to_nested(const Bracketing& b) {
  const auto& p = b.perm;
  const auto n = static_cast<std::size_t>(b.n());
  std::vector<Chain> chains;
  chains.reserve(n);
  for (const Interval& iv : b.brackets) {
    Chain c;
    for (std::size_t j = static_cast<std::size_t>(iv.hi); j <= n; ++j) c.core = c.core.with(p[j]);
    for (int j = iv.lo + 1; j < iv.hi; ++j) c.ext.push_back(p[static_cast<std::size_t>(j)]);
    chains.push_back(std::move(c));
  }
  return NestedSet(std::move(chains));
}

Bracketing from_nested(const NestedSet& v, int n) {
  check_dimension(n);
  if (v.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("a 0-face has exactly " + std::to_string(n) + " chains, got " +
                                std::to_string(v.size()));
  }
  if (!is_nested(v, n)) {
    throw std::invalid_argument("chains are not 1-nested");
  }
  const auto full = full_chains(v, n);
  if (full.size() != 1) {
    throw std::invalid_argument("expected exactly one maximal 0-nested set");
  }
  const Chain& m = full.front();
  std::vector<Label> perm(static_cast<std::size_t>(n) + 1);
  const LabelSet rest = LabelSet::ground(n) - m.top();
  perm[0] = rest.labels().front();
  for (std::size_t j = 0; j < m.ext.size(); ++j) perm[j + 1] = m.ext[j];
  perm[static_cast<std::size_t>(n)] = m.core.labels().front();

  // M_j = {i_j, ..., i_n}; a chain {M_p, ..., M_q} is the bracket over leaves p-1..q.
  std::vector<Interval> brackets;
  for (const Chain& c : v) {
    const int p = n + 1 - c.top().size();
    const int q = n + 1 - c.core.size();
    LabelSet suffix;
    for (int j = n; j >= q; --j) suffix = suffix.with(perm[static_cast<std::size_t>(j)]);
    bool inside = suffix == c.core && q - p == static_cast<int>(c.ext.size());
    for (int j = p; inside && j < q; ++j) {
      inside = c.ext[static_cast<std::size_t>(j - p)] == perm[static_cast<std::size_t>(j)];
    }
    if (!inside) {
      throw std::invalid_argument("chain " + c.to_string() + " is not derived from " + m.to_string());
    }
    brackets.push_back(Interval{p - 1, q});
  }
  return Bracketing::make(std::move(perm), std::move(brackets));
}

// ---------------------------------------------------------------------------
// Moves
// ---------------------------------------------------------------------------

std::vector<Bracketing> alpha_neighbors(const Bracketing& b) {
  std::vector<Bracketing> out;
  for (const Interval& x : b.brackets) {
    const auto p = b.parent(x);
    if (!p) continue;
    const int s = b.split(x);
    // Removing x leaves three consecutive factors under p; the other
    // completion brackets the outer two of them.
    const Interval replacement = x.lo == p->lo ? Interval{s, p->hi} : Interval{p->lo, s - 1};
    std::vector<Interval> next;
    for (const Interval& y : b.brackets) next.push_back(y == x ? replacement : y);
    out.push_back(Bracketing::make(b.perm, std::move(next)));
  }
  return out;
}

Bracketing sigma_neighbor(const Bracketing& b) {
  Bracketing out = b;
  const int s = b.split(Interval{0, b.n()});
  std::swap(out.perm[static_cast<std::size_t>(s - 1)], out.perm[static_cast<std::size_t>(s)]);
  return out;
}

bool chain_incident(const Bracketing& b, const Chain& c) {
  const int n = b.n();
  c.validate(n);
  const LabelSet first = LabelSet::ground(n) - c.top();
  for (const Interval& iv : b.brackets) {
    LabelSet head;
    for (int j = 0; j <= iv.lo; ++j) head = head.with(b.perm[static_cast<std::size_t>(j)]);
    if (head != first) continue;
    LabelSet tail;
    for (int j = iv.hi; j <= n; ++j) tail = tail.with(b.perm[static_cast<std::size_t>(j)]);
    if (tail != c.core) continue;
    std::vector<Label> middle(b.perm.begin() + iv.lo + 1, b.perm.begin() + iv.hi);
    if (middle == c.ext) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Rewrite graph
// ---------------------------------------------------------------------------

std::string to_string(EdgeKind kind) {
  return kind == EdgeKind::Alpha ? "alpha" : "sigma";
}

std::optional<std::size_t> RewriteGraph::index_of(const Bracketing& b) const {
  const std::string key = print_bracketing(b);
  auto it = std::lower_bound(vertices.begin(), vertices.end(), key,
                             [](const Bracketing& v, const std::string& k) {
                               return print_bracketing(v) < k;
                             });
  if (it == vertices.end() || !(*it == b)) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<std::size_t> RewriteGraph::degrees() const {
  std::vector<std::size_t> deg(vertices.size(), 0);
  for (const GraphEdge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<std::size_t> RewriteGraph::sigma_degrees() const {
  std::vector<std::size_t> deg(vertices.size(), 0);
  for (const GraphEdge& e : edges) {
    if (e.kind != EdgeKind::Sigma) continue;
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

bool RewriteGraph::is_connected() const {
  if (vertices.empty()) return true;
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (const GraphEdge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(vertices.size(), false);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!todo.empty()) {
    const std::size_t u = todo.front();
    todo.pop();
    for (std::size_t w : adj[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        todo.push(w);
      }
    }
  }
  return count == vertices.size();
}

RewriteGraph make_rewrite_graph(std::vector<Bracketing> vertices, std::vector<IndexedEdge> edges) {
  std::vector<std::string> keys;
  keys.reserve(vertices.size());
  for (const Bracketing& b : vertices) keys.push_back(print_bracketing(b));
  std::vector<std::size_t> order(vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<std::size_t> rank(vertices.size());
  RewriteGraph g;
  g.vertices.reserve(vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = i;
    g.vertices.push_back(std::move(vertices[order[i]]));
  }
  for (const IndexedEdge& e : edges) {
    const std::size_t u = rank.at(e.a);
    const std::size_t v = rank.at(e.b);
    if (u == v) throw std::logic_error("loop in rewrite graph");
    g.edges.push_back(GraphEdge{std::min(u, v), std::max(u, v), e.kind});
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const GraphEdge& a, const GraphEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v != b.v ? a.v < b.v : a.kind < b.kind;
  });
  return g;
}

RewriteGraph build_graph(int n, const EnumerationLimits& limits) {
  std::vector<Bracketing> vertices = enumerate_bracketings(n, limits);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(print_bracketing(vertices[i]), i);
  std::vector<IndexedEdge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (const Bracketing& w : alpha_neighbors(vertices[i])) {
      const std::size_t j = index.at(print_bracketing(w));
      if (i < j) edges.push_back({i, j, EdgeKind::Alpha});
    }
    const std::size_t j = index.at(print_bracketing(sigma_neighbor(vertices[i])));
    if (i < j) edges.push_back({i, j, EdgeKind::Sigma});
  }
  return make_rewrite_graph(std::move(vertices), std::move(edges));
}

}  // namespace pa
