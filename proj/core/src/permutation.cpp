#include "annular/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace annular {

namespace {

void check_degree(int n) {
  if (n < 0 || n > kMaxDegree) {
    throw std::invalid_argument("permutation degree out of range: " + std::to_string(n));
  }
}

// Reads the integers of one parenthesised group starting after '('.
std::vector<int> read_group(std::string_view text, std::size_t& pos, char close) {
  std::vector<int> out;
  while (pos < text.size() && text[pos] != close) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++pos;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) {
      throw std::invalid_argument("bad cycle notation: " + std::string(text));
    }
    pos = static_cast<std::size_t>(ptr - text.data());
    out.push_back(value);
  }
  if (pos >= text.size()) throw std::invalid_argument("unterminated cycle: " + std::string(text));
  ++pos;
  return out;
}

}  // namespace

Permutation Permutation::identity(int n) {
  check_degree(n);
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) p.img_[i] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation Permutation::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  check_degree(n);
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < n; ++i) {
    int v = images[i];
    if (v < 1 || v > n || seen[v - 1]) {
      throw std::invalid_argument("image table is not a bijection");
    }
    seen[v - 1] = true;
    p.img_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<Cycle>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      int a = c[k];
      if (a < 1 || a > n || used[a]) throw std::invalid_argument("cycles are not disjoint on {1..n}");
      used[a] = true;
      images[a - 1] = c[(k + 1) % c.size()];
    }
  }
  return from_images(images);
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i == j) throw std::invalid_argument("transposition needs distinct points");
  return from_cycles(n, {{i, j}});
}

Permutation Permutation::parse(int n, std::string_view text) {
  std::vector<Cycle> cs;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == 'e') {
      ++pos;
    } else if (c == '(') {
      ++pos;
      cs.push_back(read_group(text, pos, ')'));
    } else {
      throw std::invalid_argument("bad cycle notation: " + std::string(text));
    }
  }
  return from_cycles(n, cs);
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = img_[i] + 1;
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  Permutation r;
  r.n_ = a.n_;
  for (int i = 0; i < a.n_; ++i) r.img_[i] = a.img_[b.img_[i]];
  return r;
}

std::size_t Permutation::hash() const {
  std::size_t h = n_;
  for (int i = 0; i < n_; ++i) h = h * 31 + img_[i];
  return h;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition needs at least one part");
  for (int x : parts_) {
    if (x < 1) throw std::invalid_argument("partition parts must be positive");
    n_ += x;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ',' || std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) throw std::invalid_argument("bad partition: " + std::string(text));
    pos = static_cast<std::size_t>(ptr - text.data());
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int part = std::min(left, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(left - part, part);
      cur.pop_back();
    }
  };
  if (n >= 1) rec(n, n);
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  return a * b;
}

Permutation canonical_cycles(const Partition& lambda) {
  std::vector<Cycle> cs;
  int next = 1;
  for (int part : lambda.parts()) {
    Cycle c(static_cast<std::size_t>(part));
    std::iota(c.begin(), c.end(), next);
    next += part;
    cs.push_back(std::move(c));
  }
  return Permutation::from_cycles(lambda.n(), cs);
}

Permutation alpha_pq(int p, int q) {
  if (p < 1 || q < 0) throw std::invalid_argument("alpha_pq needs p >= 1, q >= 0");
  Cycle outer(static_cast<std::size_t>(p));
  Cycle inner(static_cast<std::size_t>(q));
  std::iota(outer.begin(), outer.end(), 1);
  std::iota(inner.begin(), inner.end(), p + 1);
  return Permutation::from_cycles(p + q, {outer, inner});
}

std::vector<Cycle> cycles(const Permutation& p) {
  std::vector<Cycle> out;
  std::array<bool, kMaxDegree + 1> seen{};
  for (int start = 1; start <= p.size(); ++start) {
    if (seen[start]) continue;
    Cycle c;
    for (int x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

int cycle_count(const Permutation& p) {
  std::array<bool, kMaxDegree + 1> seen{};
  int count = 0;
  for (int start = 1; start <= p.size(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (int x = start; !seen[x]; x = p(x)) seen[x] = true;
  }
  return count;
}

int abs_length(const Permutation& p) { return p.size() - cycle_count(p); }

bool abs_leq(const Permutation& pi, const Permutation& sigma) {
  if (pi.size() != sigma.size()) throw std::invalid_argument("abs_leq: size mismatch");
  return abs_length(sigma) == abs_length(pi) + abs_length(pi.inverse() * sigma);
}

bool is_connected(const Permutation& p, int split) {
  for (const auto& c : cycles(p)) {
    bool low = false;
    bool high = false;
    for (int x : c) (x <= split ? low : high) = true;
    if (low && high) return true;
  }
  return false;
}

bool generates_transitively(std::span<const Permutation> perms, int n) {
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int components = n;
  for (const auto& g : perms) {
    if (g.size() != n) throw std::invalid_argument("generates_transitively: size mismatch");
    for (int i = 1; i <= n; ++i) {
      int a = find(i);
      int b = find(g(i));
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components <= 1;
}

std::vector<Permutation> transpositions(int n) {
  std::vector<Permutation> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back(Permutation::transposition(n, i, j));
  }
  return out;
}

std::string to_string(const Permutation& p) {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles(p)) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ')';
  }
  return any ? os.str() : "e";
}

}  // namespace annular
