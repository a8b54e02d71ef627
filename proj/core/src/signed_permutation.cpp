#include "annular/signed_permutation.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "annular/errors.hpp"

namespace annular {

namespace {

std::vector<int> read_entries(std::string_view text, std::size_t& pos, std::string_view close) {
  std::vector<int> out;
  while (pos < text.size() && text.substr(pos, close.size()) != close) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++pos;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) throw std::invalid_argument("bad signed cycle notation: " + std::string(text));
    pos = static_cast<std::size_t>(ptr - text.data());
    out.push_back(value);
  }
  if (pos >= text.size()) throw std::invalid_argument("unterminated signed cycle: " + std::string(text));
  pos += close.size();
  return out;
}

}  // namespace

SignedPermutation SignedPermutation::identity(int n) {
  if (n < 0 || n > kMaxDegree) throw std::invalid_argument("signed permutation degree out of range");
  SignedPermutation s;
  s.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) s.img_[i] = static_cast<std::int8_t>(i + 1);
  return s;
}

SignedPermutation SignedPermutation::from_window(std::span<const int> window) {
  const int n = static_cast<int>(window.size());
  if (n > kMaxDegree) throw std::invalid_argument("signed permutation degree out of range");
  SignedPermutation s;
  s.n_ = static_cast<std::uint8_t>(n);
  std::array<bool, kMaxDegree + 1> seen{};
  for (int i = 0; i < n; ++i) {
    int v = window[i];
    int a = std::abs(v);
    if (a < 1 || a > n || seen[a]) throw std::invalid_argument("window is not a signed bijection");
    seen[a] = true;
    s.img_[i] = static_cast<std::int8_t>(v);
  }
  return s;
}

SignedPermutation SignedPermutation::from_cycles(int n, const std::vector<BCycle>& cs) {
  std::vector<int> window(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) window[i] = i + 1;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto assign = [&](int from, int to) {
    if (from > 0) {
      window[from - 1] = to;
    } else {
      window[-from - 1] = -to;
    }
  };
  for (const auto& c : cs) {
    const auto& e = c.entries;
    if (e.empty()) throw std::invalid_argument("empty signed cycle");
    for (int a : e) {
      int m = std::abs(a);
      if (m < 1 || m > n || used[m]) throw std::invalid_argument("signed cycles overlap or leave {1..n}");
      used[m] = true;
    }
    for (std::size_t k = 0; k + 1 < e.size(); ++k) assign(e[k], e[k + 1]);
    assign(e.back(), c.is_zero() ? -e.front() : e.front());
  }
  return from_window(window);
}

SignedPermutation SignedPermutation::parse(int n, std::string_view text) {
  std::vector<BCycle> cs;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == 'e') {
      ++pos;
    } else if (c == '[') {
      ++pos;
      cs.push_back({BCycle::Kind::zero, read_entries(text, pos, "]")});
    } else if (text.substr(pos, 2) == "((") {
      pos += 2;
      cs.push_back({BCycle::Kind::paired, read_entries(text, pos, "))")});
    } else {
      throw std::invalid_argument("bad signed cycle notation: " + std::string(text));
    }
  }
  return from_cycles(n, cs);
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation r;
  r.n_ = n_;
  for (int i = 1; i <= n_; ++i) {
    int v = img_[i - 1];
    if (v > 0) {
      r.img_[v - 1] = static_cast<std::int8_t>(i);
    } else {
      r.img_[-v - 1] = static_cast<std::int8_t>(-i);
    }
  }
  return r;
}

std::vector<int> SignedPermutation::window() const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = img_[i];
  return out;
}

bool SignedPermutation::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    if (img_[i] != i + 1) return false;
  }
  return true;
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  SignedPermutation r;
  r.n_ = a.n_;
  for (int i = 0; i < a.n_; ++i) r.img_[i] = static_cast<std::int8_t>(a(b.img_[i]));
  return r;
}

std::size_t SignedPermutation::hash() const {
  std::size_t h = n_;
  for (int i = 0; i < n_; ++i) h = h * 67 + static_cast<std::size_t>(img_[i] + 32);
  return h;
}

BTransposition BTransposition::zero(int i) {
  if (i == 0) throw std::invalid_argument("eps_0 is undefined");
  return BTransposition(Kind::zero, std::abs(i), 0);
}

BTransposition BTransposition::paired(int i, int j) {
  if (i == 0 || j == 0 || std::abs(i) == std::abs(j)) {
    throw std::invalid_argument("((i j)) needs nonzero entries of distinct absolute value");
  }
  if (std::abs(i) > std::abs(j)) std::swap(i, j);
  if (i < 0) {
    i = -i;
    j = -j;
  }
  return BTransposition(Kind::paired, i, j);
}

BTransposition BTransposition::from_permutation(const SignedPermutation& s) {
  std::optional<BCycle> moved;
  for (auto& c : b_cycles(s)) {
    if (c.is_zero() || c.entries.size() > 1) {
      if (moved) throw std::invalid_argument("not a type B transposition: " + to_string(s));
      moved = std::move(c);
    }
  }
  if (!moved) throw std::invalid_argument("the identity is not a transposition");
  if (moved->is_zero() && moved->entries.size() == 1) return zero(moved->entries[0]);
  if (!moved->is_zero() && moved->entries.size() == 2) return paired(moved->entries[0], moved->entries[1]);
  throw std::invalid_argument("not a type B transposition: " + to_string(s));
}

SignedPermutation BTransposition::to_permutation(int n) const {
  SignedPermutation id = SignedPermutation::identity(n);
  std::vector<int> w = id.window();
  if (i_ > n || std::abs(j_) > n) throw std::invalid_argument("transposition outside B_n");
  if (kind_ == Kind::zero) {
    w[i_ - 1] = -i_;
  } else {
    w[i_ - 1] = j_;
    if (j_ > 0) {
      w[j_ - 1] = i_;
    } else {
      w[-j_ - 1] = -i_;
    }
  }
  return SignedPermutation::from_window(w);
}

bool BTransposition::is_connected(int p) const {
  if (kind_ == Kind::zero) return false;
  return (i_ <= p) != (std::abs(j_) <= p);
}

bool BTransposition::touches(int x) const {
  x = std::abs(x);
  return i_ == x || std::abs(j_) == x;
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  return a * b;
}

std::vector<BCycle> b_cycles(const SignedPermutation& sigma) {
  std::vector<BCycle> out;
  std::array<bool, kMaxDegree + 1> seen{};
  for (int x = 1; x <= sigma.size(); ++x) {
    if (seen[x]) continue;
    BCycle c;
    int y = x;
    do {
      c.entries.push_back(y);
      seen[std::abs(y)] = true;
      y = sigma(y);
    } while (y != x && y != -x);
    c.kind = (y == -x) ? BCycle::Kind::zero : BCycle::Kind::paired;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<BTransposition> b_transpositions(int n) {
  std::vector<BTransposition> out;
  for (int i = 1; i <= n; ++i) out.push_back(BTransposition::zero(i));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      out.push_back(BTransposition::paired(i, j));
      out.push_back(BTransposition::paired(i, -j));
    }
  }
  return out;
}

int paired_cycle_count(const SignedPermutation& sigma) {
  std::array<bool, kMaxDegree + 1> seen{};
  int count = 0;
  for (int x = 1; x <= sigma.size(); ++x) {
    if (seen[x]) continue;
    int y = x;
    do {
      seen[std::abs(y)] = true;
      y = sigma(y);
    } while (y != x && y != -x);
    if (y == x) ++count;
  }
  return count;
}

int zero_cycle_count(const SignedPermutation& sigma) {
  int count = 0;
  for (const auto& c : b_cycles(sigma)) count += c.is_zero() ? 1 : 0;
  return count;
}

int abs_length(const SignedPermutation& sigma) { return sigma.size() - paired_cycle_count(sigma); }

bool abs_leq(const SignedPermutation& pi, const SignedPermutation& sigma) {
  if (pi.size() != sigma.size()) throw std::invalid_argument("abs_leq: size mismatch");
  return abs_length(sigma) == abs_length(pi) + abs_length(pi.inverse() * sigma);
}

SignedPermutation plus_map(const SignedPermutation& sigma) {
  std::vector<int> w = sigma.window();
  for (int& v : w) v = std::abs(v);
  return SignedPermutation::from_window(w);
}

Permutation abs_map(const SignedPermutation& sigma) {
  std::vector<int> w = sigma.window();
  for (int& v : w) v = std::abs(v);
  return Permutation::from_images(w);
}

BTransposition bar(const BTransposition& t) {
  if (t.is_zero()) throw DomainError("bar is only defined on paired transpositions");
  return BTransposition::paired(t.first(), -t.second());
}

bool is_connected(const BCycle& cycle, int p) {
  if (cycle.is_zero()) return false;
  bool outer = false;
  bool inner = false;
  for (int a : cycle.entries) (std::abs(a) <= p ? outer : inner) = true;
  return outer && inner;
}

int connectivity(const SignedPermutation& sigma, int p) {
  int count = 0;
  for (const auto& c : b_cycles(sigma)) count += is_connected(c, p) ? 1 : 0;
  return count;
}

SignedPermutation gamma_pq(int p, int q) {
  std::vector<BCycle> cs(2);
  cs[0].kind = cs[1].kind = BCycle::Kind::zero;
  for (int i = 1; i <= p; ++i) cs[0].entries.push_back(i);
  for (int i = p + 1; i <= p + q; ++i) cs[1].entries.push_back(i);
  if (q == 0) cs.pop_back();
  return SignedPermutation::from_cycles(p + q, cs);
}

SignedPermutation beta_pq(int p, int q) {
  std::vector<BCycle> cs(2);
  for (int i = 1; i <= p; ++i) cs[0].entries.push_back(i);
  for (int i = p + 1; i <= p + q; ++i) cs[1].entries.push_back(i);
  if (q == 0) cs.pop_back();
  return SignedPermutation::from_cycles(p + q, cs);
}

std::string to_string(const BCycle& c) {
  std::ostringstream os;
  os << (c.is_zero() ? "[" : "((");
  for (std::size_t k = 0; k < c.entries.size(); ++k) os << (k ? " " : "") << c.entries[k];
  os << (c.is_zero() ? "]" : "))");
  return os.str();
}

std::string to_string(const SignedPermutation& sigma) {
  std::string s;
  for (const auto& c : b_cycles(sigma)) {
    if (!c.is_zero() && c.entries.size() == 1) continue;
    s += to_string(c);
  }
  return s.empty() ? "e" : s;
}

std::string to_string(const BTransposition& t) {
  if (t.is_zero()) return "[" + std::to_string(t.first()) + "]";
  return "((" + std::to_string(t.first()) + " " + std::to_string(t.second()) + "))";
}

}  // namespace annular
