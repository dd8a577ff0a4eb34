#include "lwg/root_system.hpp"

#include "lwg/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

namespace lwg {

namespace {

// Gram matrix of the simple roots for one simple type (Bourbaki numbering).
Mat simple_gram(char letter, int n) {
  Mat g(n, n);
  auto chain = [&](int len) {
    for (int i = 0; i < len; ++i) g(i, i) = 2;
    for (int i = 0; i + 1 < len; ++i) g(i, i + 1) = g(i + 1, i) = -1;
  };
  switch (letter) {
    case 'A':
      if (n < 1) break;
      chain(n);
      return g;
    case 'B':
      if (n < 2) break;
      chain(n);
      g(n - 1, n - 1) = 1;
      return g;
    case 'C':
      if (n < 2) break;
      chain(n);
      g(n - 1, n - 1) = 4;
      g(n - 2, n - 1) = g(n - 1, n - 2) = -2;
      return g;
    case 'D':
      if (n < 3) break;
      chain(n - 1);
      g(n - 1, n - 1) = 2;
      g(n - 3, n - 1) = g(n - 1, n - 3) = -1;
      return g;
    case 'E': {
      if (n < 6 || n > 8) break;
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      auto edge = [&](int a, int b) { g(a - 1, b - 1) = g(b - 1, a - 1) = -1; };
      edge(1, 3);
      edge(2, 4);
      for (int i = 3; i < n; ++i) edge(i, i + 1);
      return g;
    }
    case 'F':
      if (n != 4) break;
      chain(4);
      g(2, 2) = g(3, 3) = 1;
      g(2, 3) = g(3, 2) = Rational(-1, 2);
      return g;
    case 'G':
      if (n != 2) break;
      g(0, 0) = 2;
      g(1, 1) = 6;
      g(0, 1) = g(1, 0) = -3;
      return g;
    default:
      break;
  }
  throw ParseError(std::string("unknown Cartan type ") + letter + std::to_string(n));
}

}  // namespace

IntMat cartan_matrix_from_type(const std::string& type) {
  std::vector<std::pair<char, int>> parts;
  std::size_t i = 0;
  while (i < type.size()) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(type[i])));
    if (c == 'X' || c == '+' || c == '*' || c == ' ') {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) throw ParseError("bad Cartan type '" + type + "'");
    std::size_t j = i + 1;
    while (j < type.size() && std::isdigit(static_cast<unsigned char>(type[j]))) ++j;
    if (j == i + 1) throw ParseError("missing rank in Cartan type '" + type + "'");
    parts.emplace_back(c, std::stoi(type.substr(i + 1, j - i - 1)));
    i = j;
  }
  if (parts.empty()) throw ParseError("empty Cartan type");
  std::size_t total = 0;
  for (auto& p : parts) total += p.second;
  IntMat a(total, IntVec(total, 0));
  std::size_t off = 0;
  for (auto& [letter, n] : parts) {
    Mat g = simple_gram(letter, n);
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s) {
        Rational v = 2 * g(r, s) / g(r, r);
        a[off + r][off + s] = v.get_num().get_si();
      }
    off += n;
  }
  return a;
}

RootSystem::RootSystem(IntMat cartan) : cartan_(std::move(cartan)) {
  const std::size_t r = cartan_.size();
  for (const auto& row : cartan_)
    if (row.size() != r) throw ParseError("Cartan matrix is not square");
  for (std::size_t i = 0; i < r; ++i) {
    if (cartan_[i][i] != 2) throw ParseError("Cartan matrix diagonal must be 2");
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      if (cartan_[i][j] > 0) throw ParseError("Cartan matrix has a positive off-diagonal entry");
      if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
        throw ParseError("Cartan matrix zero pattern is not symmetric");
    }
  }

  // symmetrize: d_i A_ij = d_j A_ji
  d_ = Vec(r, Rational(0));
  for (std::size_t s = 0; s < r; ++s) {
    if (sgn(d_[s]) != 0) continue;
    std::vector<std::size_t> comp{s};
    d_[s] = 1;
    std::deque<std::size_t> q{s};
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop_front();
      for (std::size_t j = 0; j < r; ++j) {
        if (j == i || cartan_[i][j] == 0 || sgn(d_[j]) != 0) continue;
        d_[j] = d_[i] * cartan_[i][j] / Rational(cartan_[j][i]);
        comp.push_back(j);
        q.push_back(j);
      }
    }
    Rational mn = d_[s];
    for (auto c : comp) mn = std::min(mn, d_[c]);
    for (auto c : comp) d_[c] = d_[c] * 2 / mn;
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (d_[i] * cartan_[i][j] != d_[j] * cartan_[j][i])
        throw ParseError("Cartan matrix is not symmetrizable");

  // positive definiteness of the symmetrized form
  Mat g(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) g(i, j) = d_[i] * cartan_[i][j] / 2;
  for (std::size_t k = 0; k < r; ++k) {
    if (sgn(g(k, k)) <= 0) throw ParseError("Cartan matrix is not of finite type");
    for (std::size_t i = k + 1; i < r; ++i) {
      Rational f = g(i, k) / g(k, k);
      for (std::size_t j = k; j < r; ++j) g(i, j) -= f * g(k, j);
    }
  }

  // positive roots by height via root strings
  std::vector<std::vector<IntVec>> by_height;
  std::map<IntVec, bool> known;
  by_height.emplace_back();
  for (std::size_t i = 0; i < r; ++i) {
    IntVec e(r, 0);
    e[i] = 1;
    by_height[0].push_back(e);
    known[e] = true;
  }
  const std::size_t cap = 20000;
  while (!by_height.back().empty()) {
    std::vector<IntVec> next;
    for (const auto& beta : by_height.back()) {
      for (std::size_t i = 0; i < r; ++i) {
        long p = 0;
        IntVec cur = beta;
        while (true) {
          cur[i] -= 1;
          if (known.count(cur)) ++p;
          else break;
        }
        long q = p - pairing(beta, i);
        if (q < 1) continue;
        IntVec up = beta;
        up[i] += 1;
        if (!known.count(up)) {
          known[up] = true;
          next.push_back(up);
        }
      }
    }
    std::sort(next.begin(), next.end());
    by_height.push_back(std::move(next));
    if (known.size() > cap) throw ParseError("Cartan matrix is not of finite type");
  }
  for (auto& level : by_height) {
    std::sort(level.begin(), level.end(), std::greater<>());
    for (auto& b : level) positive_.push_back(b);
  }
  roots_ = positive_;
  for (const auto& b : positive_) {
    IntVec m = b;
    for (auto& x : m) x = -x;
    roots_.push_back(m);
  }
  for (std::size_t k = 0; k < roots_.size(); ++k) lookup_[roots_[k]] = k;
}

std::optional<std::size_t> RootSystem::index(const IntVec& r) const {
  auto it = lookup_.find(r);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootSystem::negative_of(std::size_t i) const {
  std::size_t p = positive_.size();
  return i < p ? i + p : i - p;
}

Rational RootSystem::inner(const IntVec& a, const IntVec& b) const {
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j)
      if (b[j] != 0 && cartan_[i][j] != 0) s += Rational(a[i] * b[j] * cartan_[i][j]) * d_[i] / 2;
  }
  return s;
}

long RootSystem::pairing(const IntVec& beta, std::size_t i) const {
  long s = 0;
  for (std::size_t j = 0; j < rank(); ++j) s += beta[j] * cartan_[i][j];
  return s;
}

long RootSystem::height(const IntVec& r) {
  long h = 0;
  for (long x : r) h += x;
  return h;
}

Vec RootSystem::coroot(const IntVec& alpha) const {
  Rational len = inner(alpha, alpha);
  Vec c(rank());
  for (std::size_t j = 0; j < rank(); ++j) c[j] = Rational(alpha[j]) * d_[j] / len;
  return c;
}

}  // namespace lwg
