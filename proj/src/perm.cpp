#include "gtkit/perm.hpp"

#include "gtkit/error.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <set>
#include <utility>

namespace gtkit {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v - 1)])
      throw DomainError("not a permutation of 1.." + std::to_string(degree()));
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(static_cast<std::size_t>(degree));
  for (int k = 0; k < degree; ++k) im[static_cast<std::size_t>(k)] = k + 1;
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int degree, int i, int j) {
  auto p = identity(degree).images_;
  std::swap(p.at(static_cast<std::size_t>(i - 1)), p.at(static_cast<std::size_t>(j - 1)));
  return Permutation(std::move(p));
}

Permutation Permutation::parse(std::string_view text, int degree) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  Permutation result = identity(degree);
  if (s.empty() || s == "id" || s == "()") return result;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') throw ParseError("cycle notation: expected '(' in '" + s + "'");
    auto close = s.find(')', pos);
    if (close == std::string::npos) throw ParseError("cycle notation: unbalanced '('");
    std::vector<int> cycle;
    std::string body = s.substr(pos + 1, close - pos - 1);
    std::size_t start = 0;
    while (start <= body.size()) {
      auto comma = body.find(',', start);
      std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("cycle notation: bad point '" + tok + "'");
      int v = std::stoi(tok);
      if (v < 1 || v > degree) throw ParseError("cycle notation: point " + tok + " outside degree");
      if (std::find(cycle.begin(), cycle.end(), v) != cycle.end())
        throw ParseError("cycle notation: repeated point " + tok);
      cycle.push_back(v);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    std::vector<int> im = identity(degree).images_;
    for (std::size_t k = 0; k < cycle.size(); ++k)
      im[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
    // Cycles are written left to right and applied in that order.
    result = compose(result, Permutation(std::move(im)));
    pos = close + 1;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (int k = 0; k < degree(); ++k)
    if (images_[static_cast<std::size_t>(k)] != k + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int k = 0; k < degree(); ++k) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(k)] - 1)] = k + 1;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (int start = 1; start <= degree(); ++start) {
    if (done[static_cast<std::size_t>(start - 1)] || (*this)(start) == start) continue;
    out += '(';
    int x = start;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(x);
      done[static_cast<std::size_t>(x - 1)] = true;
      x = (*this)(x);
      first = false;
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "id" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DimensionMismatch("permutation degrees differ");
  std::vector<int> im(static_cast<std::size_t>(p.degree()));
  for (int x = 1; x <= p.degree(); ++x) im[static_cast<std::size_t>(x - 1)] = q(p(x));
  return Permutation(std::move(im));
}

Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

namespace {

int common_degree(const std::vector<Permutation>& gens, int degree) {
  if (!gens.empty()) degree = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != degree) throw DimensionMismatch("generators have different degrees");
  if (degree > kMaxClosureDegree) throw DomainError("closure limited to degree <= 8");
  if (degree < 1) throw DomainError("degree must be positive");
  return degree;
}

}  // namespace

std::vector<Permutation> closure_bfs(const std::vector<Permutation>& gens, int degree) {
  degree = common_degree(gens, degree);
  std::vector<Permutation> order{Permutation::identity(degree)};
  std::set<Permutation> seen(order.begin(), order.end());
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (const auto& g : gens) {
      Permutation next = order[k] * g;
      if (seen.insert(next).second) order.push_back(std::move(next));
    }
  }
  return order;
}

std::vector<Permutation> closure(const std::vector<Permutation>& gens, int degree) {
  auto elems = closure_bfs(gens, degree);
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool is_normal(const std::vector<Permutation>& h, const std::vector<Permutation>& g) {
  std::set<Permutation> hs(h.begin(), h.end());
  std::set<Permutation> gs(g.begin(), g.end());
  for (const auto& x : hs)
    if (!gs.count(x)) throw DomainError("is_normal: H is not contained in G");
  for (const auto& y : gs)
    for (const auto& x : hs)
      if (!hs.count(y.inverse() * x * y)) return false;
  return true;
}

Permutation quotient_S4_S3(const Permutation& p) {
  if (p.degree() != 4) throw DimensionMismatch("quotient S4 -> S3 needs a degree-4 permutation");
  // Partition k is {1, k+2} | rest; labelled by the partner of point 1.
  auto label = [](int a, int b, int c, int d) {
    std::array<int, 4> blocks{a, b, c, d};
    int partner = 0;
    if (blocks[0] == 1) partner = blocks[1];
    else if (blocks[1] == 1) partner = blocks[0];
    else if (blocks[2] == 1) partner = blocks[3];
    else partner = blocks[2];
    return partner - 1;
  };
  const std::array<std::array<int, 4>, 3> parts{{{1, 2, 3, 4}, {1, 3, 2, 4}, {1, 4, 2, 3}}};
  std::vector<int> im(3);
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& q = parts[k];
    im[k] = label(p(q[0]), p(q[1]), p(q[2]), p(q[3]));
  }
  return Permutation(std::move(im));
}

std::function<Permutation(const Permutation&)> quotient_map_S4_S3() { return quotient_S4_S3; }

}  // namespace gtkit
