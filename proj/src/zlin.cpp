#include "gtkit/zlin.hpp"

#include "gtkit/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace gtkit {

namespace mp = boost::multiprecision;

std::string AbelianStructure::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.emplace_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (std::size_t i = 0; i < torsion.size();) {
    std::size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    std::string part = "Z_" + torsion[i].str();
    if (j - i > 1) part += "^" + std::to_string(j - i);
    parts.push_back(part);
    i = j;
  }
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) out += " x " + parts[k];
  return out;
}

namespace {

// Floor division keeps remainders in [0, |b|) for the pivot reduction.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithDecomposition s{a, IntMatrix::identity(m), IntMatrix::identity(n)};
  IntMatrix& d = s.d;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest non-zero entry of the trailing block becomes the pivot.
      std::size_t pi = m, pj = n;
      BigInt best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const BigInt& x = d(i, j);
          if (x != 0 && (best == 0 || abs(x) < best)) {
            best = abs(x);
            pi = i;
            pj = j;
          }
        }
      if (pi == m) return s;  // block is zero; remaining diagonal is zero
      d.swap_rows(t, pi);
      s.u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      s.v.swap_cols(t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        BigInt q = floor_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        s.u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        BigInt q = floor_div(d(t, j), d(t, t));
        d.add_col_multiple(j, t, -q);
        s.v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            s.u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (!divides) continue;

      if (d(t, t) < 0) {
        d.negate_row(t);
        s.u.negate_row(t);
      }
      break;
    }
  }
  return s;
}

AbelianStructure cokernel(const IntMatrix& a, std::size_t cols) {
  if (a.rows() != 0 && a.cols() != cols) throw DimensionMismatch("cokernel: column count mismatch");
  if (a.rows() == 0) return {cols, {}};
  auto s = smith_normal_form(a);
  AbelianStructure out;
  std::size_t nonzero = 0;
  for (std::size_t k = 0; k < std::min(a.rows(), cols); ++k) {
    const BigInt& x = s.d(k, k);
    if (x == 0) continue;
    ++nonzero;
    if (x > 1) out.torsion.push_back(x);
  }
  out.free_rank = cols - nonzero;
  return out;
}

AbelianStructure cokernel(const IntMatrix& a) { return cokernel(a, a.cols()); }

namespace {

std::vector<IntMatrix> minus_identity(std::span<const IntMatrix> mats, std::size_t r) {
  std::vector<IntMatrix> blocks;
  const IntMatrix id = IntMatrix::identity(r);
  for (const auto& m : mats) {
    if (m.rows() != r || m.cols() != r)
      throw DimensionMismatch("expected " + std::to_string(r) + "x" + std::to_string(r) + " matrices");
    blocks.push_back(m - id);
  }
  return blocks;
}

}  // namespace

AbelianStructure coinvariants(std::span<const IntMatrix> mats, std::size_t r) {
  auto blocks = minus_identity(mats, r);
  return cokernel(vstack(blocks, r), r);
}

std::vector<std::vector<BigInt>> invariant_vectors(std::span<const IntMatrix> mats,
                                                   std::size_t r) {
  auto blocks = minus_identity(mats, r);
  // x (M^T - I) = 0  <=>  (M - I) x^T = 0, so intersect right kernels.
  std::vector<std::vector<BigInt>> basis;
  for (std::size_t k = 0; k < r; ++k) {
    std::vector<BigInt> e(r, BigInt(0));
    e[k] = 1;
    basis.push_back(std::move(e));
  }
  for (const auto& b : blocks) {
    if (basis.empty()) break;
    // Restrict b to span(basis): solve b * (basis coefficients) = 0.
    IntMatrix coords = IntMatrix::zero(r, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (std::size_t i = 0; i < r; ++i) coords(i, j) = basis[j][i];
    IntMatrix restricted = b * coords;
    auto kernel = kernel_basis(restricted);
    std::vector<std::vector<BigInt>> next;
    for (const auto& c : kernel) {
      std::vector<BigInt> v(r, BigInt(0));
      for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < r; ++i) v[i] += c[j] * basis[j][i];
      BigInt g = 0;
      for (const auto& x : v) g = mp::gcd(g, x);
      if (g > 1)
        for (auto& x : v) x /= g;
      next.push_back(std::move(v));
    }
    basis = std::move(next);
  }
  return basis;
}

std::size_t invariants_rank(std::span<const IntMatrix> mats, std::size_t r) {
  return invariant_vectors(mats, r).size();
}

// ---------------------------------------------------------------------------
// SL_2(Z)

IntMatrix sl2_S() { return IntMatrix{{0, -1}, {1, 0}}; }
IntMatrix sl2_T() { return IntMatrix{{1, 1}, {0, 1}}; }

namespace {

IntMatrix letter_matrix(const STLetter& x) {
  if (x.symbol == 's') return x.sign > 0 ? sl2_S() : IntMatrix{{0, 1}, {-1, 0}};
  if (x.symbol == 't') return x.sign > 0 ? sl2_T() : IntMatrix{{1, -1}, {0, 1}};
  throw DomainError(std::string("bad S/T symbol '") + x.symbol + "'");
}

void push_reduced(STWord& w, STLetter x) {
  if (!w.empty() && w.back().symbol == x.symbol && w.back().sign == -x.sign)
    w.pop_back();
  else
    w.push_back(x);
}

}  // namespace

IntMatrix eval_ST(const STWord& word) {
  IntMatrix m = IntMatrix::identity(2);
  for (const auto& x : word) m = m * letter_matrix(x);
  return m;
}

STWord sl2_word(const IntMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw DomainError("sl2_word: expected a 2x2 matrix");
  if (determinant(m) != 1) throw DomainError("sl2_word: determinant is not 1");

  // Right-multiply by T^k and S until the bottom row is (0, +-1):
  //   M T^k: (c, d) -> (c, d + k c);   M S: (c, d) -> (d, -c).
  IntMatrix cur = m;
  STWord reducer;
  auto right = [&](STLetter x, long long times) {
    for (long long i = 0; i < times; ++i) {
      cur = cur * letter_matrix(x);
      push_reduced(reducer, x);
    }
  };
  while (cur(1, 0) != 0) {
    const BigInt c = cur(1, 0);
    const BigInt d = cur(1, 1);
    // Choose k so that |d + k c| <= |c| / 2.
    BigInt k = -floor_div(2 * d + abs(c), 2 * abs(c));
    if (c < 0) k = -k;
    long long kk = k.convert_to<long long>();
    right(STLetter{'t', kk >= 0 ? 1 : -1}, std::llabs(kk));
    right(STLetter{'s', 1}, 1);
  }
  // Now cur = [[e, b], [0, e]] with e = +-1, i.e. cur = e T^(e b).
  const bool negative = cur(0, 0) < 0;
  long long power = (negative ? -cur(0, 1) : cur(0, 1)).convert_to<long long>();

  STWord word;
  if (negative) {
    push_reduced(word, {'s', 1});
    push_reduced(word, {'s', 1});
  }
  for (long long i = 0; i < std::llabs(power); ++i) push_reduced(word, {'t', power > 0 ? 1 : -1});
  // m = cur * reducer^-1
  for (auto it = reducer.rbegin(); it != reducer.rend(); ++it)
    push_reduced(word, {it->symbol, -it->sign});
  return word;
}

STWord parse_st_word(std::string_view text) {
  STWord w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    std::string name = tok;
    long e = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string ex = tok.substr(caret + 1);
      if (!ex.empty() && ex[0] == '+') ex.erase(0, 1);
      auto [ptr, ec] = std::from_chars(ex.data(), ex.data() + ex.size(), e);
      if (ec != std::errc() || ptr != ex.data() + ex.size() || ex.empty())
        throw ParseError("bad exponent in S/T token '" + tok + "'");
    }
    if (name.size() != 1) throw ParseError("bad S/T token '" + tok + "'");
    char sym = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
    if (sym != 's' && sym != 't') throw ParseError("bad S/T symbol '" + name + "'");
    for (long k = 0; k < std::labs(e); ++k) w.push_back({sym, e > 0 ? 1 : -1});
  }
  return w;
}

std::string to_string(const STWord& word) {
  if (word.empty()) return "1";
  std::string out;
  for (const auto& x : word) {
    if (!out.empty()) out += ' ';
    out += x.symbol;
    if (x.sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace gtkit
