#include "gtkit/braid.hpp"

#include "gtkit/error.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace gtkit {

BraidWord::BraidWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
  if (n < 2) throw DomainError("braid group needs at least 2 strands");
  for (int x : letters_)
    if (x == 0 || std::abs(x) >= n)
      throw DomainError("braid letter " + std::to_string(x) + " outside B_" + std::to_string(n));
}

BraidWord BraidWord::sigma(int n, int i, int sign) { return BraidWord(n, {sign < 0 ? -i : i}); }

BraidWord BraidWord::inverse() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(-*it);
  return BraidWord(n_, std::move(out));
}

BraidWord BraidWord::pow(int exponent) const {
  BraidWord base = exponent < 0 ? inverse() : *this;
  BraidWord out(n_, {});
  for (int k = 0; k < std::abs(exponent); ++k) out = out * base;
  return out;
}

std::string BraidWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (int x : letters_) {
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(std::abs(x));
    if (x < 0) out += "^-1";
  }
  return out;
}

BraidWord operator*(const BraidWord& u, const BraidWord& v) {
  if (u.n_ != v.n_) throw DimensionMismatch("braid words on different strand counts");
  std::vector<int> out = u.letters_;
  out.insert(out.end(), v.letters_.begin(), v.letters_.end());
  return BraidWord(u.n_, std::move(out));
}

BraidWord delta_word(int n) {
  std::vector<int> out;
  for (int top = n - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i) out.push_back(i);
  return BraidWord(n, std::move(out));
}

BraidWord full_twist_word(int n) {
  std::vector<int> row;
  for (int i = 1; i < n; ++i) row.push_back(i);
  return BraidWord(n, row).pow(n);
}

BraidWord pure_gen(int p, int q, int n) {
  if (!(1 <= p && p < q && q <= n))
    throw DomainError("A_pq needs 1 <= p < q <= n (got p=" + std::to_string(p) +
                      ", q=" + std::to_string(q) + ", n=" + std::to_string(n) + ")");
  std::vector<int> out;
  for (int j = q - 1; j > p; --j) out.push_back(j);
  out.push_back(p);
  out.push_back(p);
  for (int j = p + 1; j < q; ++j) out.push_back(-j);
  return BraidWord(n, std::move(out));
}

namespace {

BraidWord ell_word(int i) {
  switch (i) {
    case 2: return BraidWord(4, {1, 1, 2, 3, 3, 2});
    case 3: return BraidWord(4, {2, 1, 1, 2, 3, 3});
    case 4: return BraidWord(4, {3, 2, 1, 1, 2, 3});
    default: throw DomainError("l_i is defined for i = 2, 3, 4");
  }
}

int parse_int(const std::string& s, const std::string& tok) {
  int v = 0;
  std::string t = s;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw ParseError("bad number in braid token '" + tok + "'");
  return v;
}

}  // namespace

BraidWord parse_braid(std::string_view text, int n) {
  if (n < 2 || n > kMaxStrands) throw DomainError("strand count must be in 2..6");
  BraidWord out(n, {});
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    std::string name = tok;
    int exponent = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      exponent = parse_int(tok.substr(caret + 1), tok);
    }
    BraidWord piece(n, {});
    try {
      if (name == "Delta" || name == "D") {
        piece = delta_word(n);
      } else if (name == "center") {
        piece = full_twist_word(n);
      } else if (name.size() == 3 && name[0] == 'A') {
        piece = pure_gen(name[1] - '0', name[2] - '0', n);
      } else if (name.size() == 2 && name[0] == 'l') {
        if (n != 4) throw ParseError("l2, l3, l4 are only defined in B_4");
        piece = ell_word(name[1] - '0');
      } else if (name.size() >= 2 && (name[0] == 's' || name[0] == 'S')) {
        int i = parse_int(name.substr(1), tok);
        piece = BraidWord::sigma(n, i, name[0] == 'S' ? -1 : 1);
      } else {
        throw ParseError("unknown braid token '" + tok + "'");
      }
    } catch (const DomainError& e) {
      throw ParseError(std::string("braid token '") + tok + "': " + e.what());
    }
    out = out * piece.pow(exponent);
  }
  return out;
}

Permutation braid_perm(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands());
  for (int x : w.letters())
    p = p * Permutation::transposition(w.strands(), std::abs(x), std::abs(x) + 1);
  return p;
}

BraidWord delete_strand(const BraidWord& w, int i) {
  const int n = w.strands();
  if (i < 1 || i > n) throw DomainError("strand index out of range");
  if (n < 3) throw DomainError("strand deletion needs at least 3 strands");
  if (!braid_perm(w).is_identity()) throw NotPure("delete_strand: braid is not pure");
  int pos = i;
  std::vector<int> out;
  for (int x : w.letters()) {
    const int j = std::abs(x);
    const int sign = x > 0 ? 1 : -1;
    if (pos == j) {
      pos = j + 1;
    } else if (pos == j + 1) {
      pos = j;
    } else if (j + 1 < pos) {
      out.push_back(sign * j);
    } else {
      out.push_back(sign * (j - 1));
    }
  }
  return BraidWord(n - 1, std::move(out));
}

BraidWord cardano_ferrari(const BraidWord& w) {
  if (w.strands() != 4) throw DimensionMismatch("Cardano-Ferrari map is defined on B_4");
  std::vector<int> out;
  for (int x : w.letters()) {
    const int j = std::abs(x);
    out.push_back((j == 3 ? 1 : j) * (x > 0 ? 1 : -1));
  }
  return BraidWord(3, std::move(out));
}

// ---------------------------------------------------------------------------
// Conjugation action on <a, b>

namespace {

FreeHom f2_hom(const char* a_image, const char* b_image) {
  Alphabet ab(2);
  return FreeHom(2, 2, {ab.parse(a_image), ab.parse(b_image)});
}

}  // namespace

FreeHom generator_action(int i, int sign) {
  if (i < 1 || i > 3) throw DomainError("B_4 generator index must be 1, 2 or 3");
  if (sign > 0) {
    switch (i) {
      case 1: return f2_hom("a", "b a^-1");
      case 2: return f2_hom("b", "b a^-1 b");
      default: return f2_hom("a", "a^-1 b");
    }
  }
  switch (i) {
    case 1: return f2_hom("a", "b a");
    case 2: return f2_hom("a b^-1 a", "a");
    default: return f2_hom("a", "a b");
  }
}

ConjugationTable conjugation_table() {
  ConjugationTable t;
  for (int i = 1; i <= 3; ++i) {
    t.rows.push_back(generator_action(i, 1));
    t.rows.push_back(generator_action(i, -1));
  }
  return t;
}

FreeHom braid_action(const BraidWord& w) {
  if (w.strands() != 4) throw DimensionMismatch("conjugation action is defined for B_4");
  FreeHom f = FreeHom::identity(2);
  for (int x : w.letters()) f = compose(f, generator_action(std::abs(x), x > 0 ? 1 : -1));
  return f;
}

Automorphism braid_automorphism(const BraidWord& w) {
  return {braid_action(w), braid_action(w.inverse())};
}

BraidWord free_generator_braid(int generator) {
  if (generator == 1) return BraidWord(4, {1, -3});
  if (generator == 2) return BraidWord(4, {2, 1, -3, -2});
  throw DomainError("free generator index must be 1 (a) or 2 (b)");
}

BraidWord expand_free_word(const Word& w) {
  if (w.rank() != 2) throw DimensionMismatch("expand_free_word expects a word in a, b");
  BraidWord out(4, {});
  for (Letter x : w.letters()) {
    BraidWord g = free_generator_braid(std::abs(x));
    out = out * (x > 0 ? g : g.inverse());
  }
  return out;
}

bool verify_table_entry(int i, int sign, int generator, const ConjugationTable& table) {
  BraidWord s = BraidWord::sigma(4, i, sign);
  BraidWord lhs = s * free_generator_braid(generator) * s.inverse();
  BraidWord rhs = expand_free_word(table.at(i, sign).image(generator));
  return braid_equal(lhs, rhs);
}

bool verify_table_row(int i, int sign, const ConjugationTable& table) {
  return verify_table_entry(i, sign, 1, table) && verify_table_entry(i, sign, 2, table);
}

bool verify_table_row(int i, int sign) { return verify_table_row(i, sign, conjugation_table()); }

}  // namespace gtkit
