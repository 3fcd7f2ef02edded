#include "gtkit/word.hpp"

#include "gtkit/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace gtkit {

namespace {

void reduce_into(std::vector<Letter>& out, Letter x) {
  if (!out.empty() && out.back() == -x)
    out.pop_back();
  else
    out.push_back(x);
}

void require_same_rank(const Word& u, const Word& v, const char* op) {
  if (u.rank() != v.rank())
    throw DimensionMismatch(std::string(op) + ": rank " + std::to_string(u.rank()) +
                            " vs " + std::to_string(v.rank()));
}

}  // namespace

Word::Word(int rank) : rank_(rank) {
  if (rank < 1) throw DomainError("free group rank must be positive");
}

Word::Word(int rank, std::vector<Letter> letters) : Word(rank) {
  letters_.reserve(letters.size());
  for (Letter x : letters) {
    if (x == 0 || std::abs(x) > rank)
      throw DomainError("letter " + std::to_string(x) + " outside rank " + std::to_string(rank));
    reduce_into(letters_, x);
  }
}

Word Word::generator(int rank, int index, int sign) {
  return Word(rank, {sign < 0 ? -index : index});
}

Word Word::inverse() const {
  Word w(rank_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

Word Word::pow(int exponent) const {
  Word base = exponent < 0 ? inverse() : *this;
  Word out(rank_);
  for (int k = 0; k < std::abs(exponent); ++k) out = out * base;
  return out;
}

Word Word::widen(int rank) const {
  if (rank < rank_) throw DomainError("cannot narrow a word");
  Word w(rank);
  w.letters_ = letters_;
  return w;
}

Word multiply(const Word& u, const Word& v) {
  require_same_rank(u, v, "multiply");
  std::vector<Letter> out = u.letters();
  out.reserve(u.length() + v.length());
  for (Letter x : v.letters()) reduce_into(out, x);
  return Word(u.rank(), std::move(out));
}

Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

Word commutator(const Word& u, const Word& v) { return u * v * u.inverse() * v.inverse(); }

std::vector<std::int64_t> abelianize(const Word& w) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(w.rank()), 0);
  for (Letter x : w.letters()) v[static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
  return v;
}

// ---------------------------------------------------------------------------
// Alphabet

namespace {

std::vector<std::string> default_names(int rank) {
  std::vector<std::string> names;
  for (int i = 1; i <= rank; ++i) {
    if (rank <= 26 && i == 1)
      names.emplace_back("a");
    else if (rank <= 26 && i == 2)
      names.emplace_back("b");
    else if (rank <= 26)
      names.push_back("x" + std::to_string(i));
    else
      names.push_back("g" + std::to_string(i));
  }
  return names;
}

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

Alphabet::Alphabet(int rank) : names_(default_names(rank)) {}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw DomainError("alphabet must be non-empty");
}

Word Alphabet::parse(std::string_view text) const {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    std::string name = tok;
    long exponent = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string e = tok.substr(caret + 1);
      if (!e.empty() && e[0] == '+') e.erase(0, 1);
      auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), exponent);
      if (ec != std::errc() || ptr != e.data() + e.size() || e.empty())
        throw ParseError("bad exponent in token '" + tok + "'");
    }
    int gen = 0;
    int sign = 1;
    for (int i = 0; i < rank(); ++i)
      if (names_[static_cast<std::size_t>(i)] == name) gen = i + 1;
    if (gen == 0) {
      for (int i = 0; i < rank(); ++i) {
        const auto& nm = names_[static_cast<std::size_t>(i)];
        if (upper(nm) == name && upper(nm) != nm) {
          gen = i + 1;
          sign = -1;
        }
      }
    }
    if (gen == 0 && name.size() > 1 && (name[0] == 'g' || name[0] == 'G')) {
      int idx = 0;
      auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), idx);
      if (ec == std::errc() && ptr == name.data() + name.size() && idx >= 1 && idx <= rank()) {
        gen = idx;
        sign = name[0] == 'G' ? -1 : 1;
      }
    }
    if (gen == 0) throw ParseError("unknown generator '" + name + "'");
    long total = sign * exponent;
    for (long k = 0; k < std::labs(total); ++k) letters.push_back(total > 0 ? gen : -gen);
  }
  return Word(rank(), std::move(letters));
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long run = static_cast<long>(j - i) * (ls[i] > 0 ? 1 : -1);
    const std::string& name = names_.at(static_cast<std::size_t>(std::abs(ls[i]) - 1));
    if (!out.empty()) out += ' ';
    out += name;
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

Word parse_word(std::string_view text, int rank) { return Alphabet(rank).parse(text); }

std::string to_string(const Word& w) { return Alphabet(w.rank()).format(w); }

// ---------------------------------------------------------------------------
// FreeHom

FreeHom::FreeHom(int src_rank, int dst_rank, std::vector<Word> images)
    : src_rank_(src_rank), dst_rank_(dst_rank), images_(std::move(images)) {
  if (src_rank < 1 || dst_rank < 1) throw DomainError("free group rank must be positive");
  if (static_cast<int>(images_.size()) != src_rank)
    throw DimensionMismatch("FreeHom: expected " + std::to_string(src_rank) + " images, got " +
                            std::to_string(images_.size()));
  for (const auto& w : images_)
    if (w.rank() != dst_rank) throw DimensionMismatch("FreeHom: image rank differs from dst_rank");
}

FreeHom FreeHom::identity(int rank) {
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) images.push_back(Word::generator(rank, i));
  return {rank, rank, std::move(images)};
}

Word FreeHom::operator()(const Word& w) const { return apply_hom(*this, w); }

Word apply_hom(const FreeHom& f, const Word& w) {
  if (w.rank() != f.src_rank())
    throw DimensionMismatch("apply_hom: word rank " + std::to_string(w.rank()) +
                            " vs source rank " + std::to_string(f.src_rank()));
  std::vector<Letter> out;
  for (Letter x : w.letters()) {
    const auto& img = f.images()[static_cast<std::size_t>(std::abs(x) - 1)].letters();
    if (x > 0)
      for (Letter y : img) reduce_into(out, y);
    else
      for (auto it = img.rbegin(); it != img.rend(); ++it) reduce_into(out, -*it);
  }
  return Word(f.dst_rank(), std::move(out));
}

FreeHom compose(const FreeHom& f, const FreeHom& g) {
  if (f.dst_rank() != g.src_rank()) throw DimensionMismatch("compose: rank mismatch");
  std::vector<Word> images;
  images.reserve(f.images().size());
  for (const auto& img : f.images()) images.push_back(apply_hom(g, img));
  return {f.src_rank(), g.dst_rank(), std::move(images)};
}

FreeHom compose_all(std::span<const FreeHom> homs, int rank) {
  FreeHom out = FreeHom::identity(rank);
  for (const auto& h : homs) out = compose(out, h);
  return out;
}

bool verify_automorphism(const FreeHom& f, const FreeHom& g) {
  if (f.src_rank() != f.dst_rank() || g.src_rank() != g.dst_rank() ||
      f.src_rank() != g.src_rank())
    return false;
  auto id = FreeHom::identity(f.src_rank());
  return compose(f, g) == id && compose(g, f) == id;
}

IntMatrix hom_matrix(const FreeHom& f) {
  IntMatrix m = IntMatrix::zero(static_cast<std::size_t>(f.src_rank()),
                                static_cast<std::size_t>(f.dst_rank()));
  for (int i = 0; i < f.src_rank(); ++i) {
    auto v = abelianize(f.images()[static_cast<std::size_t>(i)]);
    for (std::size_t j = 0; j < v.size(); ++j) m(static_cast<std::size_t>(i), j) = v[j];
  }
  return m;
}

std::string to_string(const FreeHom& f, const Alphabet& alphabet) {
  Alphabet src(f.src_rank());
  std::string out;
  for (int i = 0; i < f.src_rank(); ++i) {
    if (i) out += ", ";
    out += src.names()[static_cast<std::size_t>(i)] + " -> " +
           alphabet.format(f.images()[static_cast<std::size_t>(i)]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Automorphism

Automorphism::Automorphism(FreeHom forward, FreeHom inverse)
    : forward_(std::move(forward)), inverse_(std::move(inverse)) {
  if (!verify_automorphism(forward_, inverse_))
    throw DomainError("supplied maps are not mutually inverse automorphisms");
}

Automorphism Automorphism::identity(int rank) {
  return {FreeHom::identity(rank), FreeHom::identity(rank)};
}

Automorphism Automorphism::pow(int exponent) const {
  Automorphism base = exponent < 0 ? inverse() : *this;
  Automorphism out = identity(rank());
  for (int k = 0; k < std::abs(exponent); ++k) out = compose(out, base);
  return out;
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  return {compose(f.forward(), g.forward()), compose(g.inverse_map(), f.inverse_map())};
}

// ---------------------------------------------------------------------------
// Kappa

void Kappa::validate() const {
  if (n < 3) throw DomainError("kappa: n must be at least 3");
  const auto count = static_cast<std::size_t>(n - 2);
  if (l.size() != count || r.size() != count)
    throw DomainError("kappa: expected " + std::to_string(count) + " l and r coordinates");
  for (const auto& w : l)
    if (w.rank() != 2) throw DomainError("kappa: l coordinates must be words in a, b");
  for (const auto& w : r)
    if (w.rank() != 2) throw DomainError("kappa: r coordinates must be words in a, b");
  if (mu.rank() != 2) throw DomainError("kappa: mu must be an automorphism of F_2");
}

Kappa Kappa::identity(int n) {
  Kappa k;
  k.n = n;
  k.l.assign(static_cast<std::size_t>(std::max(n - 2, 0)), Word(2));
  k.r = k.l;
  return k;
}

Kappa inverse(const Kappa& kappa) {
  kappa.validate();
  Kappa out;
  out.n = kappa.n;
  out.mu = kappa.mu.inverse();
  for (const auto& w : kappa.l) out.l.push_back(out.mu(w.inverse()));
  for (const auto& w : kappa.r) out.r.push_back(out.mu(w.inverse()));
  return out;
}

Kappa operator*(const Kappa& k, const Kappa& kp) {
  k.validate();
  kp.validate();
  if (k.n != kp.n) throw DimensionMismatch("kappa product: n differs");
  Kappa out;
  out.n = k.n;
  for (std::size_t i = 0; i < k.l.size(); ++i) {
    out.l.push_back(k.l[i] * k.mu(kp.l[i]));
    out.r.push_back(k.r[i] * k.mu(kp.r[i]));
  }
  out.mu = compose(kp.mu, k.mu);
  return out;
}

FreeHom build_phi(const Kappa& kappa) {
  kappa.validate();
  const int n = kappa.n;
  std::vector<Word> images;
  images.push_back(kappa.mu(Word::generator(2, 1)).widen(n));
  images.push_back(kappa.mu(Word::generator(2, 2)).widen(n));
  for (int i = 3; i <= n; ++i) {
    const auto idx = static_cast<std::size_t>(i - 3);
    images.push_back(kappa.l[idx].inverse().widen(n) * Word::generator(n, i) *
                     kappa.r[idx].widen(n));
  }
  return {n, n, std::move(images)};
}

Automorphism build_phi_automorphism(const Kappa& kappa) {
  return {build_phi(kappa), build_phi(inverse(kappa))};
}

IntMatrix phi_monodromy_matrix(const Kappa& kappa) {
  kappa.validate();
  const auto n = static_cast<std::size_t>(kappa.n);
  IntMatrix m = IntMatrix::identity(n);
  IntMatrix mu = hom_matrix(kappa.mu.forward());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m(i, j) = mu(i, j);
  for (std::size_t i = 2; i < n; ++i) {
    auto lbar = abelianize(kappa.l[i - 2]);
    auto rbar = abelianize(kappa.r[i - 2]);
    m(i, 0) = rbar[0] - lbar[0];
    m(i, 1) = rbar[1] - lbar[1];
  }
  return m;
}

}  // namespace gtkit
