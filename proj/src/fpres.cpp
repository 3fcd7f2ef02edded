#include "gtkit/fpres.hpp"

#include "gtkit/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

namespace gtkit {

Word cyclic_reduce(const Word& w) {
  const auto& ls = w.letters();
  std::size_t i = 0, j = ls.size();
  while (j - i >= 2 && ls[i] == -ls[j - 1]) {
    ++i;
    --j;
  }
  return Word(w.rank(), std::vector<Letter>(ls.begin() + static_cast<std::ptrdiff_t>(i),
                                            ls.begin() + static_cast<std::ptrdiff_t>(j)));
}

namespace {

std::vector<std::string> numbered_names(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("y" + std::to_string(i));
  return out;
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Presentation::Presentation(std::vector<std::string> names, std::vector<Word> relators)
    : names_(std::move(names)) {
  if (names_.empty()) throw DomainError("presentation needs at least one generator");
  for (auto& r : relators) {
    if (r.rank() != ngens()) throw DimensionMismatch("relator rank differs from generator count");
    Word c = cyclic_reduce(r);
    if (!c.empty()) relators_.push_back(std::move(c));
  }
}

Presentation::Presentation(int ngens, std::vector<Word> relators)
    : Presentation(Alphabet(ngens).names(), std::move(relators)) {}

Presentation Presentation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> names;
  std::vector<std::string> rel_lines;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("gens:", 0) == 0) {
      if (!names.empty()) throw ParseError("line " + std::to_string(lineno) + ": duplicate gens line");
      std::istringstream g(line.substr(5));
      std::string name;
      while (g >> name) {
        if (std::find(names.begin(), names.end(), name) != names.end())
          throw ParseError("duplicate generator '" + name + "'");
        names.push_back(name);
      }
      if (names.empty()) throw ParseError("line " + std::to_string(lineno) + ": no generators");
    } else if (line.rfind("rel:", 0) == 0) {
      if (names.empty()) throw ParseError("line " + std::to_string(lineno) + ": rel before gens");
      rel_lines.push_back(line.substr(4));
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": expected 'gens:' or 'rel:'");
    }
  }
  if (names.empty()) throw ParseError("presentation has no 'gens:' line");
  Alphabet alpha(names);
  std::vector<Word> rels;
  for (const auto& r : rel_lines) rels.push_back(alpha.parse(r));
  return {std::move(names), std::move(rels)};
}

std::string Presentation::to_text() const {
  std::string out = "gens:";
  for (const auto& n : names_) out += " " + n;
  out += '\n';
  for (const auto& r : relators_) {
    out += "rel:";
    for (Letter x : r.letters()) {
      const std::string& name = names_[static_cast<std::size_t>(std::abs(x) - 1)];
      out += ' ';
      if (x > 0) {
        out += name;
      } else {
        std::string up = upper(name);
        bool usable = up != name && std::find(names_.begin(), names_.end(), up) == names_.end();
        out += usable ? up : name + "^-1";
      }
    }
    out += '\n';
  }
  return out;
}

Presentation read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open presentation file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return Presentation::parse(buf.str());
}

Presentation sl2z_presentation() {
  return Presentation::parse("gens: s t\nrel: s^4\nrel: s t s t s t s^-2\n");
}

Presentation b4_presentation() {
  return Presentation::parse(
      "gens: s1 s2 s3\n"
      "rel: s1 s2 s1 S2 S1 S2\n"
      "rel: s2 s3 s2 S3 S2 S3\n"
      "rel: s1 s3 S1 S3\n");
}

Presentation presaut_presentation() {
  Presentation b4 = b4_presentation();
  auto rels = b4.relators();
  rels.push_back(b4.parse_word("s1 s2 s3").pow(4));
  return {b4.names(), std::move(rels)};
}

Presentation p3_presentation() {
  return Presentation::parse(
      "gens: A12 A13 A23\n"
      "rel: A12 A13 A23 A12 A23^-1 A13^-1 A12^-1 A12^-1\n"
      "rel: A12 A13 A23 A13 A23^-1 A13^-1 A12^-1 A13^-1\n");
}

Presentation k3_presentation() { return Presentation::parse("gens: A12 A13 A23\nrel: A12 A13 A23\n"); }

// ---------------------------------------------------------------------------
// CosetTable

CosetTable::CosetTable(Presentation p, std::vector<Word> subgens, std::vector<std::vector<int>> table)
    : presentation_(std::move(p)), subgens_(std::move(subgens)), table_(std::move(table)) {
  const auto width = static_cast<std::size_t>(2 * presentation_.ngens());
  for (const auto& row : table_) {
    if (row.size() != width) throw DimensionMismatch("coset table row has the wrong width");
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= table_.size())
        throw IncompleteTable("coset table has an undefined entry");
  }
}

int CosetTable::act(int coset, Letter x) const {
  return table_.at(static_cast<std::size_t>(coset)).at(static_cast<std::size_t>(column_of(x)));
}

int CosetTable::trace(int coset, const Word& w) const {
  for (Letter x : w.letters()) coset = act(coset, x);
  return coset;
}

bool CosetTable::is_closed() const {
  for (std::size_t c = 0; c < ncosets(); ++c)
    for (const auto& r : presentation_.relators())
      if (trace(static_cast<int>(c), r) != static_cast<int>(c)) return false;
  for (const auto& g : subgens_)
    if (trace(0, g) != 0) return false;
  for (std::size_t c = 0; c < ncosets(); ++c)
    for (Letter g = 1; g <= presentation_.ngens(); ++g)
      for (Letter x : {g, -g})
        if (act(act(static_cast<int>(c), x), -x) != static_cast<int>(c)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Todd-Coxeter

namespace {

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t max_cosets)
      : p_(p), width_(2 * static_cast<std::size_t>(p.ngens())), max_(max_cosets),
        definition_cap_(std::max<std::size_t>(1000, 20 * max_cosets)) {
    if (max_cosets < 1) throw DomainError("max_cosets must be at least 1");
    new_coset();
  }

  std::vector<std::vector<int>> run(const std::vector<Word>& subgens) {
    for (const auto& w : subgens) scan_and_fill(0, w.letters());
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      for (const auto& r : p_.relators()) {
        if (!alive(c)) break;
        scan_and_fill(c, r.letters());
      }
      for (std::size_t col = 0; col < width_ && alive(c); ++col)
        if (at(c, col) < 0) {
          make_room();
          if (!alive(c)) break;
          define(c, col);
        }
    }
    return standardize();
  }

 private:
  const Presentation& p_;
  std::size_t width_;
  std::size_t max_;
  std::size_t definition_cap_;
  std::vector<int> table_;
  std::vector<std::size_t> parent_;
  std::size_t active_ = 0;

  int& at(std::size_t c, std::size_t col) { return table_[c * width_ + col]; }
  static std::size_t col(Letter x) { return static_cast<std::size_t>(column_of(x)); }
  bool alive(std::size_t c) const { return parent_[c] == c; }

  std::size_t new_coset() {
    if (parent_.size() >= definition_cap_)
      throw CosetLimitExceeded(max_, "coset enumeration made more than " +
                                         std::to_string(definition_cap_) + " definitions");
    std::size_t c = parent_.size();
    parent_.push_back(c);
    table_.resize(table_.size() + width_, -1);
    ++active_;
    return c;
  }

  void define(std::size_t c, std::size_t column) {
    std::size_t d = new_coset();
    at(c, column) = static_cast<int>(d);
    at(d, column ^ 1) = static_cast<int>(c);
  }

  // Lookahead may kill cosets, so callers re-check liveness afterwards.
  void make_room() {
    if (active_ < max_) return;
    std::size_t before = active_;
    lookahead();
    std::size_t freed = before - active_;
    if (active_ >= max_ || freed < std::max<std::size_t>(1, max_ / 100))
      throw CosetLimitExceeded(max_);
  }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      std::size_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::size_t a, std::size_t b, std::deque<std::size_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
    --active_;
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::deque<std::size_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      std::size_t e = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < width_; ++x) {
        int fi = at(e, x);
        if (fi < 0) continue;
        auto f = static_cast<std::size_t>(fi);
        at(f, x ^ 1) = -1;
        std::size_t e1 = rep(e);
        std::size_t f1 = rep(f);
        if (at(e1, x) >= 0) {
          merge(f1, static_cast<std::size_t>(at(e1, x)), queue);
        } else if (at(f1, x ^ 1) >= 0) {
          merge(e1, static_cast<std::size_t>(at(f1, x ^ 1)), queue);
        } else {
          at(e1, x) = static_cast<int>(f1);
          at(f1, x ^ 1) = static_cast<int>(e1);
        }
      }
    }
  }

  // Scans r at c. With fill, gaps are closed by new definitions; without, only
  // deductions and coincidences are recorded.
  void scan(std::size_t c, const std::vector<Letter>& r, bool fill) {
    if (r.empty()) return;
    while (true) {
      if (!alive(c)) return;
      std::size_t f = c, b = c;
      std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(r.size()) - 1;
      while (i <= j && at(f, col(r[static_cast<std::size_t>(i)])) >= 0)
        f = static_cast<std::size_t>(at(f, col(r[static_cast<std::size_t>(i++)])));
      if (i > j) {
        if (f != c) coincidence(f, c);
        return;
      }
      while (j >= i && at(b, col(-r[static_cast<std::size_t>(j)])) >= 0)
        b = static_cast<std::size_t>(at(b, col(-r[static_cast<std::size_t>(j--)])));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, col(r[static_cast<std::size_t>(i)])) = static_cast<int>(b);
        at(b, col(-r[static_cast<std::size_t>(i)])) = static_cast<int>(f);
        return;
      }
      if (!fill) return;
      make_room();
      if (!alive(c)) return;
      if (!alive(f)) continue;
      define(f, col(r[static_cast<std::size_t>(i)]));
    }
  }

  void scan_and_fill(std::size_t c, const std::vector<Letter>& r) { scan(c, r, true); }

  void lookahead() {
    for (std::size_t d = 0; d < parent_.size(); ++d)
      for (const auto& r : p_.relators()) {
        if (!alive(d)) break;
        scan(d, r.letters(), false);
      }
  }

  std::vector<std::vector<int>> standardize() {
    std::vector<int> number(parent_.size(), -1);
    std::vector<std::size_t> order{0};
    number[0] = 0;
    for (std::size_t k = 0; k < order.size(); ++k)
      for (std::size_t x = 0; x < width_; ++x) {
        int v = at(order[k], x);
        if (v < 0) throw IncompleteTable("enumeration finished with an undefined entry");
        auto u = rep(static_cast<std::size_t>(v));
        if (number[u] < 0) {
          number[u] = static_cast<int>(order.size());
          order.push_back(u);
        }
      }
    std::vector<std::vector<int>> out(order.size(), std::vector<int>(width_));
    for (std::size_t k = 0; k < order.size(); ++k)
      for (std::size_t x = 0; x < width_; ++x)
        out[k][x] = number[rep(static_cast<std::size_t>(at(order[k], x)))];
    return out;
  }
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgens, std::size_t max_cosets) {
  for (const auto& w : subgens)
    if (w.rank() != p.ngens()) throw DimensionMismatch("subgroup generator rank differs from presentation");
  Enumerator e(p, max_cosets);
  CosetTable ct(p, subgens, e.run(subgens));
  if (!ct.is_closed()) throw Error("coset enumeration produced an inconsistent table");
  return ct;
}

CosetTable coset_table_from_quotient(const Presentation& p, const std::vector<Permutation>& images,
                                     std::size_t max_cosets) {
  if (static_cast<int>(images.size()) != p.ngens())
    throw DimensionMismatch("expected one image per generator");
  const int degree = images.front().degree();
  auto eval = [&](const Word& w) {
    Permutation out = Permutation::identity(degree);
    for (Letter x : w.letters()) {
      const auto& g = images[static_cast<std::size_t>(std::abs(x) - 1)];
      out = out * (x > 0 ? g : g.inverse());
    }
    return out;
  };
  for (const auto& r : p.relators())
    if (!eval(r).is_identity())
      throw RelatorViolated("relator " + p.alphabet().format(r) + " maps to " + eval(r).to_string());

  auto elems = closure_bfs(images, degree);
  if (elems.size() > max_cosets) throw CosetLimitExceeded(max_cosets);
  std::map<Permutation, int> index;
  for (std::size_t k = 0; k < elems.size(); ++k) index.emplace(elems[k], static_cast<int>(k));

  std::vector<std::vector<int>> table(elems.size(), std::vector<int>(static_cast<std::size_t>(2 * p.ngens())));
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (int g = 1; g <= p.ngens(); ++g) {
      const auto& img = images[static_cast<std::size_t>(g - 1)];
      table[k][static_cast<std::size_t>(column_of(g))] = index.at(elems[k] * img);
      table[k][static_cast<std::size_t>(column_of(-g))] = index.at(elems[k] * img.inverse());
    }
  return {p, {}, std::move(table)};
}

// ---------------------------------------------------------------------------
// Reidemeister-Schreier

Presentation reidemeister_schreier(const CosetTable& ct) {
  const int g = ct.presentation().ngens();
  const std::size_t n = ct.ncosets();
  if (n == 0) throw IncompleteTable("empty coset table");

  // Tree edges by breadth-first search; a positive edge (c, x) is a tree edge
  // when it was used to discover one of its endpoints.
  std::vector<std::vector<bool>> tree(n, std::vector<bool>(static_cast<std::size_t>(g + 1), false));
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> order{0};
  seen[0] = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int c = static_cast<int>(order[k]);
    for (int x = 1; x <= g; ++x)
      for (int sign : {1, -1}) {
        const int d = ct.act(c, sign * x);
        if (seen[static_cast<std::size_t>(d)]) continue;
        seen[static_cast<std::size_t>(d)] = true;
        order.push_back(static_cast<std::size_t>(d));
        const int from = sign > 0 ? c : d;
        tree[static_cast<std::size_t>(from)][static_cast<std::size_t>(x)] = true;
      }
  }
  if (order.size() != n) throw IncompleteTable("coset table is not connected");

  std::vector<std::vector<int>> label(n, std::vector<int>(static_cast<std::size_t>(g + 1), 0));
  int count = 0;
  for (std::size_t c = 0; c < n; ++c)
    for (int x = 1; x <= g; ++x)
      if (!tree[c][static_cast<std::size_t>(x)]) label[c][static_cast<std::size_t>(x)] = ++count;

  std::vector<Word> rels;
  for (std::size_t c = 0; c < n; ++c)
    for (const auto& r : ct.presentation().relators()) {
      std::vector<Letter> out;
      int cur = static_cast<int>(c);
      for (Letter x : r.letters()) {
        const int next = ct.act(cur, x);
        const int from = x > 0 ? cur : next;
        const int id = label[static_cast<std::size_t>(from)][static_cast<std::size_t>(std::abs(x))];
        if (id) out.push_back(x > 0 ? id : -id);
        cur = next;
      }
      rels.emplace_back(count, std::move(out));
    }
  return {numbered_names(count), std::move(rels)};
}

IntMatrix relator_matrix(const Presentation& p) {
  IntMatrix m = IntMatrix::zero(p.relators().size(), static_cast<std::size_t>(p.ngens()));
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    auto v = abelianize(p.relators()[i]);
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[j];
  }
  return m;
}

AbelianStructure abelianization(const Presentation& p) {
  return cokernel(relator_matrix(p), static_cast<std::size_t>(p.ngens()));
}

}  // namespace gtkit
