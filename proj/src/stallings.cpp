#include "gtkit/stallings.hpp"

#include "gtkit/error.hpp"

#include <cstdlib>
#include <map>

namespace gtkit {

namespace {

std::size_t col(int rank, Letter x) {
  return static_cast<std::size_t>(x > 0 ? x - 1 : rank + (-x) - 1);
}

}  // namespace

SubgroupAutomaton SubgroupAutomaton::from_quotient(int rank, const std::vector<Permutation>& images) {
  if (rank < 1) throw DomainError("ambient rank must be positive");
  if (static_cast<int>(images.size()) != rank)
    throw DimensionMismatch("expected " + std::to_string(rank) + " generator images");
  const int degree = images.front().degree();
  auto elems = closure_bfs(images, degree);
  std::map<Permutation, int> index;
  for (std::size_t k = 0; k < elems.size(); ++k) index.emplace(elems[k], static_cast<int>(k));

  SubgroupAutomaton a;
  a.rank_ = rank;
  const std::size_t n = elems.size();
  a.delta_.assign(n, std::vector<int>(static_cast<std::size_t>(2 * rank)));
  for (std::size_t k = 0; k < n; ++k)
    for (int g = 1; g <= rank; ++g) {
      const auto& img = images[static_cast<std::size_t>(g - 1)];
      a.delta_[k][col(rank, g)] = index.at(elems[k] * img);
      a.delta_[k][col(rank, -g)] = index.at(elems[k] * img.inverse());
    }

  std::vector<Letter> scan;
  for (int g = 1; g <= rank; ++g) scan.push_back(g);
  for (int g = 1; g <= rank; ++g) scan.push_back(-g);

  a.label_.assign(n, std::vector<int>(static_cast<std::size_t>(rank + 1), 0));
  std::vector<std::vector<bool>> done(n, std::vector<bool>(static_cast<std::size_t>(rank + 1), false));
  a.reps_.assign(n, Word(rank));
  std::vector<bool> seen(n, false);
  std::vector<int> order{0};
  seen[0] = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int s = order[k];
    for (Letter x : scan) {
      const int t = a.transition(s, x);
      const int from = x > 0 ? s : t;
      const int to = x > 0 ? t : s;
      const auto g = static_cast<std::size_t>(std::abs(x));
      if (done[static_cast<std::size_t>(from)][g]) continue;
      done[static_cast<std::size_t>(from)][g] = true;
      if (!seen[static_cast<std::size_t>(t)]) {
        seen[static_cast<std::size_t>(t)] = true;
        order.push_back(t);
        a.reps_[static_cast<std::size_t>(t)] = a.reps_[static_cast<std::size_t>(s)] * Word::generator(rank, std::abs(x), x > 0 ? 1 : -1);
        continue;
      }
      a.basis_.push_back(a.reps_[static_cast<std::size_t>(from)] * Word::generator(rank, static_cast<int>(g)) *
                         a.reps_[static_cast<std::size_t>(to)].inverse());
      a.label_[static_cast<std::size_t>(from)][g] = static_cast<int>(a.basis_.size());
    }
  }
  return a;
}

int SubgroupAutomaton::transition(int state, Letter x) const {
  if (x == 0 || std::abs(x) > rank_) throw DomainError("letter outside the ambient alphabet");
  return delta_.at(static_cast<std::size_t>(state))[col(rank_, x)];
}

bool SubgroupAutomaton::contains(const Word& w) const {
  if (w.rank() != rank_) throw DimensionMismatch("word rank differs from the ambient rank");
  int s = 0;
  for (Letter x : w.letters()) s = transition(s, x);
  return s == 0;
}

Word SubgroupAutomaton::rewrite(const Word& w) const {
  if (!contains(w)) throw NotMember("word is not in the subgroup");
  std::vector<Letter> out;
  int s = 0;
  for (Letter x : w.letters()) {
    const int t = transition(s, x);
    const int from = x > 0 ? s : t;
    const int id = label_[static_cast<std::size_t>(from)][static_cast<std::size_t>(std::abs(x))];
    if (id) out.push_back(x > 0 ? id : -id);
    s = t;
  }
  return Word(basis_rank(), std::move(out));
}

Word SubgroupAutomaton::expand(const Word& u) const {
  if (u.rank() != basis_rank()) throw DimensionMismatch("word rank differs from the basis size");
  Word out(rank_);
  for (Letter x : u.letters()) {
    const Word& b = basis_[static_cast<std::size_t>(std::abs(x) - 1)];
    out = out * (x > 0 ? b : b.inverse());
  }
  return out;
}

bool membership(const SubgroupAutomaton& a, const Word& w) { return a.contains(w); }

FreeHom restrict_hom(const SubgroupAutomaton& a, const FreeHom& f, const FreeHom& f_inv) {
  for (const FreeHom* h : {&f, &f_inv})
    if (h->src_rank() != a.ambient_rank() || h->dst_rank() != a.ambient_rank())
      throw DimensionMismatch("automorphism rank differs from the ambient rank");
  std::vector<Word> images;
  for (const auto& b : a.basis()) {
    Word img = apply_hom(f, b);
    if (!a.contains(img) || !a.contains(apply_hom(f_inv, b)))
      throw NotStabilized("automorphism does not preserve the subgroup");
    images.push_back(a.rewrite(img));
  }
  return {a.basis_rank(), a.basis_rank(), std::move(images)};
}

FreeHom restrict_hom(const SubgroupAutomaton& a, const Automorphism& f) {
  return restrict_hom(a, f.forward(), f.inverse_map());
}

}  // namespace gtkit
