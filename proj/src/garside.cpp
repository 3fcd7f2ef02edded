#include "gtkit/braid.hpp"

#include "gtkit/error.hpp"

#include <cstdlib>

namespace gtkit {

// Simple braids are stored as permutations; p * q is "p then q", so
// s_i * x swaps the images at positions i, i+1 and x * s_i swaps the values.

namespace {

Permutation half_twist(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) im[static_cast<std::size_t>(x - 1)] = n + 1 - x;
  return Permutation(std::move(im));
}

Permutation simple_generator(int n, int i) { return Permutation::transposition(n, i, i + 1); }

bool in_starting_set(const Permutation& x, int i) { return x(i) > x(i + 1); }

// Takes the inverse permutation: sigma_i ends x iff x^-1 has a descent at i.
bool in_finishing_set(const Permutation& x_inv, int i) { return x_inv(i) > x_inv(i + 1); }

// Rewrites the pair (a, b) into left-weighted form. Returns true on change.
bool normalize_pair(Permutation& a, Permutation& b) {
  const int n = a.degree();
  bool changed = false;
  while (true) {
    Permutation a_inv = a.inverse();
    int move = 0;
    for (int i = 1; i < n; ++i)
      if (in_starting_set(b, i) && !in_finishing_set(a_inv, i)) {
        move = i;
        break;
      }
    if (move == 0) return changed;
    Permutation s = simple_generator(n, move);
    a = a * s;
    b = s * b;
    changed = true;
  }
}

}  // namespace

std::vector<int> starting_set(const Permutation& x) {
  std::vector<int> out;
  for (int i = 1; i < x.degree(); ++i)
    if (in_starting_set(x, i)) out.push_back(i);
  return out;
}

std::vector<int> finishing_set(const Permutation& x) {
  std::vector<int> out;
  Permutation inv = x.inverse();
  for (int i = 1; i < x.degree(); ++i)
    if (in_finishing_set(inv, i)) out.push_back(i);
  return out;
}

BraidWord permutation_braid_word(const Permutation& x) {
  const int n = x.degree();
  std::vector<int> out;
  Permutation rest = x;
  while (!rest.is_identity()) {
    int i = 1;
    while (!in_starting_set(rest, i)) ++i;
    out.push_back(i);
    rest = simple_generator(n, i) * rest;
  }
  return BraidWord(n, std::move(out));
}

GarsideNormalForm normal_form(const BraidWord& w) {
  const int n = w.strands();
  if (n > kMaxStrands) throw DomainError("normal form limited to B_n with n <= 6");
  const Permutation delta = half_twist(n);
  auto tau = [&](const Permutation& x) { return delta * x * delta; };

  GarsideNormalForm nf;
  nf.n = n;
  std::vector<Permutation>& f = nf.factors;

  auto append = [&](Permutation y) {
    f.push_back(std::move(y));
    for (std::size_t j = f.size() - 1; j > 0; --j)
      if (!normalize_pair(f[j - 1], f[j])) break;
  };

  for (int x : w.letters()) {
    const int i = std::abs(x);
    if (x > 0) {
      append(simple_generator(n, i));
    } else {
      // s_i^-1 = Delta^-1 (Delta s_i^-1), and f Delta^-1 = Delta^-1 tau(f).
      for (auto& p : f) p = tau(p);
      --nf.delta_power;
      append(delta * simple_generator(n, i));
    }
  }

  std::size_t lead = 0;
  while (lead < f.size() && f[lead] == delta) ++lead;
  nf.delta_power += static_cast<int>(lead);
  f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(lead));
  while (!f.empty() && f.back().is_identity()) f.pop_back();
  return nf;
}

std::string GarsideNormalForm::to_string() const {
  std::string out = "Delta^" + std::to_string(delta_power) + " ·";
  for (std::size_t k = 0; k < factors.size(); ++k) {
    out += k == 0 ? " [" : " · [";
    const BraidWord word = permutation_braid_word(factors[k]);
    const auto& letters = word.letters();
    for (std::size_t j = 0; j < letters.size(); ++j) {
      if (j) out += ' ';
      out += "s" + std::to_string(letters[j]);
    }
    out += ']';
  }
  return out;
}

BraidWord GarsideNormalForm::to_word() const {
  BraidWord out = delta_word(n).pow(delta_power);
  for (const auto& p : factors) out = out * permutation_braid_word(p);
  return out;
}

bool braid_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw DimensionMismatch("braids on different strand counts");
  return normal_form(u * v.inverse()) == GarsideNormalForm{u.strands(), 0, {}};
}

// ---------------------------------------------------------------------------
// Handle reduction

namespace {

constexpr std::size_t kHandleStepLimit = 2'000'000;

void free_reduce(std::vector<int>& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  w = std::move(out);
}

}  // namespace

BraidWord handle_reduce(const BraidWord& input) {
  std::vector<int> w = input.letters();
  free_reduce(w);
  for (std::size_t step = 0; step < kHandleStepLimit; ++step) {
    // Leftmost-ending handle s_i^e u s_i^-e, u in letters of index > i.
    std::size_t start = 0, end = 0;
    bool found = false;
    for (std::size_t j = 1; j < w.size() && !found; ++j) {
      const int i = std::abs(w[j]);
      for (std::size_t k = j; k-- > 0;) {
        const int m = std::abs(w[k]);
        if (m > i) continue;
        if (w[k] == -w[j]) {
          start = k;
          end = j;
          found = true;
        }
        break;
      }
    }
    if (!found) return BraidWord(input.strands(), std::move(w));

    const int i = std::abs(w[start]);
    const int e = w[start] > 0 ? 1 : -1;
    std::vector<int> next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(start));
    for (std::size_t k = start + 1; k < end; ++k) {
      const int x = w[k];
      if (std::abs(x) == i + 1) {
        const int d = x > 0 ? 1 : -1;
        next.push_back(-e * (i + 1));
        next.push_back(d * i);
        next.push_back(e * (i + 1));
      } else {
        next.push_back(x);
      }
    }
    next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(end) + 1, w.end());
    free_reduce(next);
    w = std::move(next);
  }
  throw Error("handle reduction exceeded its step limit");
}

bool braid_equal_handle(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw DimensionMismatch("braids on different strand counts");
  return handle_reduce(u * v.inverse()).empty();
}

}  // namespace gtkit
