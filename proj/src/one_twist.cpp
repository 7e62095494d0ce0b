#include "bott/one_twist.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "bott/ring.hpp"

namespace bott {

OneTwistClass OneTwistClass::from_ints(const std::vector<long>& values) {
  OneTwistClass c;
  for (long v : values) c.alpha.emplace_back(v);
  return c;
}

BottMatrix OneTwistClass::to_bott_matrix() const {
  const std::size_t m = n();
  BottMatrix b(m);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] != 0) b.set(i, m - 1, Rational(alpha[i]));
  }
  return b;
}

std::string OneTwistClass::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) s += ",";
    s += alpha[i].get_str();
  }
  return s + ")";
}

bool EquivalenceWitness::valid() const {
  return std::all_of(parity_checks.begin(), parity_checks.end(), [](bool b) { return b; }) &&
         std::all_of(product_checks.begin(), product_checks.end(), [](bool b) { return b; });
}

namespace {

bool same_parity(const Integer& a, const Integer& b) { return mpz_even_p(a.get_mpz_t()) == mpz_even_p(b.get_mpz_t()); }

Integer abs_product(const Integer& a, const Integer& b) { return abs(a * b); }

}  // namespace

EquivalenceWitness check_witness(const OneTwistClass& alpha, const OneTwistClass& beta,
                                 const std::vector<std::size_t>& sigma) {
  const std::size_t m = beta.alpha.size();
  if (alpha.alpha.size() != m || sigma.size() != m) throw DomainError("one-twist classes of different dimension");
  EquivalenceWitness w;
  w.sigma = sigma;
  const auto& a = alpha.alpha;
  const auto& b = beta.alpha;
  for (std::size_t i = 0; i < m; ++i) w.parity_checks.push_back(same_parity(a[sigma[i]], b[i]));
  w.product_checks.assign(pair_count(m), false);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      w.product_checks[pair_index(i, j)] = abs_product(a[sigma[i]], a[sigma[j]]) == abs_product(b[i], b[j]);
    }
  }
  return w;
}

namespace {

class WitnessSearch {
 public:
  WitnessSearch(const std::vector<Integer>& a, const std::vector<Integer>& b) : a_(a), b_(b), m_(a.size()) {
    std::size_t odd = 0;
    for (const auto& x : b_) odd += mpz_odd_p(x.get_mpz_t()) ? 1 : 0;
    const std::size_t even = m_ - odd;
    order_.resize(m_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      const std::size_t sx = mpz_odd_p(b_[x].get_mpz_t()) ? odd : even;
      const std::size_t sy = mpz_odd_p(b_[y].get_mpz_t()) ? odd : even;
      return sx < sy;
    });
    sigma_.assign(m_, m_);
    used_.assign(m_, false);
  }

  std::optional<std::vector<std::size_t>> run() {
    if (!parity_counts_match()) return std::nullopt;
    if (place(0)) return sigma_;
    return std::nullopt;
  }

 private:
  bool parity_counts_match() const {
    const auto odd = [](const std::vector<Integer>& v) {
      return std::count_if(v.begin(), v.end(), [](const Integer& x) { return mpz_odd_p(x.get_mpz_t()) != 0; });
    };
    return odd(a_) == odd(b_);
  }

  bool place(std::size_t step) {
    if (step == m_) return true;
    const std::size_t i = order_[step];
    for (std::size_t s = 0; s < m_; ++s) {
      if (used_[s] || !same_parity(a_[s], b_[i])) continue;
      bool ok = true;
      for (std::size_t prev = 0; prev < step && ok; ++prev) {
        const std::size_t j = order_[prev];
        ok = abs_product(a_[s], a_[sigma_[j]]) == abs_product(b_[i], b_[j]);
      }
      if (!ok) continue;
      used_[s] = true;
      sigma_[i] = s;
      if (place(step + 1)) return true;
      used_[s] = false;
      sigma_[i] = m_;
    }
    return false;
  }

  const std::vector<Integer>& a_;
  const std::vector<Integer>& b_;
  std::size_t m_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> sigma_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<EquivalenceWitness> diffeo_equivalent(const OneTwistClass& alpha, const OneTwistClass& beta) {
  if (alpha.alpha.size() != beta.alpha.size()) throw DomainError("one-twist classes of different dimension");
  WitnessSearch search(alpha.alpha, beta.alpha);
  const auto sigma = search.run();
  if (!sigma) return std::nullopt;
  return check_witness(alpha, beta, *sigma);
}

bool rational_trivial(const OneTwistClass& alpha) {
  return std::count_if(alpha.alpha.begin(), alpha.alpha.end(), [](const Integer& x) { return x != 0; }) <= 1;
}

bool integral_trivial(const OneTwistClass& alpha) {
  if (!rational_trivial(alpha)) return false;
  return std::all_of(alpha.alpha.begin(), alpha.alpha.end(),
                     [](const Integer& x) { return mpz_even_p(x.get_mpz_t()) != 0; });
}

std::vector<Integer> pontrjagin_invariant(const OneTwistClass& alpha) {
  const auto& a = alpha.alpha;
  std::vector<Integer> out;
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) out.push_back(2 * abs_product(a[i], a[j]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Integer>> magnitudes_from_products(const OneTwistClass& alpha) {
  const auto& a = alpha.alpha;
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) nz.push_back(i);
  }
  if (nz.size() < 3) return std::nullopt;
  std::vector<Integer> out(a.size(), 0);
  for (std::size_t t = 0; t < nz.size(); ++t) {
    const std::size_t i = nz[t];
    const std::size_t j = nz[(t + 1) % nz.size()];
    const std::size_t k = nz[(t + 2) % nz.size()];
    const Integer sq = abs_product(a[i], a[j]) * abs_product(a[i], a[k]) / abs_product(a[j], a[k]);
    out[i] = sqrt(sq);
    if (out[i] * out[i] != sq) throw std::logic_error("pairwise products are inconsistent");
  }
  return out;
}

bool representative_less(const OneTwistClass& a, const OneTwistClass& b) {
  const auto key = [](const OneTwistClass& c) {
    std::vector<Integer> mags;
    std::vector<int> parities;
    std::size_t negatives = 0;
    for (const auto& x : c.alpha) {
      mags.push_back(abs(x));
      parities.push_back(mpz_odd_p(x.get_mpz_t()) ? 1 : 0);
      negatives += x < 0 ? 1 : 0;
    }
    std::sort(mags.begin(), mags.end());
    return std::make_tuple(mags, parities, negatives, c.alpha);
  };
  return key(a) < key(b);
}

std::vector<EquivalenceClassReport> classify(const std::vector<OneTwistClass>& corpus, Execution exec) {
  return partition_by(
      corpus, [](const OneTwistClass& a, const OneTwistClass& b) { return diffeo_equivalent(a, b).has_value(); },
      exec);
}

std::vector<EquivalenceClassReport> partition_by(const std::vector<OneTwistClass>& corpus,
                                                 const OneTwistRelation& equivalent, Execution exec) {
  const std::size_t count = corpus.size();
  for (const auto& c : corpus) {
    if (c.alpha.size() != (count ? corpus[0].alpha.size() : 0)) throw DomainError("corpus mixes dimensions");
  }
  const auto rel = kernels::pairwise(
      count, [&](std::size_t i, std::size_t j) { return equivalent(corpus[i], corpus[j]); },
      exec);
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!rel[i][j]) continue;
      const std::size_t ri = find(i);
      const std::size_t rj = find(j);
      if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
    }
  }
  std::vector<EquivalenceClassReport> classes;
  std::vector<std::size_t> slot(count, count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == count) {
      slot[r] = classes.size();
      classes.push_back({corpus[i], {}, pontrjagin_invariant(corpus[i])});
    }
    auto& cls = classes[slot[r]];
    cls.members.push_back(corpus[i]);
    if (representative_less(corpus[i], cls.representative)) cls.representative = corpus[i];
  }
  for (auto& cls : classes) cls.pontrjagin = pontrjagin_invariant(cls.representative);
  std::sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) {
    return representative_less(x.representative, y.representative);
  });
  return classes;
}

std::vector<OneTwistClass> one_twist_corpus(std::size_t n, long bound) {
  if (n < 1) throw DomainError("one-twist towers need n >= 1");
  if (bound < 0) throw DomainError("bound must be non-negative");
  std::vector<OneTwistClass> out;
  const std::size_t m = n - 1;
  std::vector<long> v(m, -bound);
  while (true) {
    out.push_back(OneTwistClass::from_ints(v));
    std::size_t pos = m;
    while (pos > 0 && v[pos - 1] == bound) v[--pos] = -bound;
    if (pos == 0) break;
    ++v[pos - 1];
  }
  return out;
}

}  // namespace bott
