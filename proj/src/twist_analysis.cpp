#include "bott/twist_analysis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "bott/modular.hpp"

namespace bott {

GeneratorChange GeneratorChange::identity(std::size_t n) {
  GeneratorChange g;
  g.rows.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) g.rows[i][i] = 1;
  return g;
}

Rational GeneratorChange::determinant() const { return bott::determinant(rows); }

bool GeneratorChange::unimodular(CoeffRing ring) const {
  for (const auto& r : rows) {
    for (const auto& v : r) {
      if (!in_ring(v, ring)) return false;
    }
  }
  return is_unit(determinant(), ring);
}

std::vector<Rational> coefficient_values(CoeffRing ring, long bound) {
  if (bound < 0) throw DomainError("coefficient bound must be non-negative");
  std::vector<Rational> out{0};
  for (long p = 1; p <= bound; ++p) {
    out.emplace_back(p);
    out.emplace_back(-p);
  }
  if (ring == CoeffRing::IntegerZ) return out;
  const long q = ring == CoeffRing::TwoLocalZ ? 3 : 2;
  for (long p = 1; p <= bound; ++p) {
    if (p % q == 0) continue;
    out.emplace_back(Rational(p, q));
    out.emplace_back(Rational(-p, q));
  }
  return out;
}

bool verify_generator_change(const BottMatrix& source, const BottMatrix& target, const GeneratorChange& change,
                             CoeffRing ring) {
  const std::size_t n = source.size();
  if (target.size() != n || change.size() != n) return false;
  if (!change.unimodular(ring)) return false;
  const auto h = CohomologyRing::create(source, ring);
  std::vector<RingElement> y;
  for (std::size_t k = 0; k < n; ++k) y.push_back(h->line(change.row(k)));
  for (std::size_t k = 0; k < n; ++k) {
    RingElement g = h->zero();
    for (std::size_t i = 0; i < k; ++i) {
      if (sgn(target(i, k)) != 0) g = g + target(i, k) * y[i];
    }
    if (!(y[k] * y[k] == g * y[k])) return false;
  }
  return true;
}

bool square_zero_rows_satisfy_constraints(const BottMatrix& source, const BottMatrix& target,
                                          const GeneratorChange& change) {
  const std::size_t n = source.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (!target.column_is_zero(k)) continue;
    const auto& b = change.rows[k];
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (2 * b[j] * b[i] != -(b[j] * b[j]) * source(i, j)) return false;
      }
    }
  }
  return true;
}

bool even_block_forces_even_determinant(const RationalMatrix& b, const std::vector<std::size_t>& rows,
                                        const std::vector<std::size_t>& cols) {
  const std::size_t n = b.size();
  if (rows.size() + cols.size() <= n) return false;
  for (std::size_t r : rows) {
    for (std::size_t c : cols) {
      if (!is_even(b[r][c], CoeffRing::IntegerZ) && !is_even(b[r][c], CoeffRing::TwoLocalZ)) return false;
    }
  }
  return true;
}

std::vector<long> effective_moduli(const OracleOptions& options) {
  std::vector<long> in = options.moduli;
  if (in.empty() && options.use_default_moduli) {
    switch (options.ring) {
      case CoeffRing::IntegerZ:
        in = {2, 4, 3, 8};
        break;
      case CoeffRing::TwoLocalZ:
        in = {2, 4, 8};
        break;
      case CoeffRing::RationalQ:
        break;
    }
  }
  std::vector<long> out;
  for (long m : in) {
    const auto pp = modular::prime_power(m);
    if (!pp) throw DomainError("modulus " + std::to_string(m) + " is not a prime power");
    if (options.ring == CoeffRing::RationalQ) continue;
    if (options.ring == CoeffRing::TwoLocalZ && pp->first != 2) continue;
    out.push_back(m);
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Isomorphic:
      return "isomorphic";
    case Verdict::NotIsomorphic:
      return "not_isomorphic";
    case Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

std::string to_string(Move::Kind kind) {
  switch (kind) {
    case Move::Kind::Conjugate:
      return "conjugate";
    case Move::Kind::TrivializeStage:
      return "trivialize_stage";
    case Move::Kind::Retwist:
      return "retwist";
    case Move::Kind::NormalizeTrivialFirst:
      return "normalize";
  }
  return "conjugate";
}

namespace {

// Nonzero vectors of length n over `values`, lexicographic in value order.
std::vector<LineClass> all_vectors(std::size_t n, const std::vector<Rational>& values, bool sign_normalized) {
  std::vector<LineClass> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < values.size()) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
    if (n == 0) return out;
    std::vector<Rational> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = values[idx[i]];
    if (sign_normalized) {
      const auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
      if (sgn(*first) < 0) continue;
    }
    out.emplace_back(std::move(v));
  }
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

// Cheap parity test and then the exact extendability test for partial rows.
bool partial_rows_ok(const RationalMatrix& rows, CoeffRing ring) {
  if (rows.empty()) return true;
  const std::size_t n = rows[0].size();
  if (ring != CoeffRing::RationalQ) {
    std::size_t even_cols = 0;
    for (std::size_t c = 0; c < n; ++c) {
      bool even = true;
      for (const auto& r : rows) {
        if (!is_even(r[c], ring)) {
          even = false;
          break;
        }
      }
      if (even) ++even_cols;
    }
    if (rows.size() + even_cols > n) return false;
  }
  return extendable_to_unimodular(rows, ring);
}

struct BranchOutcome {
  bool found = false;
  bool exhausted = false;
  std::vector<std::size_t> chosen;
  std::vector<std::vector<Rational>> solutions;
};

// ---------------------------------------------------------------------
// Isomorphism search over the ring.

class IsoSearch {
 public:
  IsoSearch(const BottMatrix& l1, const BottMatrix& l2, CoeffRing ring, const std::vector<LineClass>& cands,
            const std::vector<std::vector<Rational>>& squares, const std::vector<std::vector<std::size_t>>& order,
            std::size_t budget)
      : l1_(l1), l2_(l2), ring_(ring), cands_(cands), squares_(squares), order_(order), budget_(budget) {}

  BranchOutcome run_from(std::size_t first) {
    BranchOutcome out;
    chosen_.assign(1, first);
    rows_.assign(1, cands_[first].coeffs);
    out.found = dfs(1);
    out.exhausted = exhausted_;
    out.chosen = chosen_;
    return out;
  }

  bool fits(std::size_t idx, const LineClass& g) {
    if (++checks_ > budget_) {
      exhausted_ = true;
      return false;
    }
    if (g.is_zero()) return all_zero(squares_[idx]);
    return product_coefficients(l1_, g, cands_[idx]) == squares_[idx];
  }

 private:
  bool dfs(std::size_t k) {
    const std::size_t n = l1_.size();
    if (k == n) return true;
    LineClass g = LineClass::zero(n);
    for (std::size_t i = 0; i < k; ++i) {
      if (sgn(l2_(i, k)) != 0) g = g + l2_(i, k) * cands_[chosen_[i]];
    }
    for (std::size_t idx : order_[k]) {
      if (!fits(idx, g)) {
        if (exhausted_) return false;
        continue;
      }
      rows_.push_back(cands_[idx].coeffs);
      if (partial_rows_ok(rows_, ring_)) {
        chosen_.push_back(idx);
        if (dfs(k + 1)) return true;
        chosen_.pop_back();
      }
      rows_.pop_back();
      if (exhausted_) return false;
    }
    return false;
  }

  const BottMatrix& l1_;
  const BottMatrix& l2_;
  CoeffRing ring_;
  const std::vector<LineClass>& cands_;
  const std::vector<std::vector<Rational>>& squares_;
  const std::vector<std::vector<std::size_t>>& order_;
  std::size_t budget_;
  std::size_t checks_ = 0;
  bool exhausted_ = false;
  std::vector<std::size_t> chosen_;
  RationalMatrix rows_;
};

// Rows close to the unit vector e_k come first so that near-identity
// changes are found early.
std::vector<std::size_t> row_order(const std::vector<LineClass>& cands, const std::vector<Rational>& values,
                                   std::size_t k) {
  std::map<Rational, std::size_t> rank_of;
  for (std::size_t i = 0; i < values.size(); ++i) rank_of.emplace(values[i], i);
  std::vector<std::pair<std::size_t, std::size_t>> keyed;
  keyed.reserve(cands.size());
  for (std::size_t c = 0; c < cands.size(); ++c) {
    std::size_t cost = 0;
    for (std::size_t i = 0; i < cands[c].size(); ++i) {
      const Rational d = cands[c].coeffs[i] - (i == k ? 1 : 0);
      const auto it = rank_of.find(d);
      cost += it == rank_of.end() ? values.size() : it->second;
    }
    keyed.emplace_back(cost, c);
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::size_t> out;
  out.reserve(keyed.size());
  for (const auto& kc : keyed) out.push_back(kc.second);
  return out;
}

std::optional<GeneratorChange> bounded_isomorphism(const BottMatrix& l1, const BottMatrix& l2,
                                                   const OracleOptions& options, bool& exhausted) {
  const std::size_t n = l1.size();
  const auto values = coefficient_values(options.ring, options.coeff_bound);
  const auto cands = all_vectors(n, values, false);
  const auto squares = kernels::map_indices<std::vector<Rational>>(
      cands.size(), [&](std::size_t i) { return square_coefficients(l1, cands[i]); }, options.execution);
  std::vector<std::vector<std::size_t>> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = row_order(cands, values, k);

  // Row 0 satisfies y_0^2 = 0; each admissible first row is a branch.
  std::vector<std::size_t> firsts;
  for (std::size_t idx : order[0]) {
    if (all_zero(squares[idx]) && partial_rows_ok({cands[idx].coeffs}, options.ring)) firsts.push_back(idx);
  }
  std::vector<BranchOutcome> outcomes(firsts.size());
  const std::size_t hit = kernels::first_match(
      firsts.size(),
      [&](std::size_t b) {
        IsoSearch search(l1, l2, options.ring, cands, squares, order, options.node_budget);
        outcomes[b] = search.run_from(firsts[b]);
        return outcomes[b].found;
      },
      options.execution);
  if (hit < firsts.size()) {
    GeneratorChange g;
    for (std::size_t idx : outcomes[hit].chosen) g.rows.push_back(cands[idx].coeffs);
    return g;
  }
  exhausted = std::any_of(outcomes.begin(), outcomes.end(), [](const BranchOutcome& o) { return o.exhausted; });
  return std::nullopt;
}

// ---------------------------------------------------------------------
// Bounded complexity search over the ring.

class ComplexitySearch {
 public:
  ComplexitySearch(const BottMatrix& l, CoeffRing ring, const std::vector<LineClass>& cands,
                   const std::vector<std::vector<Rational>>& squares, const std::vector<std::size_t>& square_zero,
                   std::size_t budget)
      : l_(l), ring_(ring), cands_(cands), squares_(squares), square_zero_(square_zero), budget_(budget) {}

  // Branch: the first row is square_zero_[first] when twisted < n, or
  // cands_[first] when every row is twisted.
  BranchOutcome run(std::size_t twisted, std::size_t first) {
    const std::size_t n = l_.size();
    twisted_ = twisted;
    BranchOutcome out;
    chosen_.clear();
    rows_.clear();
    solutions_.clear();
    bool ok;
    if (twisted < n) {
      ok = push_square_zero(square_zero_[first]) && pick_square_zero(first + 1, n - twisted - 1);
    } else {
      ok = try_twisted(first) && pick_twisted();
    }
    out.found = ok;
    out.exhausted = exhausted_;
    out.chosen = chosen_;
    out.solutions = solutions_;
    return out;
  }

 private:
  bool tick() {
    if (++checks_ > budget_) exhausted_ = true;
    return !exhausted_;
  }

  bool push_square_zero(std::size_t idx) {
    rows_.push_back(cands_[idx].coeffs);
    if (!partial_rows_ok(rows_, ring_)) {
      rows_.pop_back();
      return false;
    }
    chosen_.push_back(idx);
    solutions_.emplace_back();
    return true;
  }

  void pop() {
    rows_.pop_back();
    chosen_.pop_back();
    solutions_.pop_back();
  }

  // Chooses `remaining` more square-zero rows with increasing positions.
  bool pick_square_zero(std::size_t start, std::size_t remaining) {
    if (remaining == 0) return pick_twisted();
    for (std::size_t s = start; s < square_zero_.size(); ++s) {
      if (!tick()) return false;
      if (!push_square_zero(square_zero_[s])) continue;
      if (pick_square_zero(s + 1, remaining - 1)) return true;
      pop();
      if (exhausted_) return false;
    }
    return false;
  }

  bool try_twisted(std::size_t idx) {
    const std::size_t k = rows_.size();
    const std::size_t pairs = pair_count(l_.size());
    std::vector<Rational> d;
    if (k == 0) {
      if (!all_zero(squares_[idx])) return false;
      d = {};
    } else {
      RationalMatrix a(pairs, std::vector<Rational>(k));
      for (std::size_t i = 0; i < k; ++i) {
        const auto prod = product_coefficients(l_, LineClass(rows_[i]), cands_[idx]);
        for (std::size_t p = 0; p < pairs; ++p) a[p][i] = prod[p];
      }
      auto sol = solve_in_ring(a, squares_[idx], ring_);
      if (!sol) return false;
      d = std::move(*sol);
    }
    rows_.push_back(cands_[idx].coeffs);
    if (!partial_rows_ok(rows_, ring_)) {
      rows_.pop_back();
      return false;
    }
    chosen_.push_back(idx);
    solutions_.push_back(std::move(d));
    return true;
  }

  bool pick_twisted() {
    if (rows_.size() == l_.size()) return true;
    for (std::size_t idx = 0; idx < cands_.size(); ++idx) {
      if (!tick()) return false;
      if (!try_twisted(idx)) continue;
      if (pick_twisted()) return true;
      pop();
      if (exhausted_) return false;
    }
    return false;
  }

  const BottMatrix& l_;
  CoeffRing ring_;
  const std::vector<LineClass>& cands_;
  const std::vector<std::vector<Rational>>& squares_;
  const std::vector<std::size_t>& square_zero_;
  std::size_t budget_;
  std::size_t twisted_ = 0;
  std::size_t checks_ = 0;
  bool exhausted_ = false;
  std::vector<std::size_t> chosen_;
  RationalMatrix rows_;
  std::vector<std::vector<Rational>> solutions_;
};

}  // namespace

IsomorphismResult ring_isomorphic(const BottMatrix& lambda1, const BottMatrix& lambda2, const OracleOptions& options) {
  if (lambda1.size() != lambda2.size()) throw DomainError("ring_isomorphic: towers of different height");
  if (!lambda1.entries_in(options.ring) || !lambda2.entries_in(options.ring)) {
    throw DomainError("ring_isomorphic: entries outside the coefficient ring");
  }
  IsomorphismResult result;
  if (lambda1 == lambda2) {
    result.verdict = Verdict::Isomorphic;
    result.witness = GeneratorChange::identity(lambda1.size());
    return result;
  }
  bool exhausted = false;
  if (auto w = bounded_isomorphism(lambda1, lambda2, options, exhausted)) {
    result.verdict = Verdict::Isomorphic;
    result.witness = std::move(w);
    return result;
  }
  result.budget_exhausted = exhausted;
  for (long m : effective_moduli(options)) {
    const auto iso = isomorphic_mod(lambda1, lambda2, m, options.node_budget);
    if (!iso) {
      result.budget_exhausted = true;
      continue;
    }
    if (!*iso) {
      result.verdict = Verdict::NotIsomorphic;
      result.obstruction_modulus = m;
      return result;
    }
  }
  result.verdict = Verdict::Unknown;
  return result;
}

std::optional<bool> isomorphic_mod(const BottMatrix& lambda1, const BottMatrix& lambda2, long m,
                                   std::size_t node_budget) {
  const auto a = modular::reduce(lambda1, m);
  const auto b = modular::reduce(lambda2, m);
  return modular::isomorphic(a, b, node_budget);
}

std::optional<std::size_t> complexity_mod(const BottMatrix& lambda, long m, std::size_t limit,
                                          std::size_t node_budget) {
  return modular::complexity(modular::reduce(lambda, m), limit, node_budget);
}

ComplexityReport complexity_oracle(const BottMatrix& lambda, const OracleOptions& options) {
  if (!lambda.entries_in(options.ring)) throw DomainError("complexity_oracle: entries outside the coefficient ring");
  if (options.coeff_bound < 1) throw DomainError("complexity_oracle: coefficient bound must be positive");
  const std::size_t n = lambda.size();
  ComplexityReport report;
  report.value = lambda.nonzero_columns();
  report.presentation = lambda;
  report.witness = GeneratorChange::identity(n);

  const auto values = coefficient_values(options.ring, options.coeff_bound);
  const auto cands = all_vectors(n, values, true);
  const auto squares = kernels::map_indices<std::vector<Rational>>(
      cands.size(), [&](std::size_t i) { return square_coefficients(lambda, cands[i]); }, options.execution);
  std::vector<std::size_t> square_zero;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (all_zero(squares[i])) square_zero.push_back(i);
  }

  // The input presentation realizes its own count, so only smaller counts
  // need a search.
  for (std::size_t twisted = 0; twisted < lambda.nonzero_columns(); ++twisted) {
    const std::size_t branches = twisted < n ? square_zero.size() : cands.size();
    std::vector<BranchOutcome> outcomes(branches);
    const std::size_t hit = kernels::first_match(
        branches,
        [&](std::size_t b) {
          ComplexitySearch search(lambda, options.ring, cands, squares, square_zero, options.node_budget);
          outcomes[b] = search.run(twisted, b);
          return outcomes[b].found;
        },
        options.execution);
    if (hit < branches) {
      const auto& o = outcomes[hit];
      GeneratorChange g;
      BottMatrix p(n);
      for (std::size_t k = 0; k < n; ++k) {
        g.rows.push_back(cands[o.chosen[k]].coeffs);
        for (std::size_t i = 0; i < o.solutions[k].size(); ++i) {
          if (sgn(o.solutions[k][i]) != 0) p.set(i, k, o.solutions[k][i]);
        }
      }
      report.value = p.nonzero_columns();
      report.presentation = p;
      report.witness = g;
      break;
    }
    if (std::any_of(outcomes.begin(), outcomes.end(), [](const BranchOutcome& o) { return o.exhausted; })) {
      report.budget_exhausted = true;
    }
  }

  if (report.value > 0 && !report.budget_exhausted) {
    for (long m : effective_moduli(options)) {
      const auto lb = complexity_mod(lambda, m, report.value, options.node_budget);
      if (lb && *lb > report.lower_bound) {
        report.lower_bound = *lb;
        report.lower_bound_modulus = m;
      }
      if (report.lower_bound == report.value) break;
    }
  }
  report.certified = !report.budget_exhausted && report.lower_bound == report.value;
  return report;
}

std::optional<std::size_t> find_reducible_stage(const BottMatrix& lambda, CoeffRing ring) {
  for (std::size_t m = lambda.size(); m-- > 0;) {
    if (lambda.column_is_zero(m)) continue;
    if (stage_bundle_trivial(lambda, m, ring)) return m;
  }
  return std::nullopt;
}

BottMatrix conjugacy_representative(const BottMatrix& lambda) {
  BottMatrix best = lambda;
  for (const auto& sigma : admissible_permutations(lambda, std::max<std::size_t>(lambda.size(), 8))) {
    BottMatrix c = conjugate(lambda, sigma);
    if (c < best) best = std::move(c);
  }
  return best;
}

namespace {

struct SearchNode {
  BottMatrix matrix;
  std::size_t parent;
  std::vector<Move> moves;  // from the parent's matrix to this one
};

Move conjugation_move(Move::Kind kind, const BottMatrix& before, const StagePermutation& sigma) {
  Move mv;
  mv.kind = kind;
  mv.sigma = sigma;
  mv.before = before;
  mv.after = conjugate(before, sigma);
  return mv;
}

Rational l1_norm(const LineClass& a) {
  Rational s = 0;
  for (const auto& c : a.coeffs) s += abs(c);
  return s;
}

}  // namespace

TwistReport twist_number(const BottMatrix& lambda, const TwistOptions& options) {
  const std::size_t n = lambda.size();
  if (!lambda.entries_in(options.ring)) throw DomainError("twist_number: entries outside the coefficient ring");
  if (options.certified && n > options.certified_max_n) {
    throw DomainError("certified mode supports n <= " + std::to_string(options.certified_max_n));
  }
  const StagePermutation id = StagePermutation::identity(n);

  std::vector<SearchNode> nodes;
  std::map<BottMatrix, std::size_t> seen;
  std::deque<std::size_t> queue;
  nodes.push_back({lambda, 0, {}});
  seen.emplace(conjugacy_representative(lambda), 0);
  queue.push_back(0);
  std::size_t best = 0;
  bool complete = true;

  auto consider = [&](BottMatrix m, std::size_t parent, std::vector<Move> moves) {
    BottMatrix key = conjugacy_representative(m);
    if (seen.count(key)) return;
    seen.emplace(std::move(key), nodes.size());
    nodes.push_back({std::move(m), parent, std::move(moves)});
    if (nodes.back().matrix.nonzero_columns() < nodes[best].matrix.nonzero_columns()) best = nodes.size() - 1;
    queue.push_back(nodes.size() - 1);
  };

  std::size_t explored = 0;
  while (!queue.empty() && nodes[best].matrix.nonzero_columns() > 0) {
    if (explored++ >= options.state_budget) {
      complete = false;
      break;
    }
    const std::size_t cur = queue.front();
    queue.pop_front();
    const BottMatrix x = nodes[cur].matrix;
    std::vector<StagePermutation> perms;
    if (n <= 8) {
      perms = admissible_permutations(x);
    } else {
      perms = {id, trivial_first_permutation(x)};
    }
    for (const auto& sigma : perms) {
      std::vector<Move> prefix;
      if (!(sigma == id)) prefix.push_back(conjugation_move(Move::Kind::Conjugate, x, sigma));
      const BottMatrix y = prefix.empty() ? x : prefix.back().after;
      for (std::size_t m = n; m-- > 0;) {
        auto z = trivialize_stage(y, m, options.ring);
        if (!z) continue;
        auto moves = prefix;
        Move mv;
        mv.kind = Move::Kind::TrivializeStage;
        mv.stage = m;
        mv.before = y;
        mv.after = *z;
        moves.push_back(std::move(mv));
        consider(std::move(*z), cur, std::move(moves));
      }
      if (n >= 2 && y.nonzero_columns() == 1 && !y.column_is_zero(n - 1)) {
        const LineClass alpha(y.column(n - 1));
        std::vector<long> w(n - 1, -1);
        while (true) {
          const LineClass wc = LineClass::from_ints(w);
          if (!wc.is_zero()) {
            if (auto beta = retwist(alpha, wc, options.ring); beta && l1_norm(*beta) < l1_norm(alpha)) {
              BottMatrix z(n);
              for (std::size_t i = 0; i + 1 < n; ++i) {
                if (sgn(beta->coeffs[i]) != 0) z.set(i, n - 1, beta->coeffs[i]);
              }
              auto moves = prefix;
              Move mv;
              mv.kind = Move::Kind::Retwist;
              mv.shift = wc;
              mv.before = y;
              mv.after = z;
              moves.push_back(std::move(mv));
              consider(std::move(z), cur, std::move(moves));
            }
          }
          std::size_t pos = 0;
          while (pos < w.size() && w[pos] == 1) w[pos++] = -1;
          if (pos == w.size()) break;
          ++w[pos];
        }
      }
    }
  }

  TwistReport report;
  std::vector<std::size_t> path;
  for (std::size_t v = best; v != 0; v = nodes[v].parent) path.push_back(v);
  std::reverse(path.begin(), path.end());
  for (std::size_t v : path) {
    for (const auto& mv : nodes[v].moves) report.witness_moves.push_back(mv);
  }
  BottMatrix form = nodes[best].matrix;
  const StagePermutation tf = trivial_first_permutation(form);
  if (!(tf == id)) {
    report.witness_moves.push_back(conjugation_move(Move::Kind::NormalizeTrivialFirst, form, tf));
    form = report.witness_moves.back().after;
  }
  report.minimal_form = form;
  report.twist = form.nonzero_columns();
  report.search_complete = complete || report.twist == 0;
  report.certified_minimal = report.twist == 0;
  report.proven_minimal = report.twist == 0;

  if (options.certified) {
    OracleOptions oo = options.oracle;
    oo.ring = options.ring;
    report.oracle = complexity_oracle(lambda, oo);
    const auto& o = *report.oracle;
    report.oracle_disagrees = o.value != report.twist;
    if (!o.budget_exhausted && o.value >= report.twist) report.certified_minimal = true;
    if (o.lower_bound >= report.twist) report.proven_minimal = true;
  }
  return report;
}

}  // namespace bott
