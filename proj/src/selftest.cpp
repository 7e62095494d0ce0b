#include "bott/selftest.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "bott/linalg.hpp"
#include "bott/one_twist.hpp"
#include "bott/quasitoric.hpp"
#include "bott/ring.hpp"
#include "bott/tower_moves.hpp"
#include "bott/twist_analysis.hpp"

namespace bott {

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

BottMatrix random_bott(Rng& rng, std::size_t n, long lo, long hi) {
  BottMatrix m(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) m.set(i, j, uniform(rng, lo, hi));
  }
  return m;
}

LineClass random_line(Rng& rng, std::size_t n, long lo, long hi) {
  std::vector<long> v(n);
  for (auto& x : v) x = uniform(rng, lo, hi);
  return LineClass::from_ints(v);
}

OneTwistClass random_alpha(Rng& rng, std::size_t len, long bound) {
  std::vector<long> v(len);
  for (auto& x : v) x = uniform(rng, -bound, bound);
  return OneTwistClass::from_ints(v);
}

// Runs `body` on `cases` inputs; body returns an empty string on success
// or a description of the counterexample.
PropertyResult check(const std::string& name, std::size_t cases, const std::function<std::string(std::size_t)>& body) {
  PropertyResult r;
  r.name = name;
  r.cases = cases;
  r.passed = true;
  for (std::size_t i = 0; i < cases; ++i) {
    std::string failure;
    try {
      failure = body(i);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (!failure.empty()) {
      r.passed = false;
      r.detail = failure;
      break;
    }
  }
  return r;
}

std::string vec_text(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

}  // namespace

std::vector<PropertyResult> run_selftest(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<PropertyResult> out;
  OracleOptions serial_oracle;
  serial_oracle.execution = Execution::Serial;

  out.push_back(check("ring_relations_hold", 60, [&](std::size_t) -> std::string {
    const BottMatrix l = random_bott(rng, uniform(rng, 1, 5), -3, 3);
    return bq_structure_check(l) ? "" : "relations fail for " + l.to_string();
  }));

  out.push_back(check("degree_four_closed_forms", 200, [&](std::size_t) -> std::string {
    const std::size_t n = uniform(rng, 2, 5);
    const BottMatrix l = random_bott(rng, n, -3, 3);
    const LineClass u = random_line(rng, n, -3, 3);
    const LineClass v = random_line(rng, n, -3, 3);
    const auto h = CohomologyRing::create(l);
    const RingElement sq = h->line(u) * h->line(u);
    const RingElement pr = h->line(u) * h->line(v);
    const auto sqc = square_coefficients(l, u);
    const auto prc = product_coefficients(l, u, v);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (sq.coefficient(monomial_of({i, j})) != sqc[pair_index(i, j)]) return "square of " + vec_text(u.coeffs);
        if (pr.coefficient(monomial_of({i, j})) != prc[pair_index(i, j)]) return "product " + vec_text(u.coeffs);
      }
    }
    return "";
  }));

  out.push_back(check("ring_solvers_agree", 300, [&](std::size_t i) -> std::string {
    const CoeffRing ring = i % 2 ? CoeffRing::TwoLocalZ : CoeffRing::IntegerZ;
    const std::size_t rows = uniform(rng, 1, 4);
    const std::size_t cols = uniform(rng, 1, 3);
    RationalMatrix a(rows, std::vector<Rational>(cols));
    std::vector<Rational> b(rows);
    for (auto& r : a) {
      for (auto& x : r) x = uniform(rng, -4, 4);
    }
    for (auto& x : b) x = uniform(rng, -6, 6);
    const bool divisors = solvable_in_ring(a, b, ring);
    const auto sol = solve_in_ring(a, b, ring);
    if (divisors != sol.has_value()) return "solvers disagree";
    if (sol) {
      for (std::size_t r = 0; r < rows; ++r) {
        Rational lhs = 0;
        for (std::size_t c = 0; c < cols; ++c) lhs += a[r][c] * (*sol)[c];
        if (lhs != b[r] || !std::all_of(sol->begin(), sol->end(), [&](const Rational& x) { return in_ring(x, ring); })) {
          return "returned solution is wrong";
        }
      }
    }
    return "";
  }));

  out.push_back(check("conjugation_preserves_twist", 40, [&](std::size_t) -> std::string {
    const BottMatrix l = random_bott(rng, uniform(rng, 2, 4), -2, 2);
    const auto perms = admissible_permutations(l);
    const auto& sigma = perms[uniform(rng, 0, static_cast<long>(perms.size()) - 1)];
    const auto a = twist_number(l).twist;
    const auto b = twist_number(conjugate(l, sigma)).twist;
    return a == b ? "" : "twist changes under conjugation of " + l.to_string();
  }));

  out.push_back(check("twist_equals_complexity", 25, [&](std::size_t) -> std::string {
    const BottMatrix l = random_bott(rng, 3, -2, 2);
    const auto t = twist_number(l).twist;
    const auto c = complexity_oracle(l, serial_oracle).value;
    return t == c ? "" : "twist " + std::to_string(t) + " vs complexity " + std::to_string(c) + " for " + l.to_string();
  }));

  out.push_back(check("moves_preserve_cohomology", 15, [&](std::size_t) -> std::string {
    const BottMatrix l = random_bott(rng, uniform(rng, 2, 4), -2, 2);
    for (const auto& mv : twist_number(l).witness_moves) {
      const auto r = ring_isomorphic(mv.before, mv.after, serial_oracle);
      if (r.verdict != Verdict::Isomorphic) return to_string(mv.kind) + " move not confirmed on " + mv.before.to_string();
      if (!verify_generator_change(mv.before, mv.after, *r.witness, CoeffRing::IntegerZ)) return "bad witness";
      if (!square_zero_rows_satisfy_constraints(mv.before, mv.after, *r.witness)) return "witness violates the square-zero constraint";
    }
    return "";
  }));

  out.push_back(check("even_block_gives_even_determinant", 200, [&](std::size_t) -> std::string {
    const std::size_t n = uniform(rng, 2, 5);
    RationalMatrix b(n, std::vector<Rational>(n));
    for (auto& r : b) {
      for (auto& x : r) x = uniform(rng, -3, 3);
    }
    const std::size_t k = uniform(rng, 1, static_cast<long>(n));
    const std::size_t t = n - k + 1;
    std::vector<std::size_t> rows(k);
    std::vector<std::size_t> cols(t);
    for (std::size_t i = 0; i < k; ++i) rows[i] = i;
    for (std::size_t i = 0; i < t; ++i) cols[i] = n - 1 - i;
    for (std::size_t r : rows) {
      for (std::size_t c : cols) b[r][c] *= 2;
    }
    if (!even_block_forces_even_determinant(b, rows, cols)) return "even-block predicate rejected an even block";
    return is_even(determinant(b), CoeffRing::IntegerZ) ? "" : "determinant is odd";
  }));

  out.push_back(check("one_twist_equivalence_laws", 200, [&](std::size_t) -> std::string {
    const std::size_t len = uniform(rng, 1, 5);
    const auto a = random_alpha(rng, len, 4);
    auto b = a;
    std::shuffle(b.alpha.begin(), b.alpha.end(), rng);
    for (auto& x : b.alpha) {
      if (uniform(rng, 0, 1)) x = -x;
    }
    const auto c = random_alpha(rng, len, 4);
    if (!diffeo_equivalent(a, a)) return "not reflexive at " + a.to_string();
    if (!diffeo_equivalent(a, b)) return "signed permutation changes the class of " + a.to_string();
    if (diffeo_equivalent(a, c).has_value() != diffeo_equivalent(c, a).has_value()) return "not symmetric";
    if (diffeo_equivalent(b, c) && !diffeo_equivalent(a, c)) return "not transitive";
    if (diffeo_equivalent(a, c) && pontrjagin_invariant(a) != pontrjagin_invariant(c)) {
      return "Pontrjagin invariant differs within a class";
    }
    if (const auto mags = magnitudes_from_products(a)) {
      for (std::size_t i = 0; i < len; ++i) {
        if ((*mags)[i] != abs(a.alpha[i])) return "magnitudes not recovered for " + a.to_string();
      }
    }
    return "";
  }));

  out.push_back(check("one_twist_matches_ring_oracle", 30, [&](std::size_t) -> std::string {
    const auto a = random_alpha(rng, 2, 2);
    const auto b = random_alpha(rng, 2, 2);
    const auto r = ring_isomorphic(a.to_bott_matrix(), b.to_bott_matrix(), serial_oracle);
    if (r.verdict == Verdict::Unknown) return "oracle inconclusive on " + a.to_string() + " " + b.to_string();
    const bool iso = r.verdict == Verdict::Isomorphic;
    return iso == diffeo_equivalent(a, b).has_value() ? "" : "disagreement on " + a.to_string() + " " + b.to_string();
  }));

  out.push_back(check("recognition_roundtrip", 200, [&](std::size_t) -> std::string {
    const BottMatrix l = random_bott(rng, uniform(rng, 1, 6), -3, 3);
    const CharMatrix m = from_bott_matrix(l);
    const auto rec = is_bott(m);
    if (!rec.is_bott) return "Bott matrix rejected: " + l.to_string();
    return to_bott_matrix(m, *rec.sigma) == l ? "" : "roundtrip changed " + l.to_string();
  }));

  out.push_back(check("acyclic_iff_triangularizable", 150, [&](std::size_t) -> std::string {
    const std::size_t n = uniform(rng, 2, 5);
    std::vector<std::vector<long>> rows(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      rows[i][i] = 1;
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && uniform(rng, 0, 3) == 0) rows[i][j] = uniform(rng, -2, 2);
      }
    }
    const CharMatrix m = CharMatrix::from_int_rows(rows);
    if (!validate_characteristic(m)) return "";
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    bool exists = false;
    do {
      const auto sigma = StagePermutation::from_order(order);
      bool upper = true;
      for (std::size_t i = 0; i < n && upper; ++i) {
        for (std::size_t j = 0; j < n && upper; ++j) {
          if (i != j && m(i, j) != 0 && sigma(i) > sigma(j)) upper = false;
        }
      }
      exists = exists || upper;
    } while (!exists && std::next_permutation(order.begin(), order.end()));
    return is_bott(m).is_bott == exists ? "" : "digraph test disagrees with permutation search";
  }));

  out.push_back(check("cyclic_minor_closed_form", 100, [&](std::size_t) -> std::string {
    std::vector<Integer> h(uniform(rng, 2, 6));
    for (auto& x : h) x = uniform(rng, -4, 4);
    return bareiss_determinant(cyclic_matrix(h)) == cyclic_minor(h) ? "" : "closed form differs";
  }));

  out.push_back(check("two_local_matches_integral_twist", 20, [&](std::size_t) -> std::string {
    const BottMatrix l = random_bott(rng, 3, -2, 2);
    TwistOptions z2;
    z2.ring = CoeffRing::TwoLocalZ;
    return twist_number(l).twist == twist_number(l, z2).twist ? "" : "ring modes differ on " + l.to_string();
  }));

  out.push_back(check("hirzebruch_line_sum_scan", 81, [&](std::size_t i) -> std::string {
    const long a1 = static_cast<long>(i / 9) - 4;
    const long a2 = static_cast<long>(i % 9) - 4;
    const BottMatrix h = BottMatrix::from_int_rows({{0, 1}, {0, 0}});
    const auto ring = CohomologyRing::create(h);
    const LineClass alpha = LineClass::from_ints({a1, a2});
    const bool chern = line_sum_trivial(*ring, alpha, -alpha);
    const bool coeff = square_zero_condition(h, alpha);
    const bool closed = a2 == -2 * a1 || a2 == 0;
    return chern == coeff && coeff == closed ? "" : "criteria differ at " + vec_text(alpha.coeffs);
  }));

  out.push_back(check("parallel_matches_serial", 10, [&](std::size_t) -> std::string {
    IntegerMatrix m(8, std::vector<Integer>(8));
    for (auto& r : m) {
      for (auto& x : r) x = uniform(rng, -2, 2);
    }
    if (principal_minors(m, Execution::Serial) != principal_minors(m, Execution::Parallel)) return "principal minors";
    std::vector<OneTwistClass> corpus;
    for (int k = 0; k < 40; ++k) corpus.push_back(random_alpha(rng, 3, 3));
    const auto s = classify(corpus, Execution::Serial);
    const auto p = classify(corpus, Execution::Parallel);
    if (s.size() != p.size()) return "classification";
    for (std::size_t c = 0; c < s.size(); ++c) {
      if (s[c].members != p[c].members || s[c].representative != p[c].representative) return "classification";
    }
    const BottMatrix a = random_bott(rng, 3, -2, 2);
    const BottMatrix b = random_bott(rng, 3, -2, 2);
    OracleOptions par;
    par.execution = Execution::Parallel;
    const auto rs = ring_isomorphic(a, b, serial_oracle);
    const auto rp = ring_isomorphic(a, b, par);
    if (rs.verdict != rp.verdict || rs.witness != rp.witness) return "isomorphism search";
    return "";
  }));

  return out;
}

}  // namespace bott
