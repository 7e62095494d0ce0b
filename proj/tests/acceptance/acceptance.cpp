// One line per acceptance criterion; exit status 0 iff every line is PASS.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <json.hpp>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bott/cli.hpp"
#include "bott/one_twist.hpp"
#include "bott/quasitoric.hpp"
#include "bott/ring.hpp"
#include "bott/twist_analysis.hpp"

namespace {

using namespace bott;
using Json = nlohmann::json;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

std::string hirzebruch(long c) { return "[[0," + std::to_string(c) + "],[0,0]]"; }

// Criterion 1 under a given ring; verdicts are the reported twist numbers.
struct HirzebruchRun {
  std::vector<long> twists;
  std::size_t wrong = 0;
  double seconds = 0;
};

HirzebruchRun run_hirzebruch(CoeffRing ring) {
  RunConfig config;
  config.coeff_ring = ring;
  HirzebruchRun run;
  Clock clock;
  for (long k = -3; k <= 3; ++k) {
    for (long parity = 0; parity <= 1; ++parity) {
      const auto r = cmd_twist(hirzebruch(2 * k + parity), config);
      const long twist = r.exit_code == 0 ? Json::parse(r.output)["twist"].get<long>() : -1;
      run.twists.push_back(twist);
      if (twist != parity) ++run.wrong;
    }
  }
  run.seconds = clock.seconds();
  return run;
}

std::vector<BottMatrix> three_stage_grid() {
  std::vector<BottMatrix> out;
  for (long a = -2; a <= 2; ++a) {
    for (long b = -2; b <= 2; ++b) {
      for (long c = -2; c <= 2; ++c) out.push_back(BottMatrix::from_int_rows({{0, a, b}, {0, 0, c}, {0, 0, 0}}));
    }
  }
  return out;
}

struct ComplexityRun {
  std::vector<std::size_t> twists;
  std::size_t disagreements = 0;
  std::size_t certified = 0;
  std::string first_disagreement;
  double seconds = 0;
};

ComplexityRun run_twist_vs_complexity(CoeffRing ring) {
  TwistOptions twist_options;
  twist_options.ring = ring;
  twist_options.oracle.ring = ring;
  OracleOptions oracle;
  oracle.ring = ring;
  oracle.coeff_bound = 2;
  ComplexityRun run;
  Clock clock;
  for (const auto& lambda : three_stage_grid()) {
    const std::size_t twist = twist_number(lambda, twist_options).twist;
    const auto complexity = complexity_oracle(lambda, oracle);
    run.twists.push_back(twist);
    if (complexity.certified) ++run.certified;
    if (twist != complexity.value) {
      if (run.disagreements++ == 0) {
        run.first_disagreement = lambda.to_string() + " twist " + std::to_string(twist) + " complexity " +
                                 std::to_string(complexity.value);
      }
    }
  }
  run.seconds = clock.seconds();
  return run;
}

struct PairRun {
  std::vector<std::pair<OneTwistClass, OneTwistClass>> equivalent_pairs;
  std::vector<int> verdicts;  // 1 equivalent, 0 not, -1 undecided or disagreement
  std::size_t disagreements = 0;
  std::size_t unknown = 0;
  std::size_t pairs = 0;
  double seconds = 0;
};

PairRun run_one_twist_pairs(CoeffRing ring) {
  const auto corpus = one_twist_corpus(3, 2);
  OracleOptions oracle;
  oracle.ring = ring;
  PairRun run;
  Clock clock;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = i; j < corpus.size(); ++j) {
      ++run.pairs;
      const bool fast = diffeo_equivalent(corpus[i], corpus[j]).has_value();
      const auto r = ring_isomorphic(corpus[i].to_bott_matrix(), corpus[j].to_bott_matrix(), oracle);
      if (r.verdict == Verdict::Unknown) {
        ++run.unknown;
        run.verdicts.push_back(-1);
        continue;
      }
      const bool slow = r.verdict == Verdict::Isomorphic;
      if (slow && !verify_generator_change(corpus[i].to_bott_matrix(), corpus[j].to_bott_matrix(), *r.witness, ring)) {
        ++run.disagreements;
        run.verdicts.push_back(-1);
        continue;
      }
      if (fast != slow) {
        ++run.disagreements;
        run.verdicts.push_back(-1);
        continue;
      }
      run.verdicts.push_back(fast ? 1 : 0);
      if (fast) run.equivalent_pairs.emplace_back(corpus[i], corpus[j]);
    }
  }
  run.seconds = clock.seconds();
  return run;
}

Outcome criterion_1(const HirzebruchRun& run) {
  std::ostringstream d;
  d << std::fixed << std::setprecision(3);
  d << (run.twists.size() - run.wrong) << "/" << run.twists.size() << " Hirzebruch matrices with twist = parity, "
    << run.seconds << " s";
  return {run.wrong == 0 && run.seconds < 1.0, d.str()};
}

Outcome criterion_2() {
  std::ostringstream d;
  d << std::fixed << std::setprecision(3);
  bool pass = true;
  for (long c = 1; c <= 3; ++c) {
    const auto lambda1 = BottMatrix::from_int_rows({{0, 1, c}, {0, 0, -2 * c}, {0, 0, 0}});
    const auto lambda2 = BottMatrix::from_int_rows({{0, 1, c}, {0, 0, 0}, {0, 0, 0}});
    OracleOptions options;
    options.coeff_bound = 2;
    Clock clock;
    const auto r = ring_isomorphic(lambda1, lambda2, options);
    const double s = clock.seconds();
    const bool ok = r.verdict == Verdict::Isomorphic && r.witness &&
                    verify_generator_change(lambda1, lambda2, *r.witness, CoeffRing::IntegerZ) &&
                    square_zero_rows_satisfy_constraints(lambda1, lambda2, *r.witness) && s < 10.0;
    pass = pass && ok;
    d << "c=" << c << (ok ? " witnessed" : " FAILED") << " (" << s << " s)" << (c < 3 ? ", " : "");
  }
  return {pass, d.str()};
}

Outcome criterion_3(const ComplexityRun& run) {
  std::ostringstream d;
  d << std::fixed << std::setprecision(3);
  d << (run.twists.size() - run.disagreements) << "/" << run.twists.size()
    << " matrices with twist = complexity (bound 2), " << run.certified << " certified by modular lower bounds, "
    << run.seconds << " s";
  if (run.disagreements) d << "; first: " << run.first_disagreement;
  return {run.disagreements == 0 && run.twists.size() == 125 && run.seconds < 600.0, d.str()};
}

Outcome criterion_4() {
  std::mt19937_64 rng(4);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  std::size_t agree = 0;
  std::size_t nontrivial = 0;
  std::string first;
  Clock clock;
  const std::size_t samples = 500;
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t n = static_cast<std::size_t>(uniform(2, 4));
    BottMatrix lambda(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (uniform(0, 1)) lambda.set(i, j, Rational(uniform(-2, 2)));
      }
    }
    const auto perms = admissible_permutations(lambda);
    const auto& sigma = perms[static_cast<std::size_t>(uniform(0, static_cast<long>(perms.size()) - 1))];
    if (!(sigma == StagePermutation::identity(n))) ++nontrivial;
    const auto a = twist_number(lambda).twist;
    const auto b = twist_number(conjugate(lambda, sigma)).twist;
    if (a == b) {
      ++agree;
    } else if (first.empty()) {
      first = lambda.to_string();
    }
  }
  std::ostringstream d;
  d << std::fixed << std::setprecision(3);
  d << agree << "/" << samples << " pairs agree (" << nontrivial << " with a non-identity permutation), "
    << clock.seconds() << " s";
  if (!first.empty()) d << "; first: " << first;
  return {agree == samples, d.str()};
}

Outcome criterion_5(const PairRun& run) {
  std::ostringstream d;
  d << std::fixed << std::setprecision(3);
  d << run.pairs << " pairs, " << run.equivalent_pairs.size() << " equivalent, " << run.disagreements
    << " disagreements, " << run.unknown << " undecided, " << run.seconds << " s";
  return {run.pairs == 325 && run.disagreements == 0 && run.unknown == 0 && run.seconds < 300.0, d.str()};
}

Outcome criterion_6() {
  RunConfig config;
  const auto r = cmd_classify(2, 4, std::nullopt, config);
  if (r.exit_code != 0) return {false, "classify exited " + std::to_string(r.exit_code)};
  const auto j = Json::parse(r.output);
  std::set<std::set<long>> classes;
  for (const auto& c : j["classes"]) {
    std::set<long> members;
    for (const auto& m : c["members"]) members.insert(m[0].get<long>());
    classes.insert(members);
  }
  const std::set<std::set<long>> expected{{-4, -2, 0, 2, 4}, {-3, -1, 1, 3}};
  std::ostringstream d;
  d << std::fixed << std::setprecision(3);
  d << j["class_count"].get<long>() << " classes";
  return {j["class_count"] == 2 && classes == expected, d.str()};
}

Outcome criterion_7() {
  const auto base = CohomologyRing::create(BottMatrix::from_int_rows({{0, 1}, {0, 0}}));
  std::size_t points = 0;
  std::size_t agree = 0;
  std::size_t trivial = 0;
  for (long a1 = -4; a1 <= 4; ++a1) {
    for (long a2 = -4; a2 <= 4; ++a2) {
      ++points;
      const auto alpha = LineClass::from_ints({a1, a2});
      const bool chern = line_sum_trivial(*base, alpha, -alpha);
      const bool coefficients = square_zero_condition(base->matrix(), alpha);
      const bool closed = a2 == -2 * a1 || a2 == 0;
      if (chern == coefficients && chern == closed) ++agree;
      if (chern) ++trivial;
    }
  }
  std::ostringstream d;
  d << std::fixed << std::setprecision(3);
  d << agree << "/" << points << " grid points agree, " << trivial << " trivial";
  return {agree == points, d.str()};
}

Outcome criterion_8() {
  std::mt19937_64 rng(8);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  std::size_t roundtrips = 0;
  std::size_t minors_ok = 0;
  const std::size_t samples = 1000;
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, 6));
    BottMatrix lambda(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (uniform(0, 1)) lambda.set(i, j, Rational(uniform(-3, 3)));
      }
    }
    // Relabel the facet pairs so that recognition has to find the order.
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    const auto upper = from_bott_matrix(lambda).rows();
    IntegerMatrix scrambled(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) scrambled[p[i]][p[j]] = upper[i][j];
    }
    const auto m = CharMatrix::from_rows(scrambled);
    try {
      const auto r = is_bott(m);
      if (!r.is_bott) continue;
      const auto minors = principal_minors(m.rows());
      if (std::all_of(minors.begin(), minors.end(), [](const Integer& d) { return d == 1; })) ++minors_ok;
      if (to_bott_matrix(m, *r.sigma) == conjugate(lambda, *r.sigma * StagePermutation{p})) ++roundtrips;
    } catch (const std::exception&) {
    }
  }
  std::size_t rejected = 0;
  std::ostringstream d;
  d << std::fixed << std::setprecision(3);
  const auto two_cycle = CharMatrix::from_int_rows({{1, 1}, {2, 1}});
  const auto three_cycle = CharMatrix::from_int_rows({{1, 1, 0}, {0, 1, 1}, {-2, 0, 1}});
  for (const auto& m : {two_cycle, three_cycle}) {
    if (validate_characteristic(m) && !is_bott(m).is_bott) ++rejected;
  }
  const bool singular_rejected = !validate_characteristic(CharMatrix::from_int_rows({{1, 1}, {1, 1}}));
  d << roundtrips << "/" << samples << " roundtrips, " << minors_ok << "/" << samples << " accepted with all minors +1, "
    << rejected << "/2 cycle counterexamples rejected, [[1,1],[1,1]] " << (singular_rejected ? "rejected" : "ACCEPTED");
  return {roundtrips == samples && minors_ok == samples && rejected == 2 && singular_rejected, d.str()};
}

Outcome criterion_9(const HirzebruchRun& z1, const ComplexityRun& z3, const PairRun& z5) {
  const auto l1 = run_hirzebruch(CoeffRing::TwoLocalZ);
  const auto l3 = run_twist_vs_complexity(CoeffRing::TwoLocalZ);
  const auto l5 = run_one_twist_pairs(CoeffRing::TwoLocalZ);
  const bool same1 = l1.twists == z1.twists && l1.wrong == 0;
  const bool same3 = l3.twists == z3.twists && l3.disagreements == 0;
  const bool same5 = l5.verdicts == z5.verdicts && l5.disagreements == 0 && l5.unknown == 0;
  std::ostringstream d;
  d << std::fixed << std::setprecision(3);
  d << "Hirzebruch " << (same1 ? "identical" : "DIFFERENT") << " (" << l1.seconds << " s), twist vs complexity "
    << (same3 ? "identical" : "DIFFERENT") << " (" << l3.seconds << " s), one-twist pairs "
    << (same5 ? "identical" : "DIFFERENT") << " (" << l5.seconds << " s)";
  return {same1 && same3 && same5, d.str()};
}

Outcome criterion_10(const PairRun& run) {
  std::size_t exceptions = 0;
  for (const auto& [a, b] : run.equivalent_pairs) {
    if (pontrjagin_invariant(a) != pontrjagin_invariant(b)) ++exceptions;
  }
  std::ostringstream d;
  d << std::fixed << std::setprecision(3);
  d << run.equivalent_pairs.size() << " equivalent pairs, " << exceptions << " with different Pontrjagin multisets";
  return {exceptions == 0 && !run.equivalent_pairs.empty(), d.str()};
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* name, const std::function<Outcome()>& run) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %2d %-32s %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
    std::fflush(stdout);
  };

  HirzebruchRun z1;
  ComplexityRun z3;
  PairRun z5;
  report(1, "hirzebruch_dichotomy", [&] {
    z1 = run_hirzebruch(CoeffRing::IntegerZ);
    return criterion_1(z1);
  });
  report(2, "case3_isomorphism_witness", criterion_2);
  report(3, "twist_equals_complexity_n3", [&] {
    z3 = run_twist_vs_complexity(CoeffRing::IntegerZ);
    return criterion_3(z3);
  });
  report(4, "twist_conjugation_invariant", criterion_4);
  report(5, "one_twist_matches_ring_oracle", [&] {
    z5 = run_one_twist_pairs(CoeffRing::IntegerZ);
    return criterion_5(z5);
  });
  report(6, "two_stage_classes", criterion_6);
  report(7, "line_sum_triviality_grid", criterion_7);
  report(8, "bott_recognition", criterion_8);
  report(9, "two_local_consistency", [&] { return criterion_9(z1, z3, z5); });
  report(10, "pontrjagin_preserved", [&] { return criterion_10(z5); });
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
