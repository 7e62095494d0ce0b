// Writes a one-twist classification table whose partition comes from the
// ring-isomorphism oracle rather than from diffeo_equivalent.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "bott/cli.hpp"
#include "bott/one_twist.hpp"
#include "bott/twist_analysis.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate an oracle-backed one-twist classification table"};
  std::size_t n = 3;
  long bound = 1;
  std::string out_path;
  app.add_option("--n", n, "Tower height")->required();
  app.add_option("--bound", bound, "Twist entries range over [-bound, bound]")->required();
  app.add_option("--out", out_path, "Output file (stdout when omitted)");
  CLI11_PARSE(app, argc, argv);

  const auto corpus = bott::one_twist_corpus(n, bound);
  bool undecided = false;
  const auto relation = [&](const bott::OneTwistClass& a, const bott::OneTwistClass& b) {
    const auto r = bott::ring_isomorphic(a.to_bott_matrix(), b.to_bott_matrix());
    if (r.verdict == bott::Verdict::Unknown) {
#pragma omp critical
      undecided = true;
    }
    return r.verdict == bott::Verdict::Isomorphic;
  };
  const auto classes = bott::partition_by(corpus, relation, bott::Execution::Serial);
  if (undecided) {
    std::cerr << "bott_golden: the oracle left some pair undecided\n";
    return 3;
  }
  const std::string table = bott::render_classification(classes, n, bott::OutputFormat::Json);
  if (out_path.empty()) {
    std::cout << table;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << table;
  return out ? 0 : 2;
}
