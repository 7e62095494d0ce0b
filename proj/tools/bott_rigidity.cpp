#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bott/cli.hpp"
#include "bott/kernels.hpp"

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const bott::CommandResult& r) {
  std::cout << r.output;
  if (!r.error.empty()) std::cerr << "bott_rigidity: " << r.error << "\n";
  return r.exit_code;
}

int missing(const std::string& path) {
  std::cerr << "bott_rigidity: cannot read " << path << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bott manifold rigidity tools: twist numbers, one-twist classification, Bott recognition"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string ring_name = "z";
  std::string format_name = "json";
  bott::RunConfig config;
  app.add_option("--ring", ring_name, "Coefficient ring: z, q or z2local")
      ->check(CLI::IsMember({"z", "q", "z2local"}));
  app.add_option("--bound", config.coeff_bound, "Coefficient bound for oracle searches");
  app.add_flag("--certified", config.certified, "Run the complexity oracle alongside the move search");
  app.add_option("--format", format_name, "Output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", config.seed, "Seed for randomized checks");
  app.add_option("--n-max", config.n_max, "Largest tower accepted by the certified oracle");

  std::string twist_file;
  auto* twist = app.add_subcommand("twist", "Twist number of a Bott matrix");
  twist->add_option("matrix", twist_file, "JSON file with the associated matrix")->required();

  std::string equiv_a;
  std::string equiv_b;
  auto* equiv = app.add_subcommand("equiv", "Diffeomorphism test for one-twist Bott manifolds");
  equiv->add_option("a", equiv_a, "JSON file with the first twist vector")->required();
  equiv->add_option("b", equiv_b, "JSON file with the second twist vector")->required();

  std::size_t classify_n = 0;
  long classify_bound = -1;
  std::string corpus_file;
  auto* classify = app.add_subcommand("classify", "Partition one-twist vectors into diffeomorphism classes");
  classify->add_option("--n", classify_n, "Tower height")->required();
  auto* classify_bound_opt = classify->add_option("--bound", classify_bound, "Entry bound of the enumerated corpus");
  classify->add_option("--corpus", corpus_file, "JSON array of vectors to classify instead of enumerating");

  std::string recognize_file;
  auto* recognize = app.add_subcommand("recognize", "Decide whether a characteristic matrix comes from a Bott tower");
  recognize->add_option("matrix", recognize_file, "JSON file with the characteristic matrix")->required();

  auto* selftest = app.add_subcommand("selftest", "Run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (const char* threads = std::getenv("BOTT_RIGIDITY_THREADS")) {
    char* end = nullptr;
    const long t = std::strtol(threads, &end, 10);
    if (end == threads || *end != '\0' || t < 1) {
      std::cerr << "bott_rigidity: BOTT_RIGIDITY_THREADS must be a positive integer\n";
      return 2;
    }
    bott::set_thread_count(static_cast<int>(t));
  }
  config.coeff_ring = *bott::parse_coeff_ring(ring_name);
  config.format = *bott::parse_output_format(format_name);

  if (*twist) {
    const auto text = read_file(twist_file);
    if (!text) return missing(twist_file);
    return emit(bott::cmd_twist(*text, config));
  }
  if (*equiv) {
    const auto a = read_file(equiv_a);
    if (!a) return missing(equiv_a);
    const auto b = read_file(equiv_b);
    if (!b) return missing(equiv_b);
    return emit(bott::cmd_equiv(*a, *b, config));
  }
  if (*classify) {
    if (!corpus_file.empty()) {
      const auto text = read_file(corpus_file);
      if (!text) return missing(corpus_file);
      return emit(bott::cmd_classify(classify_n, 0, std::string_view(*text), config));
    }
    if (classify_bound_opt->count() == 0) {
      std::cerr << "bott_rigidity: classify needs --bound or --corpus\n";
      return 2;
    }
    return emit(bott::cmd_classify(classify_n, classify_bound, std::nullopt, config));
  }
  if (*recognize) {
    const auto text = read_file(recognize_file);
    if (!text) return missing(recognize_file);
    return emit(bott::cmd_recognize(*text, config));
  }
  if (*selftest) return emit(bott::cmd_selftest(config));
  return 2;
}
