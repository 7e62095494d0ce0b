#include "bott/cli.hpp"

#include <json.hpp>
#include <sstream>

#include "bott/quasitoric.hpp"
#include "bott/ring.hpp"
#include "bott/selftest.hpp"
#include "bott/twist_analysis.hpp"

namespace bott {

using Json = nlohmann::ordered_json;

std::optional<OutputFormat> parse_output_format(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "text") return OutputFormat::Text;
  return std::nullopt;
}

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json parse_json(std::string_view text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string(what) + ": invalid JSON (" + e.what() + ")");
  }
}

long as_integer(const Json& v, const char* what) {
  if (!v.is_number_integer()) throw InputError(std::string(what) + ": entries must be integers");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    throw InputError(std::string(what) + ": entry out of range");
  }
  return v.get<long>();
}

std::vector<long> parse_vector(std::string_view text, const char* what) {
  const Json j = parse_json(text, what);
  if (!j.is_array()) throw InputError(std::string(what) + ": expected a JSON array of integers");
  std::vector<long> out;
  for (const auto& v : j) out.push_back(as_integer(v, what));
  return out;
}

std::vector<std::vector<long>> parse_matrix(std::string_view text, const char* what) {
  const Json j = parse_json(text, what);
  if (!j.is_array() || j.empty()) throw InputError(std::string(what) + ": expected a non-empty array of rows");
  std::vector<std::vector<long>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError(std::string(what) + ": every row must be an array");
    std::vector<long> r;
    for (const auto& v : row) r.push_back(as_integer(v, what));
    out.push_back(std::move(r));
  }
  return out;
}

Json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json matrix_json(const BottMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.rows()) {
    Json row = Json::array();
    for (const auto& v : r) row.push_back(rational_json(v));
    rows.push_back(row);
  }
  return rows;
}

Json rational_rows_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m) {
    Json row = Json::array();
    for (const auto& v : r) row.push_back(rational_json(v));
    rows.push_back(row);
  }
  return rows;
}

Json vector_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(integer_json(z));
  return out;
}

Json one_based(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t x : v) out.push_back(x + 1);
  return out;
}

// Sorted (index list, numerator, denominator) triples with 1-based indices.
Json ring_element_json(const RingElement& e) {
  std::vector<std::pair<std::vector<std::size_t>, Rational>> terms;
  for (const auto& [m, c] : e.terms()) {
    std::vector<std::size_t> idx = indices_of(m);
    for (auto& i : idx) ++i;
    terms.emplace_back(std::move(idx), c);
  }
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Json out = Json::array();
  for (const auto& [idx, c] : terms) out.push_back(Json::array({idx, integer_json(c.get_num()), integer_json(c.get_den())}));
  return out;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string vector_text(const std::vector<Integer>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string matrix_text(const BottMatrix& m) {
  std::string s = "[";
  const auto rows = m.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) s += ",";
      s += to_string(rows[i][j]);
    }
    s += "]";
  }
  return s + "]";
}

// Quoted CSV cell; the JSON text of a value never contains a double quote
// except for rational strings, which are doubled.
std::string csv_cell(const Json& j) {
  std::string s = j.dump();
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  return out + "\"";
}

CommandResult input_error(const std::string& message) { return {2, "", message}; }

void check_config(const RunConfig& config) {
  if (config.coeff_bound < 1) throw InputError("--bound must be at least 1");
  if (config.n_max < 1) throw InputError("n_max must be at least 1");
}

Json move_json(const Move& mv) {
  Json j;
  j["kind"] = to_string(mv.kind);
  switch (mv.kind) {
    case Move::Kind::Conjugate:
    case Move::Kind::NormalizeTrivialFirst:
      j["permutation"] = one_based(mv.sigma.image);
      break;
    case Move::Kind::TrivializeStage:
      j["stage"] = mv.stage + 1;
      break;
    case Move::Kind::Retwist: {
      Json w = Json::array();
      for (const auto& c : mv.shift.coeffs) w.push_back(rational_json(c));
      j["shift"] = w;
      break;
    }
  }
  j["before"] = matrix_json(mv.before);
  j["after"] = matrix_json(mv.after);
  return j;
}

}  // namespace

CommandResult cmd_twist(std::string_view matrix_json_text, const RunConfig& config) {
  BottMatrix lambda;
  try {
    check_config(config);
    lambda = BottMatrix::from_int_rows(parse_matrix(matrix_json_text, "matrix"));
  } catch (const InputError& e) {
    return input_error(e.what());
  } catch (const DomainError& e) {
    return input_error(e.what());
  }
  TwistOptions options;
  options.ring = config.coeff_ring;
  options.certified = config.certified;
  options.certified_max_n = config.n_max;
  options.oracle.ring = config.coeff_ring;
  options.oracle.coeff_bound = config.coeff_bound;
  TwistReport report;
  try {
    report = twist_number(lambda, options);
  } catch (const DomainError& e) {
    return input_error(e.what());
  }

  int exit_code = 0;
  std::string problem;
  if (config.certified) {
    if (!report.search_complete) problem = "move search budget exhausted";
    if (report.oracle && report.oracle->budget_exhausted) problem = "oracle budget exhausted";
    if (report.oracle_disagrees) problem = "move search and oracle disagree";
    if (!problem.empty()) exit_code = 3;
  }

  CommandResult result;
  result.exit_code = exit_code;
  result.error = problem;
  switch (config.format) {
    case OutputFormat::Json: {
      Json j;
      j["ring"] = std::string(to_string(config.coeff_ring));
      j["input"] = matrix_json(lambda);
      j["twist"] = report.twist;
      j["certified"] = report.certified_minimal;
      j["proven_minimal"] = report.proven_minimal;
      j["search_complete"] = report.search_complete;
      j["minimal_form"] = matrix_json(report.minimal_form);
      Json moves = Json::array();
      for (const auto& mv : report.witness_moves) moves.push_back(move_json(mv));
      j["moves"] = moves;
      if (report.oracle) {
        const auto& o = *report.oracle;
        Json oj;
        oj["coeff_bound"] = config.coeff_bound;
        oj["complexity"] = o.value;
        oj["lower_bound"] = o.lower_bound;
        oj["lower_bound_modulus"] = o.lower_bound_modulus ? Json(*o.lower_bound_modulus) : Json(nullptr);
        oj["certified"] = o.certified;
        oj["budget_exhausted"] = o.budget_exhausted;
        oj["agrees"] = !report.oracle_disagrees;
        oj["presentation"] = matrix_json(o.presentation);
        oj["generator_change"] = rational_rows_json(o.witness.rows);
        j["oracle"] = oj;
      }
      result.output = dump(j);
      break;
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "twist,certified,proven_minimal,search_complete,moves,minimal_form";
      if (report.oracle) os << ",oracle_complexity,oracle_lower_bound,oracle_agrees";
      os << "\n";
      os << report.twist << "," << (report.certified_minimal ? "true" : "false") << ","
         << (report.proven_minimal ? "true" : "false") << "," << (report.search_complete ? "true" : "false") << ","
         << report.witness_moves.size() << "," << csv_cell(matrix_json(report.minimal_form));
      if (report.oracle) {
        os << "," << report.oracle->value << "," << report.oracle->lower_bound << ","
           << (report.oracle_disagrees ? "false" : "true");
      }
      os << "\n";
      result.output = os.str();
      break;
    }
    case OutputFormat::Text: {
      std::ostringstream os;
      os << "twist number: " << report.twist << "\n";
      os << "certified: " << (report.certified_minimal ? "yes" : "no")
         << (report.proven_minimal ? " (proven minimal)" : "") << "\n";
      os << "minimal form: " << matrix_text(report.minimal_form) << "\n";
      for (std::size_t i = 0; i < report.witness_moves.size(); ++i) {
        const auto& mv = report.witness_moves[i];
        os << "  " << i + 1 << ". " << to_string(mv.kind);
        if (mv.kind == Move::Kind::TrivializeStage) os << " stage " << mv.stage + 1;
        os << " -> " << matrix_text(mv.after) << "\n";
      }
      if (report.oracle) {
        os << "oracle complexity: " << report.oracle->value << " (lower bound " << report.oracle->lower_bound
           << ")" << (report.oracle_disagrees ? " DISAGREES" : "") << "\n";
      }
      result.output = os.str();
      break;
    }
  }
  return result;
}

CommandResult cmd_equiv(std::string_view vector_a_json, std::string_view vector_b_json, const RunConfig& config) {
  OneTwistClass a;
  OneTwistClass b;
  try {
    check_config(config);
    if (config.coeff_ring == CoeffRing::RationalQ) {
      throw InputError("one-twist equivalence is decided with integral or 2-local coefficients only");
    }
    a = OneTwistClass::from_ints(parse_vector(vector_a_json, "first vector"));
    b = OneTwistClass::from_ints(parse_vector(vector_b_json, "second vector"));
    if (a.alpha.size() != b.alpha.size()) throw InputError("vectors have different lengths");
  } catch (const InputError& e) {
    return input_error(e.what());
  }
  const auto witness = diffeo_equivalent(a, b);
  CommandResult result;
  result.exit_code = witness ? 0 : 1;
  switch (config.format) {
    case OutputFormat::Json: {
      Json j;
      j["a"] = vector_json(a.alpha);
      j["b"] = vector_json(b.alpha);
      j["equivalent"] = witness.has_value();
      if (witness) {
        j["sigma"] = one_based(witness->sigma);
        j["parity_checks"] = witness->parity_checks;
        j["product_checks"] = witness->product_checks;
      }
      j["pontrjagin_a"] = vector_json(pontrjagin_invariant(a));
      j["pontrjagin_b"] = vector_json(pontrjagin_invariant(b));
      result.output = dump(j);
      break;
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "a,b,equivalent,sigma\n";
      os << csv_cell(vector_json(a.alpha)) << "," << csv_cell(vector_json(b.alpha)) << ","
         << (witness ? "true" : "false") << "," << (witness ? csv_cell(one_based(witness->sigma)) : "") << "\n";
      result.output = os.str();
      break;
    }
    case OutputFormat::Text: {
      std::ostringstream os;
      os << vector_text(a.alpha) << (witness ? " ~ " : " !~ ") << vector_text(b.alpha) << "\n";
      if (witness) os << "sigma: " << one_based(witness->sigma).dump() << "\n";
      result.output = os.str();
      break;
    }
  }
  return result;
}

std::string render_classification(const std::vector<EquivalenceClassReport>& classes, std::size_t n,
                                  OutputFormat format) {
  const auto pontrjagin_class = [n](const OneTwistClass& rep) -> Json {
    if (n < 2) return Json::array({Json::array({Json::array(), 1, 1})});
    const auto base = CohomologyRing::trivial(n - 1);
    std::vector<Rational> coeffs(rep.alpha.begin(), rep.alpha.end());
    return ring_element_json(pontrjagin_one_twist(*base, LineClass(coeffs)));
  };
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json: {
      Json j;
      j["n"] = n;
      j["class_count"] = classes.size();
      Json arr = Json::array();
      for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto& cls = classes[c];
        Json cj;
        cj["class_id"] = c;
        cj["representative"] = vector_json(cls.representative.alpha);
        cj["size"] = cls.members.size();
        cj["pontrjagin"] = vector_json(cls.pontrjagin);
        cj["pontrjagin_class"] = pontrjagin_class(cls.representative);
        Json members = Json::array();
        for (const auto& m : cls.members) members.push_back(vector_json(m.alpha));
        cj["members"] = members;
        arr.push_back(cj);
      }
      j["classes"] = arr;
      return dump(j);
    }
    case OutputFormat::Csv: {
      os << "class_id,size,representative,pontrjagin,members\n";
      for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto& cls = classes[c];
        Json members = Json::array();
        for (const auto& m : cls.members) members.push_back(vector_json(m.alpha));
        os << c << "," << cls.members.size() << "," << csv_cell(vector_json(cls.representative.alpha)) << ","
           << csv_cell(vector_json(cls.pontrjagin)) << "," << csv_cell(members) << "\n";
      }
      return os.str();
    }
    case OutputFormat::Text: {
      os << classes.size() << " classes (n = " << n << ")\n";
      for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto& cls = classes[c];
        os << "class " << c << ": representative " << vector_text(cls.representative.alpha) << ", size "
           << cls.members.size() << ", pontrjagin " << vector_json(cls.pontrjagin).dump() << "\n   ";
        for (const auto& m : cls.members) os << " " << vector_text(m.alpha);
        os << "\n";
      }
      return os.str();
    }
  }
  return os.str();
}

CommandResult cmd_classify(std::size_t n, long bound, std::optional<std::string_view> corpus_json,
                           const RunConfig& config) {
  std::vector<OneTwistClass> corpus;
  try {
    check_config(config);
    if (config.coeff_ring == CoeffRing::RationalQ) {
      throw InputError("one-twist classification is decided with integral or 2-local coefficients only");
    }
    if (n < 1) throw InputError("--n must be at least 1");
    if (corpus_json) {
      const Json j = parse_json(*corpus_json, "corpus");
      if (!j.is_array()) throw InputError("corpus: expected a JSON array of integer vectors");
      for (const auto& v : j) {
        if (!v.is_array()) throw InputError("corpus: every entry must be an array");
        std::vector<long> alpha;
        for (const auto& x : v) alpha.push_back(as_integer(x, "corpus"));
        if (alpha.size() + 1 != n) throw InputError("corpus: every vector must have n-1 entries");
        corpus.push_back(OneTwistClass::from_ints(alpha));
      }
    } else {
      if (bound < 0) throw InputError("--bound must be non-negative");
      double size = 1;
      for (std::size_t i = 0; i + 1 < n; ++i) size *= static_cast<double>(2 * bound + 1);
      if (size > static_cast<double>(kClassifyCorpusLimit)) {
        return {3, "", "corpus of " + std::to_string(static_cast<long long>(size)) + " vectors exceeds the limit of " +
                           std::to_string(kClassifyCorpusLimit)};
      }
      corpus = one_twist_corpus(n, bound);
    }
  } catch (const InputError& e) {
    return input_error(e.what());
  }
  return {0, render_classification(classify(corpus), n, config.format), ""};
}

CommandResult cmd_recognize(std::string_view matrix_json_text, const RunConfig& config) {
  CharMatrix m;
  try {
    check_config(config);
    m = CharMatrix::from_int_rows(parse_matrix(matrix_json_text, "characteristic matrix"));
    if (m.size() > 20) throw InputError("characteristic matrices are limited to n <= 20");
  } catch (const InputError& e) {
    return input_error(e.what());
  } catch (const DomainError& e) {
    return input_error(e.what());
  }
  Json j;
  Json normalized = Json::array();
  for (const auto& row : m.rows()) normalized.push_back(vector_json(row));
  j["normalized"] = normalized;
  const bool valid = validate_characteristic(m);
  j["characteristic"] = valid;
  std::optional<BottRecognition> rec;
  std::optional<BottMatrix> lambda;
  if (valid) {
    rec = is_bott(m);
    j["bott"] = rec->is_bott;
    if (rec->is_bott) {
      lambda = to_bott_matrix(m, *rec->sigma);
      j["permutation"] = one_based(rec->sigma->image);
      j["bott_matrix"] = matrix_json(*lambda);
    } else {
      j["cycle"] = one_based(rec->cycle);
    }
  } else {
    j["bott"] = false;
    j["reason"] = "some principal minor is not +1 or -1";
  }
  CommandResult result;
  result.exit_code = lambda ? 0 : 1;
  switch (config.format) {
    case OutputFormat::Json:
      result.output = dump(j);
      break;
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "characteristic,bott,permutation,bott_matrix\n";
      os << (valid ? "true" : "false") << "," << (lambda ? "true" : "false") << ","
         << (lambda ? csv_cell(j["permutation"]) : "") << "," << (lambda ? csv_cell(j["bott_matrix"]) : "") << "\n";
      result.output = os.str();
      break;
    }
    case OutputFormat::Text: {
      std::ostringstream os;
      if (!valid) {
        os << "not a characteristic matrix: some principal minor is not +1 or -1\n";
      } else if (!lambda) {
        os << "characteristic matrix, not Bott: cycle " << j["cycle"].dump() << "\n";
      } else {
        os << "Bott; permutation " << j["permutation"].dump() << "; Bott matrix " << matrix_text(*lambda) << "\n";
      }
      result.output = os.str();
      break;
    }
  }
  return result;
}

CommandResult cmd_selftest(const RunConfig& config) {
  const auto results = run_selftest(config.seed);
  const bool ok = std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; });
  std::ostringstream os;
  switch (config.format) {
    case OutputFormat::Json: {
      Json j;
      j["seed"] = config.seed;
      Json arr = Json::array();
      for (const auto& r : results) {
        Json rj;
        rj["property"] = r.name;
        rj["passed"] = r.passed;
        rj["cases"] = r.cases;
        if (!r.passed) rj["detail"] = r.detail;
        arr.push_back(rj);
      }
      j["properties"] = arr;
      j["all_passed"] = ok;
      os << dump(j);
      break;
    }
    case OutputFormat::Csv:
      os << "property,passed,cases,detail\n";
      for (const auto& r : results) {
        os << r.name << "," << (r.passed ? "true" : "false") << "," << r.cases << "," << csv_cell(Json(r.detail))
           << "\n";
      }
      break;
    case OutputFormat::Text:
      for (const auto& r : results) {
        os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
        if (!r.passed) os << ": " << r.detail;
        os << "\n";
      }
      break;
  }
  return {ok ? 0 : 1, os.str(), ""};
}

}  // namespace bott
