#include "numsys/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "json.hpp"

namespace numsys {

using Json = nlohmann::ordered_json;

namespace {

Integer parse_integer(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(std::to_string(j.get<unsigned long long>()))
                                                           : Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw InputError(path, "'" + s + "' is not a decimal integer");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  throw InputError(path, "expected an integer (number or decimal string)");
}

std::vector<Integer> parse_integer_list(const Json& doc, const std::string& key) {
  std::string path = "$." + key;
  if (!doc.contains(key)) throw InputError(path, "missing");
  const Json& arr = doc[key];
  if (!arr.is_array()) throw InputError(path, "expected a list");
  std::vector<Integer> out;
  for (std::size_t k = 0; k < arr.size(); ++k) out.push_back(parse_integer(arr[k], path + "[" + std::to_string(k) + "]"));
  return out;
}

unsigned long parse_count(const Json& j, const std::string& path) {
  Integer v = parse_integer(j, path);
  if (v < 0 || !v.fits_ulong_p()) throw InputError(path, "expected a nonnegative integer");
  return v.get_ui();
}

Json parse_document(const std::string& text, const char* format) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("$", std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("$", "expected an object");
  if (doc.contains("format")) {
    if (!doc["format"].is_string() || doc["format"].get<std::string>() != format)
      throw InputError("$.format", std::string("expected \"") + format + "\"");
  }
  return doc;
}

Json integers(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

std::string join(const std::vector<Integer>& v, const char* sep = ", ") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + v[k].get_str();
  return s;
}

std::string recurrence_text(const PositionalSystem& sys) {
  const std::size_t m = sys.order();
  std::string s = "U_{n+" + std::to_string(m) + "} =";
  bool first = true;
  for (std::size_t k = 0; k < m; ++k) {
    const Integer& c = sys.recurrence()[k];
    if (c == 0) continue;
    std::size_t shift = m - 1 - k;
    std::string term = shift ? "U_{n+" + std::to_string(shift) + "}" : "U_n";
    Integer a = abs(c);
    std::string coef = a == 1 ? "" : a.get_str();
    if (first)
      s += c < 0 ? " -" + coef + term : " " + coef + term;
    else
      s += (c < 0 ? " - " : " + ") + coef + term;
    first = false;
  }
  if (first) s += " 0";
  return s;
}

Json expansion_json(const ExpansionRecord& r, const std::optional<UltimatelyPeriodicWord>& qg) {
  Json e;
  e["vertex"] = r.shift;
  e["status"] = to_string(r.status);
  e["d"] = r.resolved() ? r.word().str() : "";
  e["d_star"] = qg ? qg->str() : "";
  e["steps"] = r.steps_used;
  if (!r.note.empty()) e["note"] = r.note;
  return e;
}

Json certificate_json(const Certificate& c) {
  Json j;
  j["rule"] = c.rule;
  if (c.m0) {
    j["q0"] = c.q0;
    j["m0"] = c.m0;
    j["k"] = c.k;
  }
  if (c.M) j["M"] = c.M;
  if (c.M_prime) j["M_prime"] = c.M_prime;
  if (c.r) j["r"] = c.r;
  if (c.s) {
    j["s"] = c.s;
    j["m_is"] = c.m_is;
  }
  if (c.r || c.s) j["target"] = c.target;
  if (!c.constants.empty()) j["constants"] = integers(c.constants);
  if (!c.cycle_row.empty()) j["cycle_row"] = integers(c.cycle_row);
  if (!c.gamma.empty()) {
    Json g = Json::array();
    for (const auto& row : c.gamma) g.push_back(integers(row));
    j["gamma"] = g;
  }
  if (!c.sequences.empty()) j["sequences"] = c.sequences;
  if (!c.minimal_polynomial.empty()) j["minimal_polynomial"] = c.minimal_polynomial;
  if (!c.profile.empty()) j["profile"] = c.profile;
  if (!c.shift_identity) j["shift_identity"] = false;
  return j;
}

std::optional<UltimatelyPeriodicWord> quasi_greedy_of(const AnalysisReport& r, std::size_t i) {
  if (i < r.quasi_greedy.size()) return r.quasi_greedy[i];
  return std::nullopt;
}

}  // namespace

SystemSpec parse_system(const std::string& text) {
  Json doc = parse_document(text, kSystemFormat);
  std::vector<Integer> rec = parse_integer_list(doc, "recurrence");
  std::vector<Integer> init = parse_integer_list(doc, "initial");
  if (rec.empty()) throw InputError("$.recurrence", "must not be empty");
  if (init.size() != rec.size())
    throw InputError("$.initial", "expected " + std::to_string(rec.size()) + " terms to match the recurrence order");
  if (init[0] != 1) throw InputError("$.initial[0]", "U_0 must be 1");
  for (std::size_t k = 1; k < init.size(); ++k)
    if (init[k] <= init[k - 1]) throw InputError("$.initial[" + std::to_string(k) + "]", "initial terms must increase");
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw InputError("$.name", "expected a string");
    name = doc["name"].get<std::string>();
  }
  AnalysisBudgets b;
  if (doc.contains("budgets")) {
    const Json& bj = doc["budgets"];
    if (!bj.is_object()) throw InputError("$.budgets", "expected an object");
    for (auto it = bj.begin(); it != bj.end(); ++it) {
      std::string path = "$.budgets." + it.key();
      if (it.key() == "expansion_steps")
        b.expansion.steps = parse_count(it.value(), path);
      else if (it.key() == "max_height_bits")
        b.expansion.max_height_bits = parse_count(it.value(), path);
      else if (it.key() == "p_bound")
        b.p_bound = parse_count(it.value(), path);
      else if (it.key() == "fit_window")
        b.fit_window = parse_count(it.value(), path);
      else
        throw InputError(path, "unknown budget");
    }
  }
  try {
    return SystemSpec{PositionalSystem(rec, init, name), b};
  } catch (const Error& e) {
    throw InputError("$", e.what());
  }
}

std::string system_to_json(const PositionalSystem& sys, const AnalysisBudgets& budgets) {
  Json j;
  j["format"] = kSystemFormat;
  if (!sys.name().empty()) j["name"] = sys.name();
  j["recurrence"] = integers(sys.recurrence());
  j["initial"] = integers(sys.initial());
  j["budgets"] = {{"expansion_steps", budgets.expansion.steps},
                  {"max_height_bits", budgets.expansion.max_height_bits},
                  {"p_bound", budgets.p_bound},
                  {"fit_window", budgets.fit_window}};
  return j.dump(2) + "\n";
}

SlenderDecomposition parse_max_words(const std::string& text) {
  Json doc = parse_document(text, kMaxWordsFormat);
  SlenderDecomposition m;
  auto word = [](const Json& j, const std::string& path) {
    if (!j.is_string()) throw InputError(path, "expected a digit string");
    try {
      return FiniteWord::parse(j.get<std::string>());
    } catch (const Error& e) {
      throw InputError(path, e.what());
    }
  };
  if (doc.contains("finite")) {
    if (!doc["finite"].is_array()) throw InputError("$.finite", "expected a list");
    for (std::size_t k = 0; k < doc["finite"].size(); ++k)
      m.finite.push_back(word(doc["finite"][k], "$.finite[" + std::to_string(k) + "]"));
  }
  if (!doc.contains("pieces") || !doc["pieces"].is_array()) throw InputError("$.pieces", "expected a list");
  for (std::size_t k = 0; k < doc["pieces"].size(); ++k) {
    std::string path = "$.pieces[" + std::to_string(k) + "]";
    const Json& pc = doc["pieces"][k];
    if (!pc.is_object()) throw InputError(path, "expected an object with x, y, z");
    SlenderPiece piece;
    for (const char* key : {"x", "y", "z"}) {
      FiniteWord w = pc.contains(key) ? word(pc[key], path + "." + key) : FiniteWord{};
      (key[0] == 'x' ? piece.x : key[0] == 'y' ? piece.y : piece.z) = w;
    }
    if (piece.y.empty()) throw InputError(path + ".y", "the repeated factor must be nonempty");
    m.pieces.push_back(piece);
  }
  return m;
}

std::string max_words_to_json(const SlenderDecomposition& m) {
  Json j;
  j["format"] = kMaxWordsFormat;
  Json f = Json::array();
  for (const auto& w : m.finite) f.push_back(w.str());
  j["finite"] = f;
  Json ps = Json::array();
  for (const auto& pc : m.pieces) ps.push_back({{"x", pc.x.str()}, {"y", pc.y.str()}, {"z", pc.z.str()}});
  j["pieces"] = ps;
  return j.dump(2) + "\n";
}

std::string decimal(const FieldElement& x, unsigned digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  algebra::RatInterval iv = x.enclosure(Rational(1, 10) / Rational(scale));
  Rational mid = (iv.lo + iv.hi) / 2 * Rational(scale);
  bool neg = sgn(mid) < 0;
  if (neg) mid = -mid;
  // Round half up.
  Rational shifted = mid + Rational(1, 2);
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  std::string s = r.get_str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (neg && r != 0) s.insert(0, "-");
  if (iv.lo == iv.hi && Rational(r) == mid) return s;
  return s + " ±1e-" + std::to_string(digits);
}

namespace {

Json report_json(const AnalysisReport& r, unsigned digits) {
  Json j;
  j["format"] = kReportFormat;
  Json sys;
  sys["name"] = r.system.name();
  sys["recurrence"] = integers(r.system.recurrence());
  sys["initial"] = integers(r.system.initial());
  j["system"] = sys;
  j["budgets"] = {{"expansion_steps", r.budgets.expansion.steps},
                  {"max_height_bits", r.budgets.expansion.max_height_bits},
                  {"p_bound", r.budgets.p_bound},
                  {"fit_window", r.budgets.fit_window},
                  {"exhaustive", r.budgets.exhaustive}};
  if (r.base) {
    const AlternateBase& b = *r.base;
    Json base;
    base["p"] = b.p;
    base["minimal_polynomial"] = algebra::to_string(b.minimal_polynomial);
    base["field_modulus"] = algebra::to_string(b.field->modulus(), 't');
    Json betas = Json::array();
    for (const auto& beta : b.betas) {
      Json coords = Json::array();
      for (const auto& c : beta.coords()) coords.push_back(c.get_str());
      betas.push_back({{"exact", beta.to_string()}, {"coords", coords}, {"decimal", decimal(beta, digits)}});
    }
    base["betas"] = betas;
    j["base"] = base;
  }
  if (r.base_failure) j["base_failure"] = {{"kind", to_string(r.base_failure->kind)}, {"reason", r.base_failure->reason}};
  Json ex = Json::array();
  for (std::size_t i = 0; i < r.expansions.size(); ++i) ex.push_back(expansion_json(r.expansions[i], quasi_greedy_of(r, i)));
  j["expansions"] = ex;
  if (r.graph) {
    Json g;
    Json edges = Json::array();
    for (auto [a, b] : r.graph->edges()) edges.push_back({a, b});
    g["edges"] = edges;
    Json vs = Json::array();
    for (unsigned i = 0; i < r.graph->p; ++i) {
      const VertexClass& c = r.graph->classes[i];
      Json v = {{"vertex", i}, {"category", to_string(c.category)}};
      if (c.category == Category::LeadsToNoSuccessor || c.category == Category::LeadsToCycle) v["distance"] = c.distance;
      if (c.category == Category::InCycle || c.category == Category::LeadsToCycle) v["cycle_length"] = c.cycle_length;
      if (c.category != Category::Unknown && c.category != Category::NoSuccessor && c.category != Category::InCycle)
        v["target"] = c.target;
      vs.push_back(v);
    }
    g["vertices"] = vs;
    j["graph"] = g;
  }
  Json verdicts = Json::array();
  for (const auto& v : r.vertices) {
    verdicts.push_back({{"vertex", v.vertex},
                        {"category", to_string(v.category)},
                        {"result", to_string(v.result)},
                        {"reason", v.reason},
                        {"certificate", certificate_json(v.cert)}});
  }
  j["vertices"] = verdicts;
  if (!r.vertex_period.empty()) {
    j["vertex_period"] = r.vertex_period;
    j["length_period"] = r.length_period();
  }
  j["overall"] = to_string(r.overall);
  if (r.witness) j["witness"] = *r.witness;
  j["notes"] = r.notes;
  if (r.automaton) {
    std::size_t acc = 0;
    for (bool a : r.automaton->accepting) acc += a;
    j["automaton"] = {{"alphabet", r.automaton->alphabet}, {"states", r.automaton->size()}, {"accepting", acc}};
  }
  return j;
}

}  // namespace

std::string render_json(const AnalysisReport& report, unsigned digits) { return report_json(report, digits).dump(2) + "\n"; }

std::string render_text(const AnalysisReport& r, unsigned digits) {
  std::ostringstream os;
  os << "system " << (r.system.name().empty() ? "(unnamed)" : r.system.name()) << "\n";
  os << "  " << recurrence_text(r.system) << "\n";
  os << "  initial: " << join(r.system.initial()) << "\n";
  if (r.base) {
    const AlternateBase& b = *r.base;
    os << "base: p = " << b.p << ", minimal polynomial of U: " << algebra::to_string(b.minimal_polynomial) << "\n";
    if (b.field->degree() > 1)
      os << "  field Q(t), t root of " << algebra::to_string(b.field->modulus()) << ", t = "
         << decimal(FieldElement::generator(b.field), digits) << "\n";
    for (unsigned i = 0; i < b.p; ++i)
      os << "  beta_" << i << " = " << b.betas[i].to_string() << " = " << decimal(b.betas[i], digits) << "\n";
  }
  if (r.base_failure) os << "base: " << to_string(r.base_failure->kind) << ": " << r.base_failure->reason << "\n";
  if (!r.expansions.empty()) {
    os << "expansions:\n";
    for (std::size_t i = 0; i < r.expansions.size(); ++i) {
      const auto& e = r.expansions[i];
      os << "  d_" << i << " = " << (e.resolved() ? e.word().str() : "?") << "  (" << to_string(e.status);
      if (!e.resolved()) os << " after " << e.steps_used << " steps";
      os << ")";
      if (auto q = quasi_greedy_of(r, i)) os << "  d*_" << i << " = " << q->str();
      if (!e.note.empty()) os << "  [" << e.note << "]";
      os << "\n";
    }
  }
  if (r.graph) {
    os << "graph:";
    auto edges = r.graph->edges();
    if (edges.empty()) os << " no edges";
    for (auto [a, b] : edges) os << " " << a << "->" << b;
    os << "\n";
    for (unsigned i = 0; i < r.graph->p; ++i) {
      const VertexClass& c = r.graph->classes[i];
      os << "  " << i << ": " << to_string(c.category);
      if (c.category == Category::LeadsToNoSuccessor || c.category == Category::LeadsToCycle)
        os << ", distance " << c.distance << " to " << c.target;
      if (c.category == Category::InCycle) os << ", cycle length " << c.cycle_length;
      os << "\n";
    }
  }
  if (!r.vertices.empty()) os << "vertices:\n";
  for (const auto& v : r.vertices) {
    const Certificate& c = v.cert;
    os << "  " << v.vertex << ": " << to_string(v.result) << " [" << c.rule << "] " << v.reason << "\n";
    std::string params;
    auto add = [&](const std::string& k, const std::string& val) { params += (params.empty() ? "" : ", ") + k + " = " + val; };
    if (c.m0) {
      add("q0", std::to_string(c.q0));
      add("m0", std::to_string(c.m0));
      add("k", std::to_string(c.k));
    }
    if (c.M) add("M", std::to_string(c.M));
    if (c.M_prime) add("M'", std::to_string(c.M_prime));
    if (c.r) add("r", std::to_string(c.r));
    if (c.s) {
      add("s", std::to_string(c.s));
      add("m_is", std::to_string(c.m_is));
    }
    if (!params.empty()) os << "     " << params << "\n";
    if (!c.constants.empty()) os << "     constants by n mod M: " << join(c.constants) << "\n";
    if (!c.cycle_row.empty()) os << "     cycle row at vertex " << c.target << ": " << join(c.cycle_row) << "\n";
    for (std::size_t jj = 0; jj < c.gamma.size(); ++jj) os << "     Gamma(j=" << jj << ") by e: " << join(c.gamma[jj]) << "\n";
    for (const auto& s : c.sequences) os << "     " << s << "\n";
    if (!c.minimal_polynomial.empty()) os << "     minimal polynomial: " << c.minimal_polynomial << "\n";
    if (!c.shift_identity) os << "     shift identity check failed\n";
  }
  os << "overall: " << to_string(r.overall);
  if (r.witness) os << " (witness vertex " << *r.witness << ")";
  os << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  if (r.automaton) os << "automaton: " << r.automaton->size() << " states over digits 0.." << r.automaton->alphabet - 1 << "\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, "cannot open file");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace numsys
