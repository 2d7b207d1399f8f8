#include "gg/commands.hpp"

#include <cstdlib>
#include <functional>

#include "json.hpp"

#include "gg/errors.hpp"
#include "gg/products.hpp"
#include "gg/random.hpp"

namespace gg {

namespace {

using Runner = std::function<CheckReport(const Model&, const CommandArgs&, std::string& subject)>;

const ModelStructure& construction_ok(const ModelStructure& s) {
  if (!s.error.empty()) throw PreconditionError("structure '" + s.name + "' could not be constructed: " + s.error);
  return s;
}

/// The named subject, or the only candidate when no name is given.
template <class T, class Pred>
const T& pick(const std::vector<T>& items, const std::string& name, Pred accepts, const std::string& what) {
  if (!name.empty()) {
    for (const auto& item : items)
      if (item.name == name) {
        if (!accepts(item)) throw Error("'" + name + "' is not " + what);
        return item;
      }
    throw Error("no subject named '" + name + "'");
  }
  const T* found = nullptr;
  std::string names;
  for (const auto& item : items) {
    if (!accepts(item)) continue;
    names += (names.empty() ? "" : ", ") + item.name;
    if (found) throw Error("several candidates (" + names + "...); choose one with -s");
    found = &item;
  }
  if (!found) throw Error("the model has no " + what);
  return *found;
}

const ModelStructure& factor(const Model& m, const std::string& name) {
  return construction_ok(*m.find_structure(name));
}

bool complex_product(const Model& m, const ModelProduct& p) { return m.find_structure(p.right)->is_contact_type(); }

GCS build_product_gcs(const Model& m, const ModelProduct& p) {
  return product_gcs(*factor(m, p.left).gacs, *factor(m, p.right).gacs);
}

GACS build_product_gacs(const Model& m, const ModelProduct& p) {
  return product_gacs(*factor(m, p.left).gacs, *factor(m, p.right).gcs);
}

CheckReport axioms_of(const Model& m, const std::string& name) {
  CheckReport r;
  if (const ModelStructure* s = m.find_structure(name)) {
    if (!s->error.empty()) {
      r.add("construct", std::string(to_string(s->kind)) + " constructor preconditions hold", false, s->error);
      return r;
    }
    if (s->classical) r.append(check_classical_axioms(*s->classical), "classical.");
    if (s->gacs) r.append(check_gacs_axioms(*s->gacs));
    if (s->gcs) r.append(check_gcs_axioms(*s->gcs));
    return r;
  }
  const ModelProduct& p = *m.find_product(name);
  try {
    if (complex_product(m, p))
      r.append(check_gcs_axioms(build_product_gcs(m, p)));
    else
      r.append(check_gacs_axioms(build_product_gacs(m, p)));
  } catch (const PreconditionError& e) {
    r.add("construct", "product factors can be constructed", false, e.what());
  }
  return r;
}

CheckReport run_axioms(const Model& m, const CommandArgs& args, std::string& subject) {
  if (!args.subject.empty()) {
    if (!m.find_structure(args.subject) && !m.find_product(args.subject))
      throw Error("no structure or product named '" + args.subject + "'");
    subject = args.subject;
    return axioms_of(m, args.subject);
  }
  subject = "all";
  CheckReport r;
  for (const auto& s : m.structures) r.append(axioms_of(m, s.name), s.name + ".");
  for (const auto& p : m.products) r.append(axioms_of(m, p.name), p.name + ".");
  return r;
}

CheckReport run_bracket(const Model& m, const CommandArgs& args, std::string& subject) {
  const Manifold& mf = pick(m.manifolds, args.subject, [](const Manifold&) { return true; }, "manifold");
  subject = mf.name;
  if (args.a.empty() || args.b.empty()) throw Error("bracket needs both -a and -b");
  const GVector a = parse_section(args.a, m, mf.name);
  const GVector b = parse_section(args.b, m, mf.name);
  const GVector ab = courant_bracket(a, b);
  CheckReport r;
  r.add("bracket", "[[" + to_string(a) + ", " + to_string(b) + "]]", true, to_string(ab));
  const GVector skew = ab + courant_bracket(b, a);
  r.add("antisymmetry", "[[a, b]] + [[b, a]] = 0", is_zero(skew), is_zero(skew) ? "" : to_string(skew));

  RandomSource rnd(args.seed);
  const Scalar f = rnd.polynomial(mf.chart, 2);
  const GVector anomaly = courant_bracket(a, f * b) - f * ab - interior(a.vec(), d(mf.chart, f)) * b +
                          neutral_pairing(a, b) * GVector::from(d(mf.chart, f));
  r.add("anomaly", "[[a, f b]] = f [[a, b]] + (X_a f) b - <a, b> df for f = " + to_string(f), is_zero(anomaly),
        is_zero(anomaly) ? "" : to_string(anomaly));
  return r;
}

CheckReport run_classify(const Model& m, const CommandArgs& args, std::string& subject) {
  GACS s;
  if (!args.subject.empty() && m.find_product(args.subject)) {
    const ModelProduct& p = *m.find_product(args.subject);
    if (complex_product(m, p)) throw Error("'" + p.name + "' is a generalized almost complex product; use nijenhuis");
    s = build_product_gacs(m, p);
    subject = p.name;
  } else {
    const ModelStructure& st = pick(
        m.structures, args.subject, [](const ModelStructure& x) { return x.is_contact_type(); },
        "generalized almost contact structure");
    s = *construction_ok(st).gacs;
    subject = st.name;
  }
  CheckReport r;
  r.append(lemma1_report(s));
  const GacsClassification c = classify_gacs(s);
  r.append(c.report);
  r.add({"classification", "integrability class", c.verdict == GacsClass::strong ? Verdict::pass : Verdict::warning,
         to_string(c.verdict)});
  r.append(lemma2_containments(s).report);
  return r;
}

CheckReport run_nijenhuis(const Model& m, const CommandArgs& args, std::string& subject) {
  GCS j;
  if (!args.subject.empty() && m.find_product(args.subject)) {
    const ModelProduct& p = *m.find_product(args.subject);
    if (!complex_product(m, p)) throw Error("'" + p.name + "' is a generalized almost contact product; use classify");
    j = build_product_gcs(m, p);
    subject = p.name;
  } else {
    const ModelStructure& st = pick(
        m.structures, args.subject, [](const ModelStructure& x) { return !x.is_contact_type(); },
        "generalized almost complex structure");
    j = *construction_ok(st).gcs;
    subject = st.name;
  }
  CheckReport r = is_integrable_gcs(j, args.seed).report;
  if (!args.a.empty() || !args.b.empty()) {
    if (args.a.empty() || args.b.empty()) throw Error("nijenhuis needs both -a and -b to evaluate a pair");
    const ModelStructure* st = m.find_structure(subject);
    const Manifold on = st ? *m.find_manifold(st->manifold) : Manifold{subject, j.chart()};
    const GVector a = parse_section(args.a, m, on);
    const GVector b = parse_section(args.b, m, on);
    const GVector n = nijenhuis(j, a, b);
    r.add("nijenhuis_pair", "N(" + to_string(a) + ", " + to_string(b) + ") = 0", is_zero(n),
          is_zero(n) ? "" : to_string(n));
  }
  return r;
}

CheckReport run_product_verify(const Model& m, const CommandArgs& args, std::string& subject) {
  const ModelProduct& p = pick(m.products, args.subject, [](const ModelProduct&) { return true; }, "product");
  subject = p.name;
  const ModelStructure& l = factor(m, p.left);
  const ModelStructure& r = factor(m, p.right);
  if (complex_product(m, p)) return theorem1_verify(*l.gacs, *r.gacs, args.seed).report;
  return theorem2_verify(*l.gacs, *r.gcs, args.seed).report;
}

CheckReport run_normality(const Model& m, const CommandArgs& args, std::string& subject) {
  const ModelStructure& st = pick(
      m.structures, args.subject, [](const ModelStructure& x) { return x.kind == StructureKind::almost_contact; },
      "almost_contact structure");
  subject = st.name;
  construction_ok(st);
  const Chart& chart = m.find_manifold(st.manifold)->chart;
  std::string t = "t";
  for (int k = 0; chart.index_of(t); ++k) t = "t" + std::to_string(k);
  return normality_correspondence(*st.classical, t, args.seed).report;
}

const std::vector<std::pair<std::string, Runner>>& runners() {
  static const std::vector<std::pair<std::string, Runner>> table{
      {"axioms", run_axioms},         {"bracket", run_bracket},
      {"classify", run_classify},     {"nijenhuis", run_nijenhuis},
      {"product-verify", run_product_verify}, {"normality", run_normality}};
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : runners()) out.push_back(name);
    return out;
  }();
  return names;
}

Report run(const std::string& command, const Model& model, const CommandArgs& args) {
  for (const auto& [name, fn] : runners()) {
    if (name != command) continue;
    Report report{command, args.subject, {}, exit_ok, {}};
    CheckReport checks;
    try {
      checks = fn(model, args, report.subject);
    } catch (const PreconditionError& e) {
      checks.add("preconditions", "inputs satisfy the construction preconditions", false, e.what());
    }
    if (checks.theorem_violation)
      report.exit_code = exit_theorem_violation;
    else if (!checks.ok())
      report.exit_code = exit_check_failed;
    report.checks = std::move(checks.checks);
    return report;
  }
  throw Error("unknown command '" + command + "'");
}

Report error_report(const std::string& command, const std::string& subject, const std::string& message) {
  return {command, subject, {}, exit_input_error, message};
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["version"] = version;
  j["command"] = report.command;
  j["subject"] = report.subject;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks)
    j["checks"].push_back({{"id", c.id}, {"description", c.description}, {"verdict", to_string(c.verdict)},
                           {"witness", c.witness}});
  j["exitCode"] = report.exit_code;
  if (!report.error.empty()) j["error"] = report.error;
  return j.dump(2) + "\n";
}

std::string to_text(const Report& report) {
  std::string out = report.command + " " + report.subject + "\n";
  if (!report.error.empty()) out += "error: " + report.error + "\n";
  for (const auto& c : report.checks) {
    out += "  [" + std::string(to_string(c.verdict)) + "] " + c.id + ": " + c.description + "\n";
    if (!c.witness.empty()) out += "      " + c.witness + "\n";
  }
  out += "exit " + std::to_string(report.exit_code) + "\n";
  return out;
}

std::uint64_t seed_from_env() {
  const char* raw = std::getenv("GG_SEED");
  if (!raw || !*raw) return 0;
  const std::string text(raw);
  if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 19)
    throw Error("GG_SEED must be a nonnegative integer, got '" + text + "'");
  return std::stoull(text);
}

}  // namespace gg
