// llab: classification, localities, expansion and verification on permutation groups
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "llab/errors.hpp"
#include "llab/io.hpp"
#include "llab/verify.hpp"

using namespace llab;

namespace {

struct Job {
  std::string group;
  int p = 2;
  std::string delta;
  std::string delta_plus = "s";
  std::size_t axiom_len = 0;
  std::string json_out;
  bool theta = false;
  std::vector<std::string> tags;
};

void emit(const Job& job, const Json& j, const std::string& text) {
  if (job.json_out.empty()) {
    std::cout << text;
    return;
  }
  std::string s = j.dump(2) + "\n";
  if (job.json_out == "-") {
    std::cout << s;
    return;
  }
  std::ofstream f(job.json_out);
  if (!f) throw InputError("cannot write " + job.json_out);
  f << s;
  std::cout << text;
}

GroupSetting setting(const Job& job) {
  if (!is_prime(job.p)) throw InputError("p must be prime");
  return group_setting(load_group(job.group), job.p);
}

int cmd_classify(const Job& job) {
  GroupSetting gs = setting(job);
  emit(job, classification_json(*gs.F), classification_text(*gs.F));
  return 0;
}

int cmd_locality(const Job& job) {
  GroupSetting gs = setting(job);
  auto delta = parse_delta(job.delta.empty() ? "c" : job.delta, *gs.F);
  LocalityPtr L = locality_from_group(gs, delta);
  Json j = locality_json(*L, *gs.F);
  std::ostringstream os;
  os << "elements: " << L->size() << "\nobjects: " << L->delta().size() << "\nproper: " << (j["proper"].get<bool>() ? "yes" : "no")
     << "\n";
  for (const auto& v : j["violations"]) os << "  " << v.get<std::string>() << "\n";
  if (job.theta) {
    ThetaResult t = theta_quotient(*L);
    j["theta"] = Json{{"elements", t.theta.count()},
                      {"members", set_string(*L, t.theta)},
                      {"quotient_elements", t.quotient.lbar->size()},
                      {"quotient_proper", is_proper(*t.quotient.lbar).proper()}};
    os << "theta: " << set_string(*L, t.theta) << "\nquotient elements: " << t.quotient.lbar->size() << "\n";
  }
  if (job.axiom_len > 0) {
    AxiomReport r = check_axioms(*L, job.axiom_len);
    j["axioms"] = Json{{"max_len", job.axiom_len}, {"words", r.words_checked}, {"violations", r.violation_count}};
    os << "axioms (length " << job.axiom_len << "): " << r.words_checked << " words, " << r.violation_count << " violations\n";
    if (!r.passed()) throw PropertyViolation("partial group axioms fail: " + r.violations.front());
  }
  emit(job, j, os.str());
  return 0;
}

int cmd_expand(const Job& job) {
  GroupSetting gs = setting(job);
  auto delta = parse_delta(job.delta.empty() ? "c" : job.delta, *gs.F);
  auto dplus = parse_delta(job.delta_plus, *gs.F);
  LocalityPtr L = locality_from_group(gs, delta);
  Expansion E = full_expand(L, dplus);
  Json j = expansion_json(E, *gs.F);
  std::ostringstream os;
  os << "elements: " << E.base->size() << " -> " << E.result->size() << " in " << E.steps.size() << " steps\n";
  for (const auto& st : E.steps)
    os << "  R = " << gs.S->describe(st.step->R()) << ": " << st.size_before << " -> " << st.size_after << " ("
       << st.step->pure_count() << " new)\n";
  LocalityPtr oracle = locality_from_group(gs, dplus);
  bool oracle_proper = is_proper(*oracle, *gs.F).proper();
  j["oracle_proper"] = oracle_proper;
  if (oracle_proper) {
    bool iso = check_unique_iso(E, *oracle, witness_map(*L, *oracle)).has_value();
    j["iso_to_oracle"] = iso;
    os << "isomorphic to the group restriction: " << (iso ? "yes" : "no") << "\n";
    if (!iso) throw PropertyViolation("expansion is not isomorphic to the proper group restriction");
  } else {
    os << "group restriction on the target objects is not proper; no comparison\n";
  }
  if (job.axiom_len > 0) {
    AxiomReport r = check_axioms(*E.result, job.axiom_len);
    j["axioms"] = Json{{"max_len", job.axiom_len}, {"words", r.words_checked}, {"violations", r.violation_count}};
    os << "axioms (length " << job.axiom_len << "): " << r.words_checked << " words, " << r.violation_count << " violations\n";
    if (!r.passed()) throw PropertyViolation("partial group axioms fail: " + r.violations.front());
  }
  emit(job, j, os.str());
  return 0;
}

int cmd_verify(const Job& job) {
  if (!is_prime(job.p)) throw InputError("p must be prime");
  auto G = load_group(job.group);
  VerifyOptions opt;
  opt.axiom_len = job.axiom_len;
  opt.only = job.tags;
  SuiteReport r = run_verify_suite(G, job.p, opt);
  emit(job, suite_json(r), suite_text(r));
  return r.passed() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fusion systems and localities of finite permutation groups"};
  app.require_subcommand(1);
  Job job;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--group", job.group, "group file, or an example name (s3 s4 s5 a4 a5 a6 c6 d8)")->required();
    sub->add_option("--p", job.p, "prime")->required();
    sub->add_option("--delta", job.delta, "object set: all, s, q, c, cr, cr-closure, top, joined with +");
    sub->add_option("--axiom-len", job.axiom_len, "check partial group axioms up to this word length");
    sub->add_option("--json", job.json_out, "write JSON to this file (- for standard output)");
  };
  auto* classify = app.add_subcommand("classify", "classify the subgroups of a Sylow subgroup");
  common(classify);
  auto* locality = app.add_subcommand("locality", "restriction of the group to an object set");
  common(locality);
  locality->add_flag("--theta", job.theta, "also form the Theta quotient");
  auto* expand = app.add_subcommand("expand", "expand a locality to a larger object set");
  common(expand);
  expand->add_option("--delta-plus", job.delta_plus, "target object set (default s)");
  auto* verify = app.add_subcommand("verify", "run the property suites");
  common(verify);
  verify->add_option("--tag", job.tags, "run only these properties (repeatable)");
  verify->callback([&] {
    if (verify->count("--axiom-len") == 0) job.axiom_len = 4;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  try {
    if (const char* c = std::getenv("LLAB_CAPS")) apply_caps_string(c, caps());
    if (*classify) return cmd_classify(job);
    if (*locality) return cmd_locality(job);
    if (*expand) return cmd_expand(job);
    if (*verify) return cmd_verify(job);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "property violation: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
