#include "llab/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "llab/errors.hpp"

#ifndef LLAB_DATA_DIR
#define LLAB_DATA_DIR "data/groups"
#endif

namespace llab {

FiniteGroup parse_group(const Json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
    throw InputError("group file needs \"degree\" and \"generators\"");
  if (!j["degree"].is_number_integer() || j["degree"].get<long long>() < 1)
    throw InputError("degree must be a positive integer");
  const auto degree = static_cast<std::size_t>(j["degree"].get<long long>());
  if (!j["generators"].is_array()) throw InputError("generators must be an array");
  std::vector<Perm> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_array()) throw InputError("each generator must be an array of images");
    Perm p;
    for (const auto& x : g) {
      if (!x.is_number_integer() || x.get<long long>() < 0) throw InputError("images must be non-negative integers");
      p.push_back(static_cast<std::uint32_t>(x.get<long long>()));
    }
    if (!is_valid_perm(p, degree)) throw InputError("generator is not a permutation of 0.." + std::to_string(degree - 1));
    gens.push_back(std::move(p));
  }
  return FiniteGroup::from_generators(degree, gens);
}

std::vector<std::string> example_names() { return {"a4", "a5", "a6", "c6", "d8", "s3", "s4", "s5"}; }

std::shared_ptr<const FiniteGroup> load_group(const std::string& path_or_name) {
  namespace fs = std::filesystem;
  fs::path path(path_or_name);
  if (!fs::exists(path)) {
    std::string name = path_or_name;
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
    if (name.size() > 5 && name.substr(name.size() - 5) == ".json") name.resize(name.size() - 5);
    const char* env = std::getenv("LLAB_DATA");
    path = fs::path(env ? env : LLAB_DATA_DIR) / (name + ".json");
    if (!fs::exists(path)) throw InputError("no group file or example named " + path_or_name);
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + path.string() + ": " + e.what());
  }
  return std::make_shared<FiniteGroup>(parse_group(j));
}

std::vector<SubMask> parse_delta(const std::string& spec, const FusionSystem& F) {
  ClassSets cs = class_sets(F);
  std::set<SubMask> out;
  std::stringstream ss(spec);
  std::string part;
  bool any = false;
  while (std::getline(ss, part, '+')) {
    any = true;
    std::vector<SubMask> v;
    if (part == "all")
      v = F.subgroups();
    else if (part == "s")
      v = cs.s;
    else if (part == "q")
      v = cs.q;
    else if (part == "c")
      v = cs.c;
    else if (part == "cr")
      v = cs.cr;
    else if (part == "cr-closure")
      v = f_closure(F, cs.cr);
    else if (part == "top")
      v = {F.base()};
    else
      throw InputError("unknown object set \"" + part + "\" (expected all, s, q, c, cr, cr-closure or top)");
    out.insert(v.begin(), v.end());
  }
  if (!any) throw InputError("empty object set specification");
  std::vector<SubMask> d = mask_list_sorted(std::vector<SubMask>(out.begin(), out.end()));
  if (!is_f_closed(F, d)) throw InputError("object set \"" + spec + "\" is not F-closed");
  return d;
}

Json subgroup_json(const PGroup& S, SubMask P) {
  Json gens = Json::array();
  for (auto x : S.generators(P)) gens.push_back(S.group().label(x));
  return Json{{"generators", gens}, {"order", mask_order(P)}};
}

Json subgroup_list_json(const PGroup& S, const std::vector<SubMask>& v) {
  Json a = Json::array();
  for (SubMask P : mask_list_sorted(v)) a.push_back(subgroup_json(S, P));
  return a;
}

Json check_report_json(const CheckReport& r) {
  Json a = Json::array();
  for (const auto& it : r.items) a.push_back(Json{{"check", it.name}, {"passed", it.passed}, {"detail", it.detail}});
  return Json{{"passed", r.passed()}, {"items", a}};
}

Json classification_json(const FusionSystem& F) {
  const PGroup& S = F.group();
  Classifier cl(F);
  Json rows = Json::array();
  for (SubMask P : F.subgroups()) {
    ClassFlags f = cl.classify(P);
    Json row = subgroup_json(S, P);
    row["centric"] = f.centric;
    row["radical"] = f.radical;
    row["quasicentric"] = f.quasicentric;
    row["subcentric"] = f.subcentric;
    row["fully_normalized"] = f.fully_normalized;
    row["fully_centralized"] = f.fully_centralized;
    rows.push_back(row);
  }
  ClassSets cs = class_sets(F);
  return Json{{"p", S.p()},
              {"sylow_order", mask_order(F.base())},
              {"subgroups", rows},
              {"cr", subgroup_list_json(S, cs.cr)},
              {"c", subgroup_list_json(S, cs.c)},
              {"q", subgroup_list_json(S, cs.q)},
              {"s", subgroup_list_json(S, cs.s)},
              {"o_p", subgroup_json(S, o_p_fusion(F))}};
}

std::string classification_text(const FusionSystem& F) {
  const PGroup& S = F.group();
  Classifier cl(F);
  std::vector<std::string> names;
  std::size_t width = 8;
  for (SubMask P : F.subgroups()) {
    names.push_back(S.describe(P));
    width = std::max(width, names.back().size());
  }
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "subgroup" << "  c  r  q  s  fn fc\n";
  std::size_t i = 0;
  auto mark = [](bool b) { return b ? "x  " : ".  "; };
  for (SubMask P : F.subgroups()) {
    ClassFlags f = cl.classify(P);
    os << std::setw(static_cast<int>(width)) << names[i++] << "  " << mark(f.centric) << mark(f.radical)
       << mark(f.quasicentric) << mark(f.subcentric) << mark(f.fully_normalized) << mark(f.fully_centralized) << "\n";
  }
  ClassSets cs = class_sets(F);
  os << "cr: " << cs.cr.size() << "  c: " << cs.c.size() << "  q: " << cs.q.size() << "  s: " << cs.s.size() << "\n";
  return os.str();
}

Json locality_json(const Locality& L, const FusionSystem& F) {
  ProperReport pr = is_proper(L, F);
  return Json{{"elements", L.size()},
              {"objects", subgroup_list_json(L.S(), L.delta())},
              {"object_count", L.delta().size()},
              {"proper", pr.proper()},
              {"violations", pr.violations},
              {"provenance", L.provenance()}};
}

Json expansion_json(const Expansion& E, const FusionSystem& F) {
  const PGroup& S = F.group();
  Json steps = Json::array();
  for (const auto& st : E.steps) {
    const ExpandedLocality& X = *st.step;
    Json s{{"R", subgroup_json(S, X.R())},
           {"class_size", X.is_noop() ? 0 : X.seed().r_class().size()},
           {"embedded_meeting_phi", X.embedded_meeting_phi()},
           {"pure", X.pure_count()},
           {"size_before", st.size_before},
           {"size_after", st.size_after},
           {"checks", check_report_json(X.postconditions())}};
    steps.push_back(s);
  }
  return Json{{"steps", steps},
              {"size_before", E.base->size()},
              {"size_after", E.result->size()},
              {"generated_by_base", E.generated_by_base}};
}

}  // namespace llab
