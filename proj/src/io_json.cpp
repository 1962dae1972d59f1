#include "klfactor/io_json.hpp"

namespace klfactor {

Json factorization_to_json(const Factorization& j) {
  Json blocks = Json::array();
  for (const GenSet& b : j.blocks()) {
    Json gens = Json::array();
    for (int g : b.generators()) gens.push_back(g);
    blocks.push_back(gens);
  }
  return Json{{"n", j.n()}, {"blocks", blocks}};
}

Factorization factorization_from_json(const Json& js) {
  int n = js.at("n").get<int>();
  std::vector<GenSet> blocks;
  for (const Json& b : js.at("blocks")) {
    std::vector<int> gens;
    for (const Json& g : b) gens.push_back(g.get<int>());
    blocks.push_back(GenSet(n, std::move(gens)));
  }
  return Factorization(n, std::move(blocks));
}

Json defect_family_to_json(const DefectFamily& fam) {
  Json polys = Json::object();
  for (const auto& [x, p] : fam.polys) polys[x.to_string()] = p.to_q_string();
  return Json{{"leading", fam.leading.to_string()}, {"polys", polys}};
}

Json hecke_to_json(const HeckeElt& h) {
  Json out = Json::array();
  for (const auto& [w, c] : h.terms())
    out.push_back(Json{{"perm", w.to_string()}, {"coeff", c.to_v_string()}});
  return out;
}

Json heap_to_json(const Heap& h) {
  static const char* names[4] = {"+u1", "+u2", "-u1", "-u2"};
  Json out = Json::array();
  for (int idx = 0; idx < h.size(); ++idx) {
    const Component& c = h.component(idx);
    Json entry{{"i", c.i}, {"j", c.j}, {"level", c.level}};
    Json steps = Json::object();
    for (int s = 0; s < 4; ++s) {
      auto t = h.step(idx, static_cast<Step>(s));
      if (t) steps[names[s]] = *t;
    }
    entry["steps"] = steps;
    out.push_back(entry);
  }
  return out;
}

Json directedness_to_json(const Permutation& w) {
  DirectednessProfile prof = directedness_profile(w);
  Json out = Json::array();
  for (int p = 1; p <= w.n(); ++p) {
    const PositionDirectedness& d = prof.at(p);
    out.push_back(Json{{"p", p},
                       {"lambda", d.lambda},
                       {"rho", d.rho},
                       {"left_directed", d.left_directed},
                       {"right_directed", d.right_directed},
                       {"strong_left", d.strong_left},
                       {"strong_right", d.strong_right},
                       {"uncrossed", d.uncrossed},
                       {"properly_directed", d.properly_directed}});
  }
  return out;
}

Json intervals_to_json(const std::vector<DescentInterval>& ivs) {
  Json out = Json::array();
  for (const DescentInterval& iv : ivs)
    out.push_back(Json{{"a", iv.a},
                       {"b", iv.b},
                       {"l", iv.l},
                       {"r", iv.r},
                       {"right_monotone", iv.right_monotone}});
  return out;
}

std::string poly_report_string(const LaurentPoly& p) { return p.to_string(); }

}  // namespace klfactor
