#include "syzforms/json_io.hpp"

#include "syzforms/parser.hpp"

namespace syzforms {

using nlohmann::json;

json betti_json(const BettiTable& t) {
  json arr = json::array();
  for (const auto& [ij, b] : t.entries)
    arr.push_back({{"i", ij.first}, {"j", ij.second}, {"b", b}});
  return json{{"betti", arr}};
}

json form_json(const PForm& w) {
  json terms = json::array();
  for (const auto& [mask, coef] : w.coefficients())
    terms.push_back({{"idx", mask_indices(mask)}, {"coef", coef.str()}});
  return json{{"p", w.p()}, {"terms", terms}};
}

PForm form_from_json(const json& j, const Ring& ring) {
  PForm w(ring, j.at("p").get<int>());
  for (const auto& term : j.at("terms")) {
    std::uint32_t mask = 0;
    for (int i : term.at("idx").get<std::vector<int>>()) mask |= 1u << i;
    w.add_term(mask, parse_poly(term.at("coef").get<std::string>(), ring));
  }
  return w;
}

json form_space_json(const FormSpace& s) {
  json basis = json::array();
  for (const auto& e : s.basis) basis.push_back(form_json(e.form));
  return json{{"dim", s.dim()},
              {"basis", basis},
              {"split", json{{"tor", s.tor_dim}, {"radial", s.radial_dim}}}};
}

json chern_json(const ChernClasses& c) {
  return json{{"rank", c.rank}, {"c", {c.c[0], c.c[1], c.c[2]}}, {"hilbert", c.hilbert.str()}};
}

json cohomology_json(int i, int twist, long dim) {
  return json{{"i", i}, {"twist", twist}, {"dim", dim}};
}

}  // namespace syzforms
