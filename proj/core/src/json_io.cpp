#include "origami/json_io.hpp"

#include <stdexcept>

namespace origami {

using nlohmann::json;

json perm_to_json(const Perm& p) {
  json j = json::array();
  for (const auto& c : p.cycles()) j.push_back(c);
  return j;
}

Perm perm_from_json(const json& j, int degree) {
  if (!j.is_array()) throw std::invalid_argument("permutation must be an array of cycles");
  std::vector<std::vector<int>> cycles;
  for (const auto& c : j) cycles.push_back(c.get<std::vector<int>>());
  return Perm::from_cycles(degree, cycles);
}

json group_to_json(const PermGroup& g) {
  json gens = json::array();
  for (const Perm& p : g.generators()) gens.push_back(perm_to_json(p));
  return {{"degree", g.degree()}, {"generators", gens}};
}

std::shared_ptr<const PermGroup> group_from_json(const json& j) {
  int degree = j.at("degree").get<int>();
  if (degree < 1 || degree > 1'000'000)
    throw std::invalid_argument("group degree out of range");
  std::vector<Perm> gens;
  for (const auto& gj : j.at("generators")) gens.push_back(perm_from_json(gj, degree));
  return std::make_shared<const PermGroup>(PermGroup::closure(degree, std::move(gens)));
}

json origami_to_json(const RegularOrigami& o) {
  return {{"group", group_to_json(*o.group)},
          {"x", perm_to_json(o.x)},
          {"y", perm_to_json(o.y)}};
}

RegularOrigami origami_from_json(const json& j) {
  auto group = group_from_json(j.at("group"));
  Perm x = perm_from_json(j.at("x"), group->degree());
  Perm y = perm_from_json(j.at("y"), group->degree());
  return make_regular_origami(std::move(group), std::move(x), std::move(y));
}

json perm_origami_to_json(const PermOrigami& p) {
  return {{"n", p.squares},
          {"sigma_r", perm_to_json(p.sigma_r)},
          {"sigma_u", perm_to_json(p.sigma_u)}};
}

PermOrigami perm_origami_from_json(const json& j) {
  int n = j.at("n").get<int>();
  return make_perm_origami(perm_from_json(j.at("sigma_r"), n),
                           perm_from_json(j.at("sigma_u"), n));
}

json matrix_to_json(const Sl2Matrix& m) {
  return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})});
}

Sl2Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || j[0].size() != 2 || j[1].size() != 2)
    throw std::invalid_argument("matrix must be [[a,b],[c,d]]");
  Sl2Matrix m{j[0][0].get<long long>(), j[0][1].get<long long>(),
              j[1][0].get<long long>(), j[1][1].get<long long>()};
  if (m.det() != 1) throw std::invalid_argument("matrix is not in SL(2,Z)");
  return m;
}

json decomposition_to_json(const CylinderDecomposition& d) {
  json cyls = json::array();
  for (const Cylinder& c : d.cylinders) {
    json squares = json::array();
    for (int sq : c.squares) squares.push_back(sq + 1);  // 1-based outside
    cyls.push_back({{"w", c.circumference}, {"h", c.height}, {"squares", squares}});
  }
  return {{"direction", json::array({d.direction[0], d.direction[1]})},
          {"A", matrix_to_json(d.direction_matrix)},
          {"cylinders", cyls},
          {"parabolic", matrix_to_json(d.parabolic)}};
}

json witness_to_json(const TncgWitness& w) {
  json j{{"p", w.prime},        {"case", w.case_tag}, {"A1", matrix_to_json(w.a1)},
         {"A2", matrix_to_json(w.a2)}, {"m1", w.m1},  {"m2", w.m2}};
  if (w.y_shifts) j["y_shifts"] = json::array({(*w.y_shifts)[0], (*w.y_shifts)[1]});
  return j;
}

TncgWitness witness_from_json(const json& j) {
  TncgWitness w;
  w.prime = j.at("p").get<long long>();
  w.case_tag = j.at("case").get<std::string>();
  w.a1 = matrix_from_json(j.at("A1"));
  w.a2 = matrix_from_json(j.at("A2"));
  w.m1 = j.at("m1").get<long long>();
  w.m2 = j.at("m2").get<long long>();
  if (j.contains("y_shifts"))
    w.y_shifts = {{j["y_shifts"][0].get<long long>(), j["y_shifts"][1].get<long long>()}};
  return w;
}

json certificate_to_json(const TncgCertificate& c) {
  json ws = json::array();
  for (const TncgWitness& w : c.witnesses) ws.push_back(witness_to_json(w));
  return {{"origami", origami_to_json(c.origami)},
          {"witnesses", ws},
          {"residual_primes", c.residual_primes_note}};
}

TncgCertificate certificate_from_json(const json& j) {
  TncgCertificate c;
  c.origami = origami_from_json(j.at("origami"));
  for (const auto& wj : j.at("witnesses")) c.witnesses.push_back(witness_from_json(wj));
  c.residual_primes_note = j.at("residual_primes").get<std::string>();
  return c;
}

json orbit_to_json(const OrbitGraph& g) {
  json nodes = json::array(), words = json::array(), edges = json::array();
  for (const RegularOrigami& o : g.nodes)
    nodes.push_back({{"x", perm_to_json(o.x)}, {"y", perm_to_json(o.y)}});
  for (const Sl2Word& w : g.transversal) words.push_back(w.str());
  for (const auto& e : g.edges) edges.push_back(json::array({e[0], e[1], e[2], e[3]}));
  return {{"group", group_to_json(*g.nodes.at(0).group)},
          {"nodes", nodes},
          {"transversal", words},
          {"edges", edges}};
}

OrbitGraph orbit_from_json(const json& j) {
  OrbitGraph g;
  auto group = group_from_json(j.at("group"));
  for (const auto& nj : j.at("nodes")) {
    Perm x = perm_from_json(nj.at("x"), group->degree());
    Perm y = perm_from_json(nj.at("y"), group->degree());
    g.nodes.push_back(RegularOrigami{group, std::move(x), std::move(y)});
  }
  for (const auto& wj : j.at("transversal"))
    g.transversal.push_back(Sl2Word::parse(wj.get<std::string>()));
  for (const auto& ej : j.at("edges"))
    g.edges.push_back({ej[0].get<int>(), ej[1].get<int>(), ej[2].get<int>(), ej[3].get<int>()});
  return g;
}

json veech_to_json(const VeechGroup& v, const OrbitGraph& g) {
  json gens = json::array();
  for (std::size_t i = 0; i < v.generator_words.size(); ++i)
    gens.push_back({{"word", v.generator_words[i].str()},
                    {"matrix", matrix_to_json(v.generator_matrices[i])}});
  return {{"orbit", orbit_to_json(g)},
          {"index", v.index},
          {"generators", gens},
          {"s_perm", v.s_perm},
          {"t_perm", v.t_perm},
          {"cusp_widths", v.cusp_widths},
          {"level", v.level}};
}

std::pair<VeechGroup, OrbitGraph> veech_from_json(const json& j) {
  OrbitGraph g = orbit_from_json(j.at("orbit"));
  VeechGroup v;
  v.base = g.nodes.at(0);
  v.index = j.at("index").get<long long>();
  for (const auto& gj : j.at("generators")) {
    v.generator_words.push_back(Sl2Word::parse(gj.at("word").get<std::string>()));
    v.generator_matrices.push_back(matrix_from_json(gj.at("matrix")));
  }
  v.s_perm = j.at("s_perm").get<std::vector<int>>();
  v.t_perm = j.at("t_perm").get<std::vector<int>>();
  v.cusp_widths = j.at("cusp_widths").get<std::vector<long long>>();
  v.level = j.at("level").get<long long>();
  return {std::move(v), std::move(g)};
}

}  // namespace origami
