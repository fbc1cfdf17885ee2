#include "depth2/io.hpp"

#include <bit>
#include <fstream>

#include "depth2/errors.hpp"

namespace depth2 {

using nlohmann::json;

json algebra_to_json(const ModalAlgebra& a) {
  json values = json::array();
  for (const Element v : a.op().atom_values()) values.push_back(v.bits);
  return {{"atoms", a.atoms()}, {"f_on_atoms", values}};
}

ModalAlgebra algebra_from_json(const json& j) {
  try {
    const int n = j.at("atoms").get<int>();
    if (n < 1 || n > BooleanAlgebra::kMaxAtoms) throw SizeError("atoms must lie in 1..20");
    const BooleanAlgebra ba(n);
    std::vector<Element> values;
    for (const auto& m : j.at("f_on_atoms")) values.emplace_back(m.get<std::uint32_t>());
    return ModalAlgebra(ba, operator_from_atom_values(ba, std::move(values)));
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed algebra: ") + e.what());
  }
}

json frame_to_json(const Frame& f) {
  json edges = json::array();
  for (const auto& [x, y] : f.edges()) edges.push_back({x, y});
  return {{"worlds", f.worlds()}, {"edges", edges}};
}

Frame frame_from_json(const json& j) {
  try {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return make_frame(j.at("worlds").get<int>(), edges);
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed frame: ") + e.what());
  }
}

json valuation_to_json(const Valuation& v) {
  json out = json::object();
  for (const auto& [name, mask] : v) {
    json worlds = json::array();
    for (std::uint32_t m = mask; m != 0; m &= m - 1) worlds.push_back(std::countr_zero(m));
    out[name] = worlds;
  }
  return out;
}

Valuation valuation_from_json(const json& j, int n_worlds) {
  if (!j.is_object()) throw DomainError("valuation must be a JSON object");
  Valuation v;
  try {
    for (const auto& [name, value] : j.items()) {
      std::uint32_t mask = 0;
      if (value.is_array()) {
        for (const auto& w : value) {
          const int x = w.get<int>();
          if (x < 0 || x >= n_worlds) throw DomainError("world " + std::to_string(x) + " outside the frame");
          mask |= std::uint32_t{1} << x;
        }
      } else {
        mask = value.get<std::uint32_t>();
        if (n_worlds < 32 && (mask >> n_worlds) != 0) throw DomainError("mask for '" + name + "' outside the frame");
      }
      v[name] = mask;
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed valuation: ") + e.what());
  }
  return v;
}

json report_to_json(const VerificationReport& r) {
  json failures = json::array();
  for (const SuiteFailure& f : r.failures) {
    failures.push_back({{"instance", f.instance}, {"expected", f.expected}, {"got", f.got}});
  }
  return {{"suite", r.suite},
          {"params", {{"atoms", r.atoms}, {"worlds", r.worlds}}},
          {"checked", r.checked},
          {"failures", failures},
          {"elapsed_ms", r.elapsed_ms},
          {"passed", r.passed},
          {"notes", r.notes}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LookupError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw DomainError(path + ": " + e.what());
  }
}

}  // namespace depth2
