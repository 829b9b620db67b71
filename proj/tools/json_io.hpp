#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgq/hgq.hpp"
#include "json.hpp"

namespace hgq::io {

using Json = nlohmann::ordered_json;

/// Parse {"n": int, "edges": [[int, ...], ...], "strict": bool?} with
/// 1-based vertices. Singletons are added unless strict (from the document or
/// the caller) is set.
inline Hypergraph parse_input(const std::string& text, bool strict = false) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw InputError("malformed document: expected an object with integer \"n\"");
  }
  const auto n = doc["n"].get<long long>();
  if (n < 0 || n > kMaxVertices) throw InputError("malformed document: \"n\" out of range");
  std::vector<std::vector<int>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw InputError("malformed document: \"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array()) throw InputError("malformed document: each edge must be an array");
      std::vector<int> edge;
      for (const auto& v : e) {
        if (!v.is_number_integer()) throw InputError("malformed document: vertices must be integers");
        const auto x = v.get<long long>();
        if (x < 1 || x > n) throw InputError("vertex out of range: " + std::to_string(x));
        edge.push_back(static_cast<int>(x));
      }
      edges.push_back(std::move(edge));
    }
  }
  if (doc.contains("strict")) {
    if (!doc["strict"].is_boolean()) throw InputError("malformed document: \"strict\" must be a boolean");
    strict = strict || doc["strict"].get<bool>();
  }
  return make_hypergraph(static_cast<int>(n), edges,
                         strict ? SingletonPolicy::kRequire : SingletonPolicy::kAdd);
}

/// Ascending coefficient array; with `q` set, the single value p(q).
inline Json poly_json(const QPoly& p, std::optional<std::int64_t> q = std::nullopt) {
  if (q) return Json::array({p.evaluate(*q)});
  Json a = Json::array();
  for (auto c : p.coefficients()) a.push_back(c);
  return a;
}

inline Json hypergraph_json(const Hypergraph& h) {
  Json edges = Json::array();
  for (VertexSet e : h.edges()) edges.push_back(e.elements());
  return Json{{"n", h.n()}, {"edges", std::move(edges)}};
}

inline Json qsym_json(const QSymM& f, std::optional<std::int64_t> q = std::nullopt) {
  Json terms = Json::array();
  for (const auto& [alpha, c] : f.terms()) {
    terms.push_back(Json{{"composition", alpha.parts}, {"poly", poly_json(c, q)}});
  }
  return Json{{"degree", f.degree()}, {"terms", std::move(terms)}};
}

inline Json hopf_json(const HopfElement& a, std::optional<std::int64_t> q = std::nullopt) {
  Json terms = Json::array();
  for (const auto& [h, c] : a.terms()) {
    terms.push_back(Json{{"hypergraph", hypergraph_json(h)}, {"coefficient", poly_json(c, q)}});
  }
  return Json{{"terms", std::move(terms)}};
}

inline Json tensor_json(const TensorElement& t, std::optional<std::int64_t> q = std::nullopt) {
  Json terms = Json::array();
  for (const auto& [k, c] : t.terms()) {
    terms.push_back(Json{{"left", hypergraph_json(k.first)},
                         {"right", hypergraph_json(k.second)},
                         {"coefficient", poly_json(c, q)}});
  }
  return Json{{"terms", std::move(terms)}};
}

inline Json flag_json(const SetComposition& f) {
  Json blocks = Json::array();
  for (VertexSet b : f.blocks()) blocks.push_back(b.elements());
  return blocks;
}

}  // namespace hgq::io
