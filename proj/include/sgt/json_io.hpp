#pragma once

// JSON readers and writers for the on-disk artifact formats.
//
//   semigroup  {"n": int, "table": [[int,...],...],
//               "star"?: [int,...], "labels"?: [str,...]}
//   action     {"semigroup": <semigroup or "@relative/path.json">,
//               "x_size": int, "p": [int,...], "act": [[int,...],...]}
//               with act rows indexed by semigroup element, columns by point
//   hom        {"source": <semigroup or "@path">,
//               "target": <semigroup or "@path">, "map": [int,...]}
//   morphism   {"alpha"?: [int,...], "beta": [int,...]} (no alpha = identity)
//
// A "@path" string is resolved relative to the directory of the referencing
// file.  Every reader throws invalid_input with a witness naming the defect;
// structural validation (associativity, action laws) reuses the core
// loaders, so witnesses match the in-memory constructors.

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sgt/action.hpp"
#include "sgt/equivalence.hpp"
#include "sgt/semigroup.hpp"
#include "sgt/star.hpp"

namespace sgt {

/// A semigroup file: the table plus the optional star and element labels.
struct SemigroupDocument {
  FiniteSemigroup s;
  std::optional<std::vector<int>> star;
  std::vector<std::string> labels;
};

struct ActionDocument {
  SemigroupDocument base;
  EtaleAction action;
};

struct HomDocument {
  SemigroupDocument source;
  SemigroupDocument target;
  SemigroupHom hom;
};

/// Raw maps of an action morphism; a missing alpha means the identity.
struct MorphismDocument {
  std::optional<std::vector<int>> alpha;
  std::vector<int> beta;
};

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& j,
                                           const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw invalid_input(Witness{"MissingField", {}},
                        std::string("missing required field '") + name + "'");
  }
  return j.at(name);
}

inline int require_int(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw invalid_input(Witness{"BadType", {}},
                        std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

inline std::vector<int> require_int_array(const nlohmann::json& j,
                                          const char* what) {
  if (!j.is_array()) {
    throw invalid_input(Witness{"BadType", {}},
                        std::string(what) + " must be an array of integers");
  }
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(require_int(v, what));
  return out;
}

inline std::vector<std::vector<int>> require_table(const nlohmann::json& j,
                                                   const char* what) {
  if (!j.is_array()) {
    throw invalid_input(Witness{"BadType", {}},
                        std::string(what) + " must be an array of rows");
  }
  std::vector<std::vector<int>> rows;
  rows.reserve(j.size());
  for (const auto& row : j) rows.push_back(require_int_array(row, what));
  return rows;
}

}  // namespace detail

/// Parses a JSON document from a file.
inline nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw invalid_input(Witness{"FileError", {}},
                        "cannot open '" + path.string() + "'");
  }
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw invalid_input(Witness{"BadJson", {}},
                        "cannot parse '" + path.string() + "': " + e.what());
  }
}

inline void write_json_file(const std::filesystem::path& path,
                            const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) {
    throw invalid_input(Witness{"FileError", {}},
                        "cannot write '" + path.string() + "'");
  }
  out << j.dump(2) << "\n";
}

/// Parses and validates a semigroup object (associativity included).
inline SemigroupDocument semigroup_from_json(const nlohmann::json& j,
                                             int cap = kDefaultCap) {
  const int n = detail::require_int(detail::require_field(j, "n"), "\"n\"");
  const std::vector<std::vector<int>> rows =
      detail::require_table(detail::require_field(j, "table"), "\"table\" rows");
  if (static_cast<int>(rows.size()) != n) {
    throw invalid_input(Witness{"BadDimensions", {static_cast<int>(rows.size()), n}},
                        "\"table\" must have n rows");
  }
  SemigroupDocument doc;
  doc.s = load_semigroup(rows, cap);
  if (j.contains("star")) {
    std::vector<int> star = detail::require_int_array(j.at("star"), "\"star\"");
    if (static_cast<int>(star.size()) != n) {
      throw invalid_input(Witness{"BadValue", {static_cast<int>(star.size())}},
                          "\"star\" must list one image per element");
    }
    for (int v : star) {
      if (v < 0 || v >= n) {
        throw invalid_input(Witness{"BadValue", {v}},
                            "\"star\" entry out of range");
      }
    }
    doc.star = std::move(star);
  }
  if (j.contains("labels")) {
    const auto& labels = j.at("labels");
    if (!labels.is_array() || static_cast<int>(labels.size()) != n) {
      throw invalid_input(Witness{"BadValue", {static_cast<int>(labels.size())}},
                          "\"labels\" must list one string per element");
    }
    for (const auto& v : labels) {
      if (!v.is_string()) {
        throw invalid_input(Witness{"BadType", {}},
                            "\"labels\" entries must be strings");
      }
      doc.labels.push_back(v.get<std::string>());
    }
  }
  return doc;
}

/// Resolves a semigroup position that may be an inline object or "@path".
inline SemigroupDocument semigroup_from_ref(const nlohmann::json& field,
                                            const std::filesystem::path& base_dir,
                                            int cap = kDefaultCap) {
  if (field.is_string()) {
    const std::string ref = field.get<std::string>();
    if (ref.empty() || ref[0] != '@') {
      throw invalid_input(Witness{"BadValue", {}},
                          "semigroup reference must be an object or \"@path\"");
    }
    const nlohmann::json nested = read_json_file(base_dir / ref.substr(1));
    if (nested.is_string()) {
      throw invalid_input(Witness{"BadValue", {}},
                          "a referenced file must hold an inline semigroup");
    }
    return semigroup_from_json(nested, cap);
  }
  return semigroup_from_json(field, cap);
}

inline SemigroupDocument load_semigroup_file(const std::filesystem::path& path,
                                             int cap = kDefaultCap) {
  return semigroup_from_json(read_json_file(path), cap);
}

/// The document's star: explicit, or inversion when the base is inverse.
inline std::vector<int> resolve_star(const SemigroupDocument& doc) {
  if (doc.star) return *doc.star;
  if (classify(doc.s).is_inverse()) return inversion_star(doc.s);
  throw invalid_input(Witness{"MissingStar", {}},
                      "base is not inverse, so \"star\" is required");
}

inline nlohmann::json semigroup_to_json(
    const FiniteSemigroup& s, const std::vector<int>* star = nullptr,
    const std::vector<std::string>* labels = nullptr) {
  nlohmann::json j;
  j["n"] = s.n;
  nlohmann::json rows = nlohmann::json::array();
  for (int a = 0; a < s.n; ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (int b = 0; b < s.n; ++b) row.push_back(s.product(a, b));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  if (star) j["star"] = *star;
  if (labels && !labels->empty()) j["labels"] = *labels;
  return j;
}

/// Parses and fully validates an action document.
inline ActionDocument action_from_json(const nlohmann::json& j,
                                       const std::filesystem::path& base_dir,
                                       int cap = kDefaultCap) {
  ActionDocument doc;
  doc.base = semigroup_from_ref(detail::require_field(j, "semigroup"), base_dir,
                                cap);
  const int x_size =
      detail::require_int(detail::require_field(j, "x_size"), "\"x_size\"");
  std::vector<int> p =
      detail::require_int_array(detail::require_field(j, "p"), "\"p\"");
  const std::vector<std::vector<int>> rows =
      detail::require_table(detail::require_field(j, "act"), "\"act\" rows");
  if (static_cast<int>(rows.size()) != doc.base.s.n) {
    throw invalid_input(Witness{"BadValue", {static_cast<int>(rows.size())}},
                        "\"act\" must have one row per semigroup element");
  }
  std::vector<int> act;
  act.reserve(static_cast<std::size_t>(doc.base.s.n) * std::max(x_size, 0));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != x_size) {
      throw invalid_input(Witness{"BadValue", {static_cast<int>(row.size())}},
                          "\"act\" rows must have x_size columns");
    }
    act.insert(act.end(), row.begin(), row.end());
  }
  doc.action = load_action(doc.base.s, x_size, std::move(p), std::move(act));
  return doc;
}

inline ActionDocument load_action_file(const std::filesystem::path& path,
                                       int cap = kDefaultCap) {
  return action_from_json(read_json_file(path), path.parent_path(), cap);
}

inline nlohmann::json action_to_json(const EtaleAction& a,
                                     const std::vector<int>* base_star = nullptr) {
  nlohmann::json j;
  j["semigroup"] = semigroup_to_json(a.s, base_star);
  j["x_size"] = a.x_size;
  j["p"] = a.p;
  nlohmann::json rows = nlohmann::json::array();
  for (int t = 0; t < a.s.n; ++t) {
    nlohmann::json row = nlohmann::json::array();
    for (int x = 0; x < a.x_size; ++x) row.push_back(a.apply(t, x));
    rows.push_back(std::move(row));
  }
  j["act"] = std::move(rows);
  return j;
}

/// Parses a homomorphism document; the map is shape-checked only, so the
/// semantic checks report through the usual witnesses downstream.
inline HomDocument hom_from_json(const nlohmann::json& j,
                                 const std::filesystem::path& base_dir,
                                 int cap = kDefaultCap) {
  HomDocument doc;
  doc.source = semigroup_from_ref(detail::require_field(j, "source"), base_dir,
                                  cap);
  doc.target = semigroup_from_ref(detail::require_field(j, "target"), base_dir,
                                  cap);
  std::vector<int> map =
      detail::require_int_array(detail::require_field(j, "map"), "\"map\"");
  if (static_cast<int>(map.size()) != doc.source.s.n) {
    throw invalid_input(Witness{"BadValue", {static_cast<int>(map.size())}},
                        "\"map\" must list one image per source element");
  }
  for (int v : map) {
    if (v < 0 || v >= doc.target.s.n) {
      throw invalid_input(Witness{"BadValue", {v}}, "\"map\" entry out of range");
    }
  }
  doc.hom = SemigroupHom{doc.source.s, doc.target.s, std::move(map)};
  return doc;
}

inline HomDocument load_hom_file(const std::filesystem::path& path,
                                 int cap = kDefaultCap) {
  return hom_from_json(read_json_file(path), path.parent_path(), cap);
}

inline MorphismDocument morphism_from_json(const nlohmann::json& j) {
  MorphismDocument doc;
  if (j.contains("alpha"))
    doc.alpha = detail::require_int_array(j.at("alpha"), "\"alpha\"");
  doc.beta = detail::require_int_array(detail::require_field(j, "beta"),
                                       "\"beta\"");
  return doc;
}

/// Semidirect products serialize as a starred semigroup with the carrier
/// decoding attached: "pairs" lists the (element, point) behind each index
/// and "projection" is the first-coordinate homomorphism.
inline nlohmann::json semidirect_to_json(const SemidirectResult& r) {
  std::vector<std::string> labels;
  labels.reserve(r.pair_index.size());
  for (const auto& [s, x] : r.pair_index) {
    labels.push_back("(s=" + std::to_string(s) + ",x=" + std::to_string(x) +
                     ")");
  }
  nlohmann::json j = semigroup_to_json(r.product, &r.star.star, &labels);
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [s, x] : r.pair_index) {
    pairs.push_back(nlohmann::json::array({s, x}));
  }
  j["pairs"] = std::move(pairs);
  j["projection"] = r.projection.map;
  return j;
}

}  // namespace sgt
