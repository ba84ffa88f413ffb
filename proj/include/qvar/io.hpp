#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qvar/examples.hpp"
#include "qvar/homext.hpp"
#include "qvar/rep.hpp"

namespace qvar {

using json = nlohmann::json;

inline constexpr const char* kVersion = "qvar 1.0.0";
inline constexpr int kSchemaVersion = 1;

/// "fnv1a64:<16 hex digits>" of the bytes.
std::string fnv1a64(std::string_view bytes);

/// Whole file (or standard input for "-"). Throws InputError.
std::string read_text(const std::string& path);
json parse_json(const std::string& text, const std::string& origin);

/// Integers stay JSON integers; other rationals become "p/q" strings.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

/// List of rows. An empty list stands for any shape with no entries.
json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& what);

json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);

/// Object vertex name -> integer; missing vertices are 0.
json dims_to_json(const Quiver& q, const DimVector& v);
DimVector dims_from_json(const Quiver& q, const json& j, const std::string& what);

/// Object vertex name -> number or "p/q"; missing vertices are an error.
ZetaParam zeta_from_json(const Quiver& q, const json& j);

json rep_to_json(const FramedRep& x);
/// The "quiver" field is inline or a path resolved against base_dir.
FramedRep rep_from_json(const json& j, const std::filesystem::path& base_dir);

json bundle_to_json(const ExampleBundle& b);

/// Accepts a representation, a bundle, or a Report wrapping either; for
/// bundles `point` selects by index or label (default: the first point).
FramedRep resolve_rep(const json& doc, const std::filesystem::path& base_dir,
                      const std::optional<std::string>& point = std::nullopt);

/// Cocycle file for the complex (S_i, x').
json classes_to_json(const FramedRep& xprime, std::size_t vertex, const std::vector<RatVector>& classes);
/// Throws InputError when the layout hash does not match x' and the vertex.
std::vector<RatVector> classes_from_json(const json& j, const FramedRep& xprime, std::size_t vertex);
std::string layout_hash(const FramedRep& xprime, std::size_t vertex);

struct InputRecord {
  std::string path;
  std::string hash;
};

json make_report(const std::string& command, const std::vector<InputRecord>& inputs, json result,
                 std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace qvar
