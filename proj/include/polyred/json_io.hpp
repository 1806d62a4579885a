#ifndef POLYRED_JSON_IO_HPP
#define POLYRED_JSON_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "polyred/graded_series.hpp"
#include "polyred/poly_system.hpp"

namespace polyred {

using Json = nlohmann::ordered_json;

/// Schema violation; what() starts with the offending field path.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// {"nvars": n, "terms": [{"exp": [...], "re": "p/q", "im": "p/q"}]},
/// terms in graded-lex descending order.
Json polynomial_to_json(const Polynomial& p);
/// `path` prefixes error messages, e.g. "components[2]".
Polynomial polynomial_from_json(const Json& j, const std::string& path = "polynomial");

struct SystemFile {
  PolySystem system;
  std::optional<Json> provenance;
};

Json system_to_json(const SystemFile& file);
SystemFile system_from_json(const Json& j);

/// Canonical text: two-space indented JSON plus a trailing newline.
std::string emit_system(const SystemFile& file);
/// Throws SchemaError (including JSON syntax errors, path "<document>").
SystemFile parse_system(const std::string& text);
/// Throws std::runtime_error when the file cannot be read.
SystemFile read_system_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// {"order": N, "grades": [{"grade": r, "components": [...]}]}.
Json graded_series_to_json(const GradedSeriesVector& g);
Json graded_series_to_json(const GradedSeries& g);

}  // namespace polyred

#endif  // POLYRED_JSON_IO_HPP
