#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "quadpencil/local.hpp"
#include "quadpencil/pencil.hpp"

namespace qp::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Malformed JSON or a document that does not match its schema (exit code 1).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reads a whole file as JSON; syntax errors carry the byte position.
Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text, const std::string& origin = "<input>");
void write_json_file(const std::string& path, const Json& j);
/// Two-space indented dump followed by a newline.
std::string dump(const Json& j);

/// Field-by-field reader for a JSON object that rejects unknown keys.
class ObjectReader {
 public:
  ObjectReader(const Json& j, std::string path);

  bool has(const std::string& key) const;
  const Json& at(const std::string& key);  // throws ParseError when missing
  std::string string(const std::string& key);
  bool boolean(const std::string& key);
  long long integer(const std::string& key);
  std::size_t size(const std::string& key);
  ObjectReader object(const std::string& key);
  std::string path(const std::string& key) const { return path_ + "." + key; }
  /// Accepts a missing "schema" or the current version; anything else throws.
  void schema();
  /// Throws ParseError naming the first key that was never read.
  void finish() const;

 private:
  const Json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

Json to_json(const Rat& x);  // "p/q" or "p"
Rat rat_from_json(const Json& j, const std::string& path);  // string or integer

Json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j, const std::string& path, std::size_t n);

Json to_json(const QPoly& p);  // coefficient strings, lowest degree first
QPoly poly_from_json(const Json& j, const std::string& path);

/// {"schema": 1, "n": n, "gram": [[...]]}; symmetry is validated on load
/// (std::invalid_argument, exit code 2).
Json form_to_json(const RatMatrix& q);
RatMatrix form_from_json(const Json& j);

/// {"schema": 1, "n": n, "F": [[...]], "G": [[...]]}.
Json pencil_to_json(const Pencil& p);
Pencil pencil_from_json(const Json& j);

Json to_json(const SquareClass& c);
Json to_json(const WittData& w);

/// "inf" or a prime.
Place place_from_string(const std::string& s);

}  // namespace qp::io
