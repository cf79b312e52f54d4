#include "algequiv/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "algequiv/errors.hpp"

namespace algequiv {

namespace {

using nlohmann::json;

FieldSpec parse_field_object(const json& f) {
  if (!f.is_object() || !f.contains("kind") || !f["kind"].is_string())
    throw ParseError("'field' must be an object with a string 'kind'");
  const std::string kind = f["kind"].get<std::string>();
  if (kind == "rational") return FieldSpec::rational();
  if (kind == "prime") {
    if (!f.contains("p") || !f["p"].is_number_unsigned()) throw ParseError("prime field needs a positive integer 'p'");
    return FieldSpec::prime(f["p"].get<std::uint64_t>());
  }
  throw ParseError("unknown field kind '" + kind + "'");
}

}  // namespace

Msc parse_algebra(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("algebra file must be a JSON object");
  for (const char* key : {"dim", "field", "constants"})
    if (!doc.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  if (!doc["dim"].is_number_unsigned() || doc["dim"].get<std::uint64_t>() == 0)
    throw ParseError("'dim' must be a positive integer");
  const auto m = static_cast<std::size_t>(doc["dim"].get<std::uint64_t>());
  const FieldSpec field = parse_field_object(doc["field"]);

  const json& rows = doc["constants"];
  if (!rows.is_array() || rows.size() != m)
    throw ParseError("'constants' must hold " + std::to_string(m) + " rows");
  std::vector<Scalar> entries;
  entries.reserve(m * m * m);
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != m * m)
      throw ParseError("each row of 'constants' must hold " + std::to_string(m * m) + " entries");
    for (const json& cell : row) {
      if (!cell.is_string()) throw ParseError("structure constants must be strings");
      entries.push_back(Scalar::parse(field, cell.get<std::string>()));
    }
  }
  return Msc(Mat(field, m, m * m, std::move(entries)));
}

std::string format_algebra(const Msc& a) {
  std::ostringstream os;
  os << "{\n  \"dim\": " << a.dim() << ",\n  \"field\": ";
  if (a.field().is_rational())
    os << R"({"kind": "rational"})";
  else
    os << R"({"kind": "prime", "p": )" << a.field().modulus() << '}';
  os << ",\n  \"constants\": [\n";
  const Mat& mat = a.matrix();
  for (std::size_t r = 0; r < mat.rows(); ++r) {
    os << "    [";
    for (std::size_t c = 0; c < mat.cols(); ++c) os << (c ? ", " : "") << json(mat(r, c).to_string()).dump();
    os << (r + 1 < mat.rows() ? "],\n" : "]\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

Msc read_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

FieldSpec parse_field_flag(std::string_view text) {
  if (text == "rational") return FieldSpec::rational();
  constexpr std::string_view prefix = "prime:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string_view digits = text.substr(prefix.size());
    std::uint64_t p = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) return FieldSpec::prime(p);
  }
  throw ParseError("field must be 'rational' or 'prime:<p>', got '" + std::string(text) + "'");
}

}  // namespace algequiv
