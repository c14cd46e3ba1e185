#include "agmon/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace agmon {
namespace {

std::string location_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const nlohmann::json& field(const nlohmann::json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

std::vector<Coord> integer_array(const nlohmann::json& doc, const char* name, std::size_t d) {
  const auto& arr = field(doc, name);
  if (!arr.is_array()) throw ParseError(std::string("field '") + name + "' must be an array");
  if (arr.size() != d) {
    throw ParseError(std::string("field '") + name + "' has " + std::to_string(arr.size()) +
                     " entries, expected d = " + std::to_string(d));
  }
  std::vector<Coord> out;
  out.reserve(d);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number_integer()) {
      throw ParseError(std::string("field '") + name + "'[" + std::to_string(i) +
                       "] must be an integer");
    }
    out.push_back(arr[i].get<Coord>());
  }
  return out;
}

void dump_into(const Json& value, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  if (value.is_object()) {
    if (value.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, item] : value.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(key).dump() + ": ";
      dump_into(item, indent + 2, out);
    }
    out += "\n" + close + "}";
  } else if (value.is_array()) {
    const bool flat = std::none_of(value.begin(), value.end(), [](const Json& v) {
      return v.is_structured();
    });
    if (value.empty() || flat) {
      out += "[";
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i > 0) out += ", ";
        dump_into(value[i], indent, out);
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (i > 0) out += ",\n";
      out += pad;
      dump_into(value[i], indent + 2, out);
    }
    out += "\n" + close + "]";
  } else if (value.is_number_float()) {
    out += format_double(value.get<double>());
  } else {
    out += value.dump();
  }
}

}  // namespace

LatticeSeq parse_sequence(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON at " + location_of(text, e.byte));
  }
  if (!doc.is_object()) throw ParseError("sequence document must be a JSON object");

  const auto& d_field = field(doc, "d");
  if (!d_field.is_number_integer() || d_field.get<std::int64_t>() < 0) {
    throw ParseError("field 'd' must be a non-negative integer");
  }
  const auto d = d_field.get<std::size_t>();
  std::vector<Coord> offset = integer_array(doc, "offset", d);
  std::vector<Coord> shape = integer_array(doc, "shape", d);
  for (std::size_t a = 0; a < d; ++a) {
    if (shape[a] < 1) {
      throw ParseError("field 'shape'[" + std::to_string(a) + "] must be >= 1");
    }
  }

  const auto& raw = field(doc, "values");
  if (!raw.is_array()) throw ParseError("field 'values' must be an array");
  std::vector<double> values;
  values.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!raw[i].is_number()) {
      throw ParseError("field 'values'[" + std::to_string(i) + "] must be a number");
    }
    values.push_back(raw[i].get<double>());
  }
  try {
    return LatticeSeq(d, SupportBox{std::move(offset), std::move(shape)}, std::move(values));
  } catch (const DomainError& e) {
    throw ParseError(std::string("field 'values': ") + e.what());
  }
}

LatticeSeq read_sequence_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_sequence(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Json to_json(const LatticeSeq& seq) {
  Json out;
  out["d"] = seq.dim();
  out["offset"] = seq.box().offset;
  out["shape"] = seq.box().shape;
  Json values = Json::array();
  for (double v : seq.values()) values.push_back(v);
  out["values"] = std::move(values);
  return out;
}

void write_sequence_file(const std::filesystem::path& path, const LatticeSeq& seq) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << dump_canonical(to_json(seq)) << '\n';
}

std::string format_double(double value) {
  if (!std::isfinite(value)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string dump_canonical(const Json& value) {
  std::string out;
  dump_into(value, 0, out);
  return out;
}

}  // namespace agmon
