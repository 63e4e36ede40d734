#include "monovex/io.hpp"

#include <json.hpp>

#include "monovex/errors.hpp"

namespace monovex {

namespace {

using nlohmann::json;

json endpoint_json(const Dyadic& x) {
  if (x.is_integer() && x.mantissa() >= std::numeric_limits<std::int64_t>::min() &&
      x.mantissa() <= std::numeric_limits<std::int64_t>::max()) {
    return x.mantissa().convert_to<std::int64_t>();
  }
  return x.str();
}

Dyadic endpoint_from(const json& j) {
  if (j.is_number_integer()) return Dyadic(static_cast<long long>(j.get<std::int64_t>()));
  if (j.is_string()) return Dyadic::parse(j.get<std::string>());
  throw ParseError("endpoint must be an integer or a \"m/2^e\" string");
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return obj.at(name);
}

bool flag_from(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_boolean()) throw ParseError(std::string("field '") + name + "' must be a boolean");
  return v.get<bool>();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string dump_complex(const SpanComplex& complex) {
  json boxes = json::array();
  for (const auto& box : complex.boxes()) {
    json b = json::array();
    for (const auto& iv : box.intervals()) {
      b.push_back({{"lo", endpoint_json(iv.lo())},
                   {"hi", endpoint_json(iv.hi())},
                   {"lo_closed", iv.lo_closed()},
                   {"hi_closed", iv.hi_closed()}});
    }
    boxes.push_back(std::move(b));
  }
  json doc = {{"dim", complex.dim()}, {"boxes", std::move(boxes)}};
  return doc.dump(1) + "\n";
}

SpanComplex parse_complex(std::string_view text) {
  json doc = parse_json(text);
  const json& dim = field(doc, "dim");
  if (!dim.is_number_unsigned()) throw ParseError("'dim' must be a nonnegative integer");
  const std::size_t n = dim.get<std::size_t>();
  const json& boxes = field(doc, "boxes");
  if (!boxes.is_array()) throw ParseError("'boxes' must be a list");
  SpanComplex out(n);
  for (const auto& b : boxes) {
    if (!b.is_array()) throw ParseError("each box must be a list of intervals");
    if (b.size() != n) throw DimensionError("box has " + std::to_string(b.size()) + " intervals, expected " + std::to_string(n));
    std::vector<Interval> iv;
    iv.reserve(n);
    for (const auto& r : b) {
      Dyadic lo = endpoint_from(field(r, "lo"));
      Dyadic hi = endpoint_from(field(r, "hi"));
      try {
        iv.emplace_back(std::move(lo), std::move(hi), flag_from(r, "lo_closed"), flag_from(r, "hi_closed"));
      } catch (const PreconditionError& e) {
        throw ParseError(std::string("invalid interval: ") + e.what());
      }
    }
    out.add(BoxRegion(std::move(iv)));
  }
  return out;
}

std::string dump_path(const MonotonePath& path) {
  json w = json::array();
  for (const auto& p : path.waypoints) {
    json c = json::array();
    for (const auto& x : p) c.push_back(x.str());
    w.push_back(std::move(c));
  }
  json doc = {{"waypoints", std::move(w)}, {"signs", path.direction.signs}};
  return doc.dump(1) + "\n";
}

MonotonePath parse_path(std::string_view text) {
  json doc = parse_json(text);
  const json& w = field(doc, "waypoints");
  if (!w.is_array() || w.empty()) throw ParseError("'waypoints' must be a nonempty list");
  MonotonePath path;
  for (const auto& p : w) {
    if (!p.is_array()) throw ParseError("waypoint must be a list");
    std::vector<Dyadic> c;
    for (const auto& x : p) c.push_back(endpoint_from(x));
    path.waypoints.emplace_back(std::move(c));
  }
  const json& s = field(doc, "signs");
  if (!s.is_array()) throw ParseError("'signs' must be a list");
  for (const auto& v : s) {
    if (!v.is_number_integer() || v.get<int>() < -1 || v.get<int>() > 1) throw ParseError("sign must be -1, 0 or 1");
    path.direction.signs.push_back(v.get<int>());
  }
  for (const auto& p : path.waypoints) {
    if (p.size() != path.direction.signs.size()) throw DimensionError("waypoint and sign pattern lengths differ");
  }
  return path;
}

Point parse_point(std::string_view text) {
  std::vector<Dyadic> coords;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    coords.push_back(Dyadic::parse(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Point(std::move(coords));
}

}  // namespace monovex
