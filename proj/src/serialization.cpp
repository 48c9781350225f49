#include "hyperconv/serialization.hpp"

#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "hyperconv/errors.hpp"
#include "hyperconv/models.hpp"

namespace hyperconv {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

namespace {

std::string coord_field(const Point& p) {
  if (!p.is_vector()) return format_double(p.coord);
  std::string out;
  for (std::size_t i = 0; i < p.vec.size(); ++i) {
    if (i) out += ';';
    out += format_double(p.vec[i]);
  }
  return out;
}

}  // namespace

std::string measure_to_csv(const Measure& mu) {
  std::string out = "coord,weight\n";
  for (const auto& [p, w] : mu.entries()) {
    out += coord_field(p);
    out += ',';
    out += format_double(w);
    out += '\n';
  }
  return out;
}

std::string measure_to_json(const Measure& mu) {
  std::string out = "{\"space_id\":\"" + json_escape(mu.space()) +
                    "\",\"entries\":[";
  bool first = true;
  for (const auto& [p, w] : mu.entries()) {
    if (!first) out += ',';
    first = false;
    out += "{\"coord\":";
    if (p.is_vector()) {
      out += '[';
      for (std::size_t i = 0; i < p.vec.size(); ++i) {
        if (i) out += ',';
        out += format_double(p.vec[i]);
      }
      out += ']';
    } else {
      out += format_double(p.coord);
    }
    out += ",\"weight\":" + format_double(w) + "}";
  }
  out += "]}";
  return out;
}

namespace {

Point vector_point(const std::string& space, std::vector<double> vec) {
  Point p;
  p.space = space;
  p.index = -1;
  p.vec = std::move(vec);
  return p;
}

}  // namespace

Measure measure_from_csv(const Hypergroup& H, const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line.rfind("coord", 0) != 0)
    throw BadDescriptor("measure csv: missing 'coord,weight' header");
  std::vector<Measure::Entry> entries;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.rfind(',');
    if (comma == std::string::npos)
      throw BadDescriptor("measure csv: malformed row '" + line + "'");
    const std::string coord = line.substr(0, comma);
    const double w = std::stod(line.substr(comma + 1));
    if (coord.find(';') != std::string::npos) {
      std::vector<double> vec;
      std::istringstream cs(coord);
      std::string part;
      while (std::getline(cs, part, ';')) vec.push_back(std::stod(part));
      entries.emplace_back(vector_point(H.space(), std::move(vec)), w);
    } else {
      entries.emplace_back(H.point_at(std::stod(coord)), w);
    }
  }
  return Measure::from_entries(H.space(), std::move(entries));
}

Measure measure_from_json(const Hypergroup& H, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw BadDescriptor(std::string("measure json: ") + e.what());
  }
  if (!j.contains("entries") || !j["entries"].is_array())
    throw BadDescriptor("measure json: missing entries array");
  if (j.contains("space_id") && j["space_id"].get<std::string>() != H.space())
    throw SpaceMismatch("measure json: space_id '" +
                        j["space_id"].get<std::string>() +
                        "' vs model ground space '" + H.space() + "'");
  std::vector<Measure::Entry> entries;
  for (const auto& e : j["entries"]) {
    const double w = e.at("weight").get<double>();
    const auto& c = e.at("coord");
    if (c.is_array()) {
      entries.emplace_back(
          vector_point(H.space(), c.get<std::vector<double>>()), w);
    } else {
      entries.emplace_back(H.point_at(c.get<double>()), w);
    }
  }
  return Measure::from_entries(H.space(), std::move(entries));
}

HypergroupPtr model_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw BadDescriptor(std::string("model json: ") + e.what());
  }
  const std::string kind = j.value("kind", "");
  static const std::set<std::string> keys{"kind", "sample_limit", "h",
                                          "x_max", "table", "subgroup"};
  for (const auto& [k, v] : j.items())
    if (!keys.count(k)) throw BadDescriptor("model json: unknown key '" + k + "'");
  if (kind == "chebyshev")
    return chebyshev_hypergroup(j.value("sample_limit", std::int64_t{64}));
  if (kind == "bessel_kingman")
    return bessel_kingman(j.value("h", 1.0 / 64), j.value("x_max", 16.0));
  if (kind == "hyperbolic")
    return hyperbolic(j.value("h", 1.0 / 64), j.value("x_max", 16.0));
  if (kind == "double_coset") {
    if (!j.contains("table") || !j.contains("subgroup"))
      throw BadDescriptor("model json: double_coset needs table and subgroup");
    return finite_double_coset(j["table"].get<std::vector<std::vector<int>>>(),
                               j["subgroup"].get<std::vector<int>>());
  }
  throw BadDescriptor("model json: unknown kind '" + kind + "'");
}

std::string model_to_json(const std::string& kind, double h, double x_max) {
  if (kind == "chebyshev") return "{\"kind\":\"chebyshev\"}";
  return "{\"kind\":\"" + json_escape(kind) + "\",\"h\":" + format_double(h) +
         ",\"x_max\":" + format_double(x_max) + "}";
}

namespace {

// "family:key=value,key=value" -> (family, params)
std::pair<std::string, std::map<std::string, double>> parse_compact(
    const std::string& s) {
  const auto colon = s.find(':');
  std::map<std::string, double> params;
  if (colon == std::string::npos) return {s, params};
  std::istringstream in(s.substr(colon + 1));
  std::string part;
  while (std::getline(in, part, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos)
      throw BadDescriptor("descriptor: expected key=value in '" + part + "'");
    params[part.substr(0, eq)] = std::stod(part.substr(eq + 1));
  }
  return {s.substr(0, colon), params};
}

double need(const std::map<std::string, double>& params, const std::string& k,
            const std::string& who) {
  auto it = params.find(k);
  if (it == params.end())
    throw BadDescriptor(who + ": missing parameter '" + k + "'");
  return it->second;
}

}  // namespace

Semicharacter semicharacter_from_descriptor(const Hypergroup& H,
                                            const std::string& descriptor) {
  std::string family;
  std::map<std::string, double> params;
  if (!descriptor.empty() && descriptor.front() == '{') {
    json j;
    try {
      j = json::parse(descriptor);
    } catch (const json::exception& e) {
      throw BadDescriptor(std::string("semicharacter json: ") + e.what());
    }
    family = j.value("family", "");
    for (const auto& [k, v] : j.items())
      if (k != "family" && k != "profile") params[k] = v.get<double>();
    if (j.contains("profile")) {
      auto prof = sl_profile_from_descriptor(j["profile"].get<std::string>());
      return sc_sl_numeric(H, prof, need(params, "lambda", "sl_numeric"),
                           params.count("rho") ? params["rho"] : 0.0);
    }
  } else {
    std::tie(family, params) = parse_compact(descriptor);
  }

  if (family == "one") return sc_one(H);
  if (family == "cosh") return sc_cosh(H, need(params, "s", "cosh"));
  if (family == "bessel_sin")
    return sc_bessel_sin(H, need(params, "lambda", "bessel_sin"));
  if (family == "bessel_sinh")
    return sc_bessel_sinh(H, need(params, "rho", "bessel_sinh"));
  if (family == "hyperbolic_sin")
    return sc_hyperbolic_sin(H, need(params, "lambda", "hyperbolic_sin"));
  if (family == "hyperbolic_sinh")
    return sc_hyperbolic_sinh(H, need(params, "lambda", "hyperbolic_sinh"));
  if (family == "sl_numeric") {
    SlProfilePtr prof =
        params.count("k") ? sl_power_profile(params["k"]) : sl_sinh2_profile();
    return sc_sl_numeric(H, prof, need(params, "lambda", "sl_numeric"),
                         params.count("rho") ? params["rho"] : 0.0);
  }
  throw BadDescriptor("semicharacter: unknown family '" + family + "'");
}

SlProfilePtr sl_profile_from_descriptor(const std::string& descriptor) {
  if (!descriptor.empty() && descriptor.front() == '{') {
    json j;
    try {
      j = json::parse(descriptor);
    } catch (const json::exception& e) {
      throw BadDescriptor(std::string("profile json: ") + e.what());
    }
    const std::string kind = j.value("kind", "");
    if (kind == "power") return sl_power_profile(j.value("k", 2.0));
    if (kind == "sinh2") return sl_sinh2_profile();
    if (kind == "table")
      return sl_table_profile(j.at("step").get<double>(),
                              j.at("values").get<std::vector<double>>(),
                              j.value("k0", 2.0));
    throw BadDescriptor("profile json: unknown kind '" + kind + "'");
  }
  auto [kind, params] = parse_compact(descriptor);
  if (kind == "power") return sl_power_profile(need(params, "k", "power"));
  if (kind == "sinh2") return sl_sinh2_profile();
  throw BadDescriptor("profile: unknown kind '" + kind + "'");
}

}  // namespace hyperconv
