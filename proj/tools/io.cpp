#include "io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "bohrlab/errors.hpp"

namespace bohrlab::io {

namespace {

Elem elem_from_json(const GroupSpec& g, const nlohmann::json& v) {
  Elem z;
  if (v.is_number_integer() && g.rank() == 1) {
    if (v.get<std::int64_t>() < 0) throw ShapeError("negative coordinate in set file");
    z.coords = {v.get<std::uint64_t>()};
  } else if (v.is_array()) {
    for (const auto& c : v) {
      if (!c.is_number_integer() || c.get<std::int64_t>() < 0) {
        throw ParseError("coordinates must be non-negative integers");
      }
      z.coords.push_back(c.get<std::uint64_t>());
    }
  } else {
    throw ParseError("expected a coordinate tuple");
  }
  g.check(z);
  return z;
}

nlohmann::ordered_json bohr_to_json(const BohrSpec& b) {
  nlohmann::ordered_json j;
  j["form"] = to_string(b.form());
  j["radius"] = radius_string(b.radius());
  auto freqs = nlohmann::ordered_json::array();
  for (const Char& t : b.freqs()) freqs.push_back(t.freq);
  j["freqs"] = std::move(freqs);
  j["center"] = b.center() ? nlohmann::ordered_json(b.center()->coords) : nlohmann::ordered_json();
  return j;
}

double parse_radius(const nlohmann::json& v) {
  if (v.is_number()) return v.get<double>();
  const std::string s = v.get<std::string>();
  double r = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), r);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("malformed radius '" + s + "'");
  }
  return r;
}

BohrSpec bohr_from_json(const GroupSpec& g, const nlohmann::json& j) {
  std::vector<Char> freqs;
  for (const auto& t : j.at("freqs")) freqs.push_back(Char{elem_from_json(g, t).coords});
  std::optional<Elem> center;
  if (j.contains("center") && !j.at("center").is_null()) center = elem_from_json(g, j.at("center"));
  return BohrSpec(g, std::move(freqs), parse_radius(j.at("radius")),
                  radius_form_from_string(j.at("form").get<std::string>()), std::move(center));
}

}  // namespace

GroupSubset parse_set(const GroupSpec& g, const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("set file is not valid JSON: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("JSON set file must be an array");
    std::vector<Elem> elems;
    for (const auto& v : j) elems.push_back(elem_from_json(g, v));
    return GroupSubset::from_elems(g, elems);
  }
  std::vector<Index> idx;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    const std::string_view tok(line.data() + b, e - b + 1);
    Index v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw ParseError("line " + std::to_string(lineno) + ": expected an element index, got '" +
                       std::string(tok) + "'");
    }
    if (v >= g.order()) {
      throw ShapeError("line " + std::to_string(lineno) + ": element index " + std::to_string(v) +
                       " out of range for group " + g.to_string());
    }
    idx.push_back(v);
  }
  return GroupSubset::from_indices(g, idx);
}

GroupSubset read_set_file(const GroupSpec& g, const std::filesystem::path& path) {
  return parse_set(g, read_text_file(path));
}

std::string format_set(const GroupSubset& s, SetFormat format) {
  if (format == SetFormat::json) {
    auto j = nlohmann::ordered_json::array();
    for (const Elem& z : s.elems()) j.push_back(z.coords);
    return j.dump() + "\n";
  }
  std::string out;
  for (Index i : s.indices()) out += std::to_string(i) + "\n";
  return out;
}

std::string radius_string(double r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", r);
  return buf;
}

nlohmann::ordered_json certificate_to_json(const Certificate& cert) {
  nlohmann::ordered_json j;
  j["schema"] = kCertSchema;
  j["group"] = cert.group.to_string();
  j["delta"] = cert.delta;
  j["f_scale"] = cert.f_scale;
  j["g_scale"] = cert.g_scale;
  j["a0"] = cert.a0.coords;
  j["k"] = cert.k;
  auto s1 = nlohmann::ordered_json::array();
  for (const Char& t : cert.s1) s1.push_back(t.freq);
  j["s1"] = std::move(s1);
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& c : cert.p_coeffs) coeffs.push_back({c.real(), c.imag()});
  j["p_coeffs"] = std::move(coeffs);
  j["c"] = cert.c;
  j["h_at_a0"] = cert.h_at_a0;
  j["bohr_char_form"] = bohr_to_json(cert.bohr_char_form);
  j["bohr_torus_form"] = bohr_to_json(cert.bohr_torus_form);
  const BoundChecks& b = cert.bounds;
  nlohmann::ordered_json bj;
  bj["s1_bound"] = b.s1_bound;
  bj["s1_ok"] = b.s1_ok;
  bj["h_floor"] = b.h_floor;
  bj["h_ok"] = b.h_ok;
  bj["c_floor"] = b.c_floor;
  bj["c_ok"] = b.c_ok;
  bj["eta_floor"] = b.eta_floor;
  bj["eta_ok"] = b.eta_ok;
  bj["remainder_cap"] = b.remainder_cap;
  bj["remainder_max"] = b.remainder_max;
  bj["remainder_ok"] = b.remainder_ok;
  j["bounds"] = std::move(bj);
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema").get<std::string>() != kCertSchema) {
      throw ParseError("unsupported certificate schema '" + j.at("schema").get<std::string>() + "'");
    }
    const GroupSpec g = GroupSpec::parse(j.at("group").get<std::string>());
    std::vector<Char> s1;
    for (const auto& t : j.at("s1")) s1.push_back(Char{elem_from_json(g, t).coords});
    std::vector<std::complex<double>> coeffs;
    for (const auto& c : j.at("p_coeffs")) {
      coeffs.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
    }
    const auto& bj = j.at("bounds");
    BoundChecks b;
    b.s1_bound = bj.at("s1_bound").get<double>();
    b.s1_ok = bj.at("s1_ok").get<bool>();
    b.h_floor = bj.at("h_floor").get<double>();
    b.h_ok = bj.at("h_ok").get<bool>();
    b.c_floor = bj.at("c_floor").get<double>();
    b.c_ok = bj.at("c_ok").get<bool>();
    b.eta_floor = bj.at("eta_floor").get<double>();
    b.eta_ok = bj.at("eta_ok").get<bool>();
    b.remainder_cap = bj.at("remainder_cap").get<double>();
    b.remainder_max = bj.at("remainder_max").get<double>();
    b.remainder_ok = bj.at("remainder_ok").get<bool>();
    return Certificate{g,
                       j.at("delta").get<double>(),
                       j.at("f_scale").get<double>(),
                       j.at("g_scale").get<double>(),
                       elem_from_json(g, j.at("a0")),
                       std::move(s1),
                       std::move(coeffs),
                       j.at("c").get<double>(),
                       bohr_from_json(g, j.at("bohr_char_form")),
                       bohr_from_json(g, j.at("bohr_torus_form")),
                       j.at("h_at_a0").get<double>(),
                       j.at("k").get<std::size_t>(),
                       b};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  } catch (const ShapeError& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text;
}

}  // namespace bohrlab::io
