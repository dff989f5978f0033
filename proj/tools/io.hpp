#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "bohrlab/extractor.hpp"
#include "bohrlab/setlab.hpp"

namespace bohrlab::io {

inline constexpr const char* kCertSchema = "bohrlab-cert/1";

// Reads a set file. Two layouts are accepted: one decimal element index per
// line (canonical order rank; blank lines and '#' comments ignored), or a JSON
// array of coordinate tuples. For cyclic groups bare integers may stand in for
// 1-tuples inside the JSON array.
GroupSubset parse_set(const GroupSpec& g, const std::string& text);
GroupSubset read_set_file(const GroupSpec& g, const std::filesystem::path& path);

enum class SetFormat { lines, json };
std::string format_set(const GroupSubset& s, SetFormat format);

// Decimal string with 17 significant digits.
std::string radius_string(double r);

nlohmann::ordered_json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace bohrlab::io
