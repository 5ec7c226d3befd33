#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace stylo {

// Insertion-ordered JSON keeps serialized artifacts stable across runs.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

std::uint64_t fnv1a64(std::string_view bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

std::string to_lower(std::string_view s);
std::string_view trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

bool is_ascii_space(char c);
bool is_ascii_digit(char c);
bool is_ascii_alpha(char c);
bool is_ascii_upper(char c);

// Little-endian binary scalar IO for model/space payload sections.
void append_f64(std::string& out, double v);
void append_f32(std::string& out, float v);
double read_f64(const char* p);
float read_f32(const char* p);

// Hex rendering of a 64-bit hash, used for config hashes in artifacts.
std::string hex64(std::uint64_t v);

}  // namespace stylo
