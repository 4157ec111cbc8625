#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace factcheck::util {

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

// Lowercases, maps every non-alphanumeric byte to a space and collapses
// space runs. Label matching and alias lookup both go through this.
std::string normalize_for_match(std::string_view s);

// Whole-word search of `needle` in `haystack`; both already normalized.
bool contains_word(std::string_view haystack, std::string_view needle);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// First run of alphabetic characters, lowercased ("Yes, it does." -> "yes").
std::string first_word(std::string_view s);

std::uint64_t fnv1a64(std::string_view s);
std::uint64_t splitmix64(std::uint64_t x);

double dot(const std::vector<float>& a, const std::vector<float>& b);
double l2_norm(const std::vector<float>& v);
// Normalizes in place; a zero vector is left untouched.
void l2_normalize(std::vector<float>& v);
std::vector<float> mean_vector(const std::vector<std::vector<float>>& vs);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

// Runs fn(0..n-1) on up to `workers` threads (n <= workers runs one item per
// thread; workers <= 1 degenerates to a plain loop). The first exception is
// rethrown on the calling thread once all workers have joined.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

} // namespace factcheck::util
