#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ovip/types.hpp"

namespace ovip {

/// Reads a samples.jsonl dataset (one {id, image, query, answer} object per
/// line). Throws std::runtime_error naming the offending line on malformed
/// input, duplicate ids, or empty query/answer.
std::vector<TrainSample> read_dataset(const std::filesystem::path& path);
std::vector<TrainSample> read_dataset(std::istream& in, const std::string& source_name);

/// One JSON object per line; blank lines are not allowed mid-file but a
/// trailing newline is.
template <typename T>
std::vector<T> read_jsonl(std::istream& in, const std::string& source_name) {
    std::vector<T> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() && in.peek() == std::char_traits<char>::eof()) break;
        try {
            out.push_back(nlohmann::json::parse(line).get<T>());
        } catch (const std::exception& e) {
            throw std::runtime_error(source_name + ": line " + std::to_string(line_no) + ": " +
                                     e.what());
        }
    }
    return out;
}

template <typename T>
std::vector<T> read_jsonl_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_jsonl<T>(in, path.string());
}

template <typename T>
void write_jsonl(std::ostream& out, const std::vector<T>& items) {
    for (const auto& item : items) out << nlohmann::json(item).dump() << '\n';
}

template <typename T>
void write_jsonl_file(const std::filesystem::path& path, const std::vector<T>& items) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_jsonl(out, items);
}

PipelineConfig read_config_file(const std::filesystem::path& path);
void write_config_file(const std::filesystem::path& path, const PipelineConfig& cfg);

}  // namespace ovip
