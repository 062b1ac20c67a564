#include "ovip/io.hpp"

#include <fstream>
#include <unordered_set>

namespace ovip {

std::vector<TrainSample> read_dataset(std::istream& in, const std::string& source_name) {
    std::vector<TrainSample> samples;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() && in.peek() == std::char_traits<char>::eof()) break;
        TrainSample s;
        try {
            s = nlohmann::json::parse(line).get<TrainSample>();
        } catch (const std::exception& e) {
            throw std::runtime_error(source_name + ": line " + std::to_string(line_no) + ": " +
                                     e.what());
        }
        if (s.query.empty() || s.reference_answer.empty()) {
            throw std::runtime_error(source_name + ": line " + std::to_string(line_no) +
                                     ": query and answer must be non-empty");
        }
        if (!seen_ids.insert(s.id).second) {
            throw std::runtime_error(source_name + ": line " + std::to_string(line_no) +
                                     ": duplicate sample id \"" + s.id + "\"");
        }
        samples.push_back(std::move(s));
    }
    return samples;
}

std::vector<TrainSample> read_dataset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset " + path.string());
    return read_dataset(in, path.string());
}

PipelineConfig read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error("config " + path.string() + ": " + e.what());
    }
    return validate_config(j.get<PipelineConfig>());
}

void write_config_file(const std::filesystem::path& path, const PipelineConfig& cfg) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << nlohmann::json(cfg).dump(2) << '\n';
}

}  // namespace ovip
