#include "ovip/util.hpp"

#include <cctype>
#include <cstdio>

namespace ovip {

std::set<std::string> tokenize(std::string_view text) {
    std::set<std::string> out;
    std::string cur;
    for (char c : text) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        } else if (!cur.empty()) {
            out.insert(cur);
            cur.clear();
        }
    }
    if (!cur.empty()) out.insert(cur);
    return out;
}

std::string replace_all(std::string text, std::string_view placeholder, std::string_view value) {
    std::size_t pos = 0;
    while ((pos = text.find(placeholder, pos)) != std::string::npos) {
        text.replace(pos, placeholder.size(), value);
        pos += value.size();
    }
    return text;
}

void log_warn(const std::string& msg) {
    std::fprintf(stderr, "[ovip][warn] %s\n", msg.c_str());
}

void log_info(const std::string& msg) {
    std::fprintf(stderr, "[ovip][info] %s\n", msg.c_str());
}

}  // namespace ovip
