#include "lscat/report.hpp"

#include <algorithm>
#include <sstream>

namespace lscat {

void Report::set(std::string key, std::string value) {
    for (auto& [k, v] : entries_)
        if (k == key) {
            v = std::move(value);
            return;
        }
    entries_.emplace_back(std::move(key), std::move(value));
}

const std::string* Report::find(const std::string& key) const {
    for (const auto& [k, v] : entries_)
        if (k == key) return &v;
    return nullptr;
}

std::string Report::structured() const {
    std::ostringstream os;
    for (const auto& [k, v] : entries_) os << k << " = " << v << '\n';
    return os.str();
}

std::string Report::human() const {
    std::ostringstream os;
    std::string group;
    std::size_t width = 0;
    for (const auto& [k, v] : entries_) {
        const auto dot = k.find('.');
        width = std::max(width, dot == std::string::npos ? k.size() : k.size() - dot - 1);
    }
    for (const auto& [k, v] : entries_) {
        const auto dot = k.find('.');
        const std::string head = dot == std::string::npos ? "" : k.substr(0, dot);
        const std::string tail = dot == std::string::npos ? k : k.substr(dot + 1);
        if (head != group) {
            if (!group.empty() || os.tellp() > 0) os << '\n';
            if (!head.empty()) os << head << '\n';
            group = head;
        }
        os << (head.empty() ? "" : "  ") << tail << std::string(width + 2 - std::min(width + 1, tail.size()), ' ')
           << v << '\n';
    }
    return os.str();
}

}  // namespace lscat
