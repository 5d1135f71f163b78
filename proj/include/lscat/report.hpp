#pragma once

#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace lscat {

// Ordered key/value tree with dotted keys, e.g. "toomer.oracle.e0".
class Report {
public:
    void set(std::string key, std::string value);
    void set(std::string key, const char* value) { set(std::move(key), std::string(value)); }
    void set(std::string key, bool value) { set(std::move(key), std::string(value ? "true" : "false")); }
    template <typename Int>
        requires std::is_integral_v<Int>
    void set(std::string key, Int value) {
        set(std::move(key), std::to_string(value));
    }

    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
    const std::string* find(const std::string& key) const;

    // One "key = value" line per entry.
    std::string structured() const;
    // Entries grouped under their first key component.
    std::string human() const;

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace lscat
