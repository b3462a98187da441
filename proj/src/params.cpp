#include "wavecl/params.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace wavecl::params {

namespace {

struct Table {
    std::mutex mu;
    std::vector<std::string> names{"m", "f0", "kappa", "sigma", "sigma0", "d", "q"};
};

Table& table() {
    static Table t;
    return t;
}

}  // namespace

Id id(const std::string& name) {
    auto& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    for (Id i = 0; i < t.names.size(); ++i)
        if (t.names[i] == name) return i;
    t.names.push_back(name);
    return static_cast<Id>(t.names.size() - 1);
}

std::optional<Id> lookup(const std::string& name) {
    auto& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    for (Id i = 0; i < t.names.size(); ++i)
        if (t.names[i] == name) return i;
    return std::nullopt;
}

const std::string& name(Id id) {
    auto& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    if (id >= t.names.size()) throw std::out_of_range("params::name: unknown id");
    return t.names[id];
}

std::size_t count() {
    auto& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    return t.names.size();
}

}  // namespace wavecl::params
