#include "cuboid/algebra/variable.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

#include "cuboid/error.hpp"

namespace cuboid::algebra {

namespace {

struct Registry {
    std::mutex lock;
    std::deque<std::string> names;
    std::unordered_map<std::string, VarId> ids;

    Registry() {
        // Fixed prefix of the universe order.
        for (const char* n : {"s1", "s2", "s3", "s4", "s", "mu", "f", "r", "r1", "m", "n",
                              "u1", "u2", "u3", "u4", "M", "D"})
            add(n);
    }

    VarId add(const std::string& name) {
        if (names.size() >= 0xFFFF) throw Error(ErrorKind::MalformedInput, "too many variables");
        auto id = static_cast<VarId>(names.size());
        names.push_back(name);
        ids.emplace(name, id);
        return id;
    }
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

VarId variable(std::string_view name) {
    auto& r = registry();
    std::lock_guard guard(r.lock);
    std::string key(name);
    if (auto it = r.ids.find(key); it != r.ids.end()) return it->second;
    return r.add(key);
}

std::string variable_name(VarId id) {
    auto& r = registry();
    std::lock_guard guard(r.lock);
    if (id >= r.names.size()) return "?" + std::to_string(id);
    return r.names[id];
}

namespace vars {
VarId s1() { static const VarId v = variable("s1"); return v; }
VarId s2() { static const VarId v = variable("s2"); return v; }
VarId s3() { static const VarId v = variable("s3"); return v; }
VarId s4() { static const VarId v = variable("s4"); return v; }
VarId s() { static const VarId v = variable("s"); return v; }
VarId mu() { static const VarId v = variable("mu"); return v; }
}  // namespace vars

}  // namespace cuboid::algebra
