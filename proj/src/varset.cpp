#include "derivkernel/varset.hpp"

#include "derivkernel/errors.hpp"

namespace dk {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw DomainError("empty variable name");
        if (!index_.emplace(names_[i], i).second)
            throw DomainError("duplicate variable name: " + names_[i]);
    }
}

VarSetPtr VarSet::create(std::vector<std::string> names) {
    return VarSetPtr(new VarSet(std::move(names)));
}

std::optional<std::size_t> VarSet::index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool same_varset(const VarSetPtr& a, const VarSetPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

}  // namespace dk
