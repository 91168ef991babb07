#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace dk {

class VarSet;
using VarSetPtr = std::shared_ptr<const VarSet>;

// An ordered, immutable set of variable names. Polynomials hold a shared
// pointer to their varset; the order is total and fixed, and it determines
// exponent-vector layout, printing order and matrix column order.
class VarSet {
public:
    static VarSetPtr create(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index(const std::string& name) const;

    bool operator==(const VarSet& o) const { return names_ == o.names_; }

private:
    explicit VarSet(std::vector<std::string> names);

    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

// True when the two pointers denote the same variable universe.
bool same_varset(const VarSetPtr& a, const VarSetPtr& b);

}  // namespace dk
