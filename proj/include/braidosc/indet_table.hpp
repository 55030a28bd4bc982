#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "braidosc/numeric.hpp"

namespace braidosc {

// Declares the indeterminates of one computation, in a fixed order that
// doubles as the canonical monomial order. Square-root aliases bind a
// composite symbol to an indeterminate: alias X -> u means X = u^2, so
// "sqrt(X)" parses as u and "X" parses as u^2.
class IndetTable {
public:
    IndetTable(std::vector<std::string> names,
               std::map<std::string, std::string> sqrt_aliases = {})
        : names_(std::move(names)), sqrt_aliases_(std::move(sqrt_aliases)) {
        std::set<std::string> seen;
        for (const auto& n : names_) {
            if (n.empty() || !seen.insert(n).second)
                throw DomainError("indeterminate names must be unique and nonempty");
        }
        for (const auto& [alias, target] : sqrt_aliases_) {
            if (index_of(alias) >= 0)
                throw DomainError("alias '" + alias + "' collides with an indeterminate");
            if (index_of(target) < 0)
                throw DomainError("alias '" + alias + "' targets undeclared '" + target + "'");
        }
    }

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::map<std::string, std::string>& sqrt_aliases() const { return sqrt_aliases_; }

    int index_of(const std::string& name) const {
        auto it = std::find(names_.begin(), names_.end(), name);
        return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
    }

    // Alias whose square root is the indeterminate at index i, if any.
    const std::string* alias_for_index(std::size_t i) const {
        for (const auto& [alias, target] : sqrt_aliases_)
            if (target == names_[i]) return &alias;
        return nullptr;
    }

    bool operator==(const IndetTable& o) const {
        return names_ == o.names_ && sqrt_aliases_ == o.sqrt_aliases_;
    }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::string> sqrt_aliases_;
};

using TablePtr = std::shared_ptr<const IndetTable>;

inline TablePtr make_table(std::vector<std::string> names,
                           std::map<std::string, std::string> sqrt_aliases = {}) {
    return std::make_shared<const IndetTable>(std::move(names), std::move(sqrt_aliases));
}

inline bool same_table(const TablePtr& a, const TablePtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace braidosc
