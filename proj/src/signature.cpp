#include "choral/signature.hpp"

#include <algorithm>

namespace choral {

SignaturePtr Signature::make(std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end())
        throw SemanticError("duplicate atom name in signature");
    if (names.size() > 64)
        throw CapError("signatures are limited to 64 atoms, got " +
                       std::to_string(names.size()));
    return SignaturePtr(new Signature(std::move(names)));
}

std::optional<int> Signature::id(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<int>(it - names_.begin());
}

int Signature::require(std::string_view name) const {
    if (auto found = id(name)) return *found;
    throw SemanticError("unknown atom '" + std::string(name) + "'");
}

} // namespace choral
