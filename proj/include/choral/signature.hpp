#ifndef CHORAL_SIGNATURE_HPP
#define CHORAL_SIGNATURE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "choral/errors.hpp"

namespace choral {

class Signature;
using SignaturePtr = std::shared_ptr<const Signature>;

/// The interned atom vocabulary of a program. Atom ids are dense,
/// 0-based, and assigned in lexicographic order of the names, so id
/// order is the canonical output order everywhere.
class Signature {
public:
    /// Builds a signature from a list of names. Names are sorted and
    /// must be unique; at most 64 atoms are supported.
    static SignaturePtr make(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(int id) const { return names_.at(static_cast<std::size_t>(id)); }
    std::optional<int> id(std::string_view name) const;

    /// Id lookup that throws on unknown atoms.
    int require(std::string_view name) const;

    const std::vector<std::string>& names() const { return names_; }

    /// Mask with every atom set.
    std::uint64_t universe_mask() const {
        return size() == 64 ? ~0ull : (1ull << size()) - 1;
    }

private:
    explicit Signature(std::vector<std::string> names) : names_(std::move(names)) {}
    std::vector<std::string> names_;
};

} // namespace choral

#endif
