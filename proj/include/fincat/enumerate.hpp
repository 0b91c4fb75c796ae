#pragma once

#include "fincat/category.hpp"

#include <string>
#include <vector>

namespace fincat {

/// Byte-minimal serialization over all object/morphism relabelings; two
/// categories are isomorphic iff their canonical forms are byte-equal.
/// Exact search, capped at 8 morphisms.
struct CanonicalForm {
    std::string bytes;
    bool operator==(const CanonicalForm&) const = default;
    bool operator<(const CanonicalForm& o) const { return bytes < o.bytes; }
};

CanonicalForm canonical_form(const FinCategory& c);

/// All categories with 1..max_mor total morphisms, one per isomorphism
/// class, in canonical-form order, each emitted in canonical form.
/// Feasibility cap: max_mor <= 5.
std::vector<CatPtr> enumerate_categories(int max_mor);

} // namespace fincat
