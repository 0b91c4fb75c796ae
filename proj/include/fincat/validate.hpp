#pragma once

#include "fincat/category.hpp"

#include <string>
#include <vector>

namespace fincat {

/// Raw category data as read from a .fincat file, before any law checking.
/// Identities are implicit; compose entries only cover non-identity pairs.
struct CategoryDescription {
    std::string name;
    std::vector<std::string> objects;
    std::vector<std::tuple<std::string, std::string, std::string>> morphisms; // id, src, tgt
    std::vector<std::tuple<std::string, std::string, std::string>> composites; // g, f, h
};

enum class ViolationKind {
    ParseError,
    DuplicateId,
    UnknownId,
    MissingComposite,
    IllTypedComposite,
    UnitLawViolation,
    AssociativityViolation,
};

struct Violation {
    ViolationKind kind;
    std::string detail;
};

std::string violation_kind_name(ViolationKind k);

struct ValidationResult {
    CatPtr category;              // set iff errors is empty
    std::vector<Violation> errors;
    bool ok() const { return errors.empty(); }
};

/// Checks every category law on a description and returns either the built
/// category or the complete list of violations.
ValidationResult validate_category(const CategoryDescription& raw);

/// Re-checks all invariants on an already-built category (unit and
/// associativity laws, typing of the full table). Used by property tests on
/// derived constructions.
std::vector<Violation> check_invariants(const FinCategory& cat);

/// Line-oriented .fincat format. '#' starts a comment; tokens are
/// whitespace-separated. parse collects syntax problems as ParseError
/// violations instead of throwing.
struct ParseResult {
    CategoryDescription description;
    std::vector<Violation> errors;
    bool ok() const { return errors.empty(); }
};

ParseResult parse_category_text(const std::string& text);

/// Emits objects, morphisms and composites in id order; identities and their
/// composites are implicit. validate(serialize(C)) reproduces C bit-exactly.
std::string serialize_category(const FinCategory& cat);

/// Convenience: parse + validate in one step.
ValidationResult load_category_text(const std::string& text);

} // namespace fincat
