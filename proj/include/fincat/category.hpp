#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace fincat {

class FinCategory;
using CatPtr = std::shared_ptr<const FinCategory>;

/// Thrown when a derived construction would exceed the configured caps.
struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown on internal construction of an invalid category (a bug, not user input).
struct CategoryError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Caps for derived constructions (functor categories, staged categories, ...).
struct Limits {
    long max_functors = 10000;
    long max_morphisms = 100000;
};

const Limits& default_limits();

struct MorphismData {
    std::string id;
    int src = -1;
    int tgt = -1;
};

/// A finite category with a fully explicit composition table.
///
/// Objects and morphisms are stored sorted by id; operations work on indices
/// into those lists. Identities are ordinary morphisms named `id_<object>`.
/// Instances are immutable once built and safe to share across threads.
class FinCategory {
public:
    const std::string& name() const { return name_; }
    int object_count() const { return static_cast<int>(objects_.size()); }
    int morphism_count() const { return static_cast<int>(morphisms_.size()); }

    const std::string& object_id(int o) const { return objects_[o]; }
    const std::string& morphism_id(int m) const { return morphisms_[m].id; }
    int src(int m) const { return morphisms_[m].src; }
    int tgt(int m) const { return morphisms_[m].tgt; }
    int identity(int o) const { return identity_[o]; }
    bool is_identity(int m) const { return src(m) == tgt(m) && identity_[src(m)] == m; }

    bool composable(int g, int f) const { return tgt(f) == src(g); }

    /// g after f; throws if the pair is not composable.
    int compose(int g, int f) const {
        int h = compose_[static_cast<size_t>(g) * morphisms_.size() + f];
        if (h < 0) throw CategoryError("compose: pair not composable in " + name_);
        return h;
    }

    /// Composite of a path given in application order: path[0] acts first.
    int compose_path(const std::vector<int>& path) const;

    /// Morphisms x -> y in index order.
    std::vector<int> hom(int x, int y) const;

    bool is_iso(int m, int* inverse = nullptr) const;
    bool is_idempotent(int m) const { return src(m) == tgt(m) && compose(m, m) == m; }

    std::optional<int> object_index(const std::string& id) const;
    std::optional<int> morphism_index(const std::string& id) const;

private:
    friend class CategoryBuilder;
    std::string name_;
    std::vector<std::string> objects_;
    std::vector<MorphismData> morphisms_;
    std::vector<int> identity_;
    std::vector<int> compose_; // g * |M| + f, -1 when not composable
};

/// Incremental construction of a FinCategory. Identities (`id_<obj>`) and
/// their composites are filled in automatically; `build()` sorts everything
/// by id, checks every invariant and throws CategoryError on violation.
class CategoryBuilder {
public:
    explicit CategoryBuilder(std::string name) : name_(std::move(name)) {}

    CategoryBuilder& add_object(const std::string& id);
    CategoryBuilder& add_morphism(const std::string& id, const std::string& src,
                                  const std::string& tgt);
    CategoryBuilder& set_compose(const std::string& g, const std::string& f,
                                 const std::string& h);

    CatPtr build();

private:
    std::string name_;
    std::vector<std::string> objects_;
    std::vector<std::tuple<std::string, std::string, std::string>> morphisms_;
    std::vector<std::tuple<std::string, std::string, std::string>> compose_entries_;
};

/// Zero-padded id helper for generated categories: prefix + ordinal (+ suffix).
/// Fixed padding keeps lexicographic id order equal to construction order.
std::string padded_id(const std::string& prefix, int index, int count,
                      const std::string& suffix = "");

} // namespace fincat
