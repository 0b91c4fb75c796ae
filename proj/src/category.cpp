#include "fincat/category.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fincat {

const Limits& default_limits() {
    static const Limits limits{};
    return limits;
}

int FinCategory::compose_path(const std::vector<int>& path) const {
    if (path.empty()) throw CategoryError("compose_path: empty path");
    int acc = path.front();
    for (size_t i = 1; i < path.size(); ++i) acc = compose(path[i], acc);
    return acc;
}

std::vector<int> FinCategory::hom(int x, int y) const {
    std::vector<int> out;
    for (int m = 0; m < morphism_count(); ++m)
        if (src(m) == x && tgt(m) == y) out.push_back(m);
    return out;
}

bool FinCategory::is_iso(int m, int* inverse) const {
    for (int g : hom(tgt(m), src(m))) {
        if (compose(g, m) == identity(src(m)) && compose(m, g) == identity(tgt(m))) {
            if (inverse) *inverse = g;
            return true;
        }
    }
    return false;
}

std::optional<int> FinCategory::object_index(const std::string& id) const {
    auto it = std::lower_bound(objects_.begin(), objects_.end(), id);
    if (it != objects_.end() && *it == id) return static_cast<int>(it - objects_.begin());
    return std::nullopt;
}

std::optional<int> FinCategory::morphism_index(const std::string& id) const {
    for (int m = 0; m < morphism_count(); ++m)
        if (morphisms_[m].id == id) return m;
    return std::nullopt;
}

CategoryBuilder& CategoryBuilder::add_object(const std::string& id) {
    objects_.push_back(id);
    return *this;
}

CategoryBuilder& CategoryBuilder::add_morphism(const std::string& id, const std::string& src,
                                               const std::string& tgt) {
    morphisms_.emplace_back(id, src, tgt);
    return *this;
}

CategoryBuilder& CategoryBuilder::set_compose(const std::string& g, const std::string& f,
                                              const std::string& h) {
    compose_entries_.emplace_back(g, f, h);
    return *this;
}

CatPtr CategoryBuilder::build() {
    auto cat = std::make_shared<FinCategory>();
    cat->name_ = name_;

    cat->objects_ = objects_;
    std::sort(cat->objects_.begin(), cat->objects_.end());
    if (std::adjacent_find(cat->objects_.begin(), cat->objects_.end()) != cat->objects_.end())
        throw CategoryError("duplicate object id in " + name_);

    std::map<std::string, int> oidx;
    for (int o = 0; o < cat->object_count(); ++o) oidx[cat->objects_[o]] = o;

    std::vector<MorphismData> mors;
    for (int o = 0; o < cat->object_count(); ++o)
        mors.push_back({"id_" + cat->objects_[o], o, o});
    for (const auto& [id, s, t] : morphisms_) {
        auto si = oidx.find(s), ti = oidx.find(t);
        if (si == oidx.end() || ti == oidx.end())
            throw CategoryError("morphism " + id + " references unknown object in " + name_);
        mors.push_back({id, si->second, ti->second});
    }
    std::sort(mors.begin(), mors.end(),
              [](const MorphismData& a, const MorphismData& b) { return a.id < b.id; });
    for (size_t i = 1; i < mors.size(); ++i)
        if (mors[i].id == mors[i - 1].id)
            throw CategoryError("duplicate morphism id " + mors[i].id + " in " + name_);
    cat->morphisms_ = mors;

    std::map<std::string, int> midx;
    for (int m = 0; m < cat->morphism_count(); ++m) midx[cat->morphisms_[m].id] = m;

    cat->identity_.assign(cat->object_count(), -1);
    for (int o = 0; o < cat->object_count(); ++o)
        cat->identity_[o] = midx.at("id_" + cat->objects_[o]);

    const int M = cat->morphism_count();
    cat->compose_.assign(static_cast<size_t>(M) * M, -1);
    auto cell = [&](int g, int f) -> int& {
        return cat->compose_[static_cast<size_t>(g) * M + f];
    };
    // unit composites
    for (int f = 0; f < M; ++f) {
        cell(cat->identity_[cat->tgt(f)], f) = f;
        cell(f, cat->identity_[cat->src(f)]) = f;
    }
    for (const auto& [g, f, h] : compose_entries_) {
        auto gi = midx.find(g), fi = midx.find(f), hi = midx.find(h);
        if (gi == midx.end() || fi == midx.end() || hi == midx.end())
            throw CategoryError("compose entry references unknown morphism in " + name_);
        if (!cat->composable(gi->second, fi->second))
            throw CategoryError("compose entry (" + g + ", " + f + ") not composable in " + name_);
        int& c = cell(gi->second, fi->second);
        if (c >= 0 && c != hi->second)
            throw CategoryError("conflicting compose entries for (" + g + ", " + f + ")");
        c = hi->second;
    }

    // totality, typing, associativity
    for (int g = 0; g < M; ++g)
        for (int f = 0; f < M; ++f) {
            if (!cat->composable(g, f)) continue;
            int h = cell(g, f);
            if (h < 0)
                throw CategoryError("missing composite (" + cat->morphism_id(g) + ", " +
                                    cat->morphism_id(f) + ") in " + name_);
            if (cat->src(h) != cat->src(f) || cat->tgt(h) != cat->tgt(g))
                throw CategoryError("ill-typed composite in " + name_);
        }
    for (int h = 0; h < M; ++h)
        for (int g = 0; g < M; ++g) {
            if (!cat->composable(h, g)) continue;
            for (int f = 0; f < M; ++f) {
                if (!cat->composable(g, f)) continue;
                if (cell(h, cell(g, f)) != cell(cell(h, g), f))
                    throw CategoryError("associativity violation in " + name_ + " at (" +
                                        cat->morphism_id(h) + ", " + cat->morphism_id(g) + ", " +
                                        cat->morphism_id(f) + ")");
            }
        }
    return cat;
}

std::string padded_id(const std::string& prefix, int index, int count, const std::string& suffix) {
    int width = 1;
    for (int c = count - 1; c >= 10; c /= 10) ++width;
    std::string digits = std::to_string(index);
    std::string out = prefix;
    out.append(static_cast<size_t>(width) - std::min<size_t>(width, digits.size()), '0');
    out += digits;
    if (!suffix.empty()) {
        out += '_';
        out += suffix;
    }
    return out;
}

} // namespace fincat
