#include "fincat/enumerate.hpp"

#include "fincat/validate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace fincat {

namespace {

// serialization of C relabeled by object positions and a fixed ordering of
// the non-identity morphisms (objects x<i>, morphisms e<j>)
std::string relabelled_bytes(const FinCategory& C, const std::vector<int>& obj_at_pos,
                             const std::vector<int>& mor_order) {
    const int k = static_cast<int>(obj_at_pos.size());
    std::vector<int> pos_of_obj(k);
    for (int p = 0; p < k; ++p) pos_of_obj[obj_at_pos[p]] = p;
    std::vector<int> name_of_mor(C.morphism_count(), -1);
    for (size_t j = 0; j < mor_order.size(); ++j) name_of_mor[mor_order[j]] = static_cast<int>(j);

    auto mor_name = [&](int m) -> std::string {
        if (C.is_identity(m)) return "id_x" + std::to_string(pos_of_obj[C.src(m)]);
        return "e" + std::to_string(name_of_mor[m]);
    };

    std::ostringstream out;
    out << "category canonical\n";
    for (int p = 0; p < k; ++p) out << "object x" << p << "\n";
    for (size_t j = 0; j < mor_order.size(); ++j) {
        int m = mor_order[j];
        out << "mor e" << j << " : x" << pos_of_obj[C.src(m)] << " -> x"
            << pos_of_obj[C.tgt(m)] << "\n";
    }
    for (size_t a = 0; a < mor_order.size(); ++a)
        for (size_t b = 0; b < mor_order.size(); ++b) {
            int g = mor_order[a], f = mor_order[b];
            if (!C.composable(g, f)) continue;
            out << "comp e" << a << " . e" << b << " = " << mor_name(C.compose(g, f)) << "\n";
        }
    return out.str();
}

} // namespace

CanonicalForm canonical_form(const FinCategory& C) {
    if (C.morphism_count() > 8)
        throw SizeLimitError("canonical_form: exact search capped at 8 morphisms");
    const int k = C.object_count();
    std::vector<int> obj_at_pos(k);
    std::iota(obj_at_pos.begin(), obj_at_pos.end(), 0);

    std::vector<int> nonids;
    for (int m = 0; m < C.morphism_count(); ++m)
        if (!C.is_identity(m)) nonids.push_back(m);

    std::string best;
    std::sort(obj_at_pos.begin(), obj_at_pos.end());
    do {
        std::vector<int> pos_of_obj(k);
        for (int p = 0; p < k; ++p) pos_of_obj[obj_at_pos[p]] = p;
        // group non-identities into cells ordered by (src pos, tgt pos)
        std::map<std::pair<int, int>, std::vector<int>> cells;
        for (int m : nonids) cells[{pos_of_obj[C.src(m)], pos_of_obj[C.tgt(m)]}].push_back(m);
        std::vector<std::vector<int>> cell_list;
        for (auto& [key, ms] : cells) {
            std::sort(ms.begin(), ms.end());
            cell_list.push_back(ms);
        }
        // all per-cell orderings
        auto rec = [&](auto&& self, size_t ci, std::vector<int>& order) -> void {
            if (ci == cell_list.size()) {
                std::string bytes = relabelled_bytes(C, obj_at_pos, order);
                if (best.empty() || bytes < best) best = std::move(bytes);
                return;
            }
            auto cell = cell_list[ci];
            std::sort(cell.begin(), cell.end());
            do {
                size_t before = order.size();
                order.insert(order.end(), cell.begin(), cell.end());
                self(self, ci + 1, order);
                order.resize(before);
            } while (std::next_permutation(cell.begin(), cell.end()));
        };
        std::vector<int> order;
        rec(rec, 0, order);
    } while (std::next_permutation(obj_at_pos.begin(), obj_at_pos.end()));
    if (best.empty()) best = relabelled_bytes(C, {}, {}); // the empty category
    return CanonicalForm{std::move(best)};
}

namespace {

// placements of `count` non-identity morphisms over (src, tgt) slots as a
// non-decreasing sequence of slot indices (complete up to relabeling)
void placements(int count, int slots, std::vector<int>& cur,
                const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(cur.size()) == count) {
        emit(cur);
        return;
    }
    int lo = cur.empty() ? 0 : cur.back();
    for (int s = lo; s < slots; ++s) {
        cur.push_back(s);
        placements(count, slots, cur, emit);
        cur.pop_back();
    }
}

struct TableSearch {
    int nobj = 0;
    std::vector<std::pair<int, int>> endpoints; // per non-identity morphism
    // morphism encoding: 0..nobj-1 identities, then non-identities
    int total = 0;
    std::vector<std::vector<int>> candidates; // per composable cell
    std::vector<std::pair<int, int>> cell_pairs;
    std::vector<int> cell_of; // (g * total + f) -> cell index or -1
    std::vector<int> assignment;

    int src(int m) const { return m < nobj ? m : endpoints[m - nobj].first; }
    int tgt(int m) const { return m < nobj ? m : endpoints[m - nobj].second; }
    bool is_id(int m) const { return m < nobj; }

    // composite lookup: -1 when the needed cell is unassigned
    int compose(int g, int f) const {
        if (is_id(g)) return f;
        if (is_id(f)) return g;
        return assignment[cell_of[g * total + f]];
    }

    bool associativity_ok_so_far() const {
        for (int h = nobj; h < total; ++h)
            for (int g = nobj; g < total; ++g) {
                if (tgt(g) != src(h)) continue;
                int hg = compose(h, g);
                for (int f = nobj; f < total; ++f) {
                    if (tgt(f) != src(g)) continue;
                    int gf = compose(g, f);
                    if (hg < 0 && gf < 0) continue;
                    int left = hg < 0 ? -1 : compose(hg, f);
                    int right = gf < 0 ? -1 : compose(h, gf);
                    if (left >= 0 && right >= 0 && left != right) return false;
                }
            }
        return true;
    }
};

CatPtr build_from_search(const TableSearch& ts, const std::string& name) {
    CategoryBuilder b(name);
    for (int o = 0; o < ts.nobj; ++o) b.add_object(padded_id("x", o, ts.nobj));
    auto mor_name = [&](int m) {
        if (ts.is_id(m)) return "id_" + padded_id("x", m, ts.nobj);
        return padded_id("e", m - ts.nobj, ts.total - ts.nobj);
    };
    for (int m = ts.nobj; m < ts.total; ++m)
        b.add_morphism(mor_name(m), padded_id("x", ts.src(m), ts.nobj),
                       padded_id("x", ts.tgt(m), ts.nobj));
    for (size_t c = 0; c < ts.cell_pairs.size(); ++c) {
        auto [g, f] = ts.cell_pairs[c];
        b.set_compose(mor_name(g), mor_name(f), mor_name(ts.assignment[c]));
    }
    return b.build();
}

} // namespace

std::vector<CatPtr> enumerate_categories(int max_mor) {
    if (max_mor > 5)
        throw SizeLimitError("enumerate_categories: feasibility cap is 5 morphisms");
    std::map<CanonicalForm, int> seen; // canonical form -> discovery marker
    std::vector<CanonicalForm> forms;

    for (int total = 1; total <= max_mor; ++total)
        for (int nobj = 1; nobj <= total; ++nobj) {
            int nonids = total - nobj;
            std::vector<int> cur;
            placements(nonids, nobj * nobj, cur, [&](const std::vector<int>& slots) {
                TableSearch ts;
                ts.nobj = nobj;
                ts.total = total;
                for (int s : slots) ts.endpoints.push_back({s / nobj, s % nobj});
                // composable non-identity cells
                ts.cell_of.assign(total * total, -1);
                for (int g = nobj; g < total; ++g)
                    for (int f = nobj; f < total; ++f) {
                        if (ts.tgt(f) != ts.src(g)) continue;
                        ts.cell_of[g * total + f] = static_cast<int>(ts.cell_pairs.size());
                        ts.cell_pairs.push_back({g, f});
                        std::vector<int> cands;
                        for (int h = 0; h < total; ++h)
                            if (ts.src(h) == ts.src(f) && ts.tgt(h) == ts.tgt(g))
                                cands.push_back(h);
                        ts.candidates.push_back(std::move(cands));
                    }
                ts.assignment.assign(ts.cell_pairs.size(), -1);

                auto rec = [&](auto&& self, size_t cell) -> void {
                    if (cell == ts.cell_pairs.size()) {
                        CatPtr cat = build_from_search(ts, "candidate");
                        auto cf = canonical_form(*cat);
                        if (!seen.count(cf)) {
                            seen[cf] = 1;
                            forms.push_back(std::move(cf));
                        }
                        return;
                    }
                    for (int h : ts.candidates[cell]) {
                        ts.assignment[cell] = h;
                        if (ts.associativity_ok_so_far()) self(self, cell + 1);
                        ts.assignment[cell] = -1;
                    }
                };
                rec(rec, 0);
            });
        }

    // canonical order: morphism count, then object count, then bytes
    std::sort(forms.begin(), forms.end(), [](const CanonicalForm& a, const CanonicalForm& b) {
        auto count = [](const std::string& s, const std::string& kw) {
            size_t n = 0, at = 0;
            while ((at = s.find(kw, at)) != std::string::npos) { ++n; at += kw.size(); }
            return n;
        };
        size_t ma = count(a.bytes, "\nmor ") + count(a.bytes, "\nobject ");
        size_t mb = count(b.bytes, "\nmor ") + count(b.bytes, "\nobject ");
        if (ma != mb) return ma < mb;
        size_t oa = count(a.bytes, "\nobject "), ob = count(b.bytes, "\nobject ");
        if (oa != ob) return oa < ob;
        return a.bytes < b.bytes;
    });

    std::vector<CatPtr> out;
    for (size_t i = 0; i < forms.size(); ++i) {
        auto parsed = load_category_text(forms[i].bytes);
        if (!parsed.ok()) throw CategoryError("enumerate_categories: canonical form invalid");
        // rename deterministically
        CategoryBuilder b(padded_id("cat", static_cast<int>(i), static_cast<int>(forms.size())));
        const FinCategory& C = *parsed.category;
        for (int o = 0; o < C.object_count(); ++o) b.add_object(C.object_id(o));
        for (int m = 0; m < C.morphism_count(); ++m)
            if (!C.is_identity(m))
                b.add_morphism(C.morphism_id(m), C.object_id(C.src(m)), C.object_id(C.tgt(m)));
        for (int g = 0; g < C.morphism_count(); ++g)
            for (int f = 0; f < C.morphism_count(); ++f)
                if (!C.is_identity(g) && !C.is_identity(f) && C.composable(g, f))
                    b.set_compose(C.morphism_id(g), C.morphism_id(f),
                                  C.morphism_id(C.compose(g, f)));
        out.push_back(b.build());
    }
    return out;
}

} // namespace fincat
