#include "fincat/ends.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fincat {

std::vector<std::string> bifunctor_violations(const FinBifunctor& h) {
    std::vector<std::string> out;
    const FinCategory& P = *h.domain.category;
    if (static_cast<int>(h.value.size()) != P.object_count() ||
        static_cast<int>(h.action.size()) != P.morphism_count()) {
        out.push_back("value/action tables do not match the product category");
        return out;
    }
    for (int m = 0; m < P.morphism_count(); ++m) {
        const auto& t = h.action[m];
        if (static_cast<int>(t.size()) != h.value[P.src(m)]) {
            out.push_back("action of " + P.morphism_id(m) + " has wrong domain size");
            continue;
        }
        for (int e : t)
            if (e < 0 || e >= h.value[P.tgt(m)])
                out.push_back("action of " + P.morphism_id(m) + " maps outside its codomain");
    }
    if (!out.empty()) return out;
    for (int o = 0; o < P.object_count(); ++o) {
        const auto& t = h.action[P.identity(o)];
        for (size_t i = 0; i < t.size(); ++i)
            if (t[i] != static_cast<int>(i)) {
                out.push_back("identity action at " + P.object_id(o) + " is not the identity");
                break;
            }
    }
    for (int g = 0; g < P.morphism_count(); ++g)
        for (int f = 0; f < P.morphism_count(); ++f) {
            if (!P.composable(g, f)) continue;
            const auto& tg = h.action[g];
            const auto& tf = h.action[f];
            const auto& th = h.action[P.compose(g, f)];
            for (size_t i = 0; i < tf.size(); ++i)
                if (th[i] != tg[tf[i]]) {
                    out.push_back("action not functorial on (" + P.morphism_id(g) + ", " +
                                  P.morphism_id(f) + ")");
                    break;
                }
        }
    return out;
}

FinBifunctor hom_bifunctor(CatPtr c) {
    const FinCategory& C = *c;
    FinBifunctor h;
    h.base = c;
    h.domain = product(opposite(c), c);
    const FinCategory& P = *h.domain.category;

    // opposite() keeps ids and sorted order, so op indices equal C indices
    h.value.resize(P.object_count());
    for (int o = 0; o < P.object_count(); ++o) {
        auto [x, y] = h.domain.object_pair[o];
        h.value[o] = static_cast<int>(C.hom(x, y).size());
    }
    h.action.resize(P.morphism_count());
    for (int m = 0; m < P.morphism_count(); ++m) {
        auto [u, v] = h.domain.morphism_pair[m];
        auto [x, y] = h.domain.object_pair[P.src(m)];
        auto [x2, y2] = h.domain.object_pair[P.tgt(m)];
        auto dom = C.hom(x, y);
        auto cod = C.hom(x2, y2);
        std::vector<int>& t = h.action[m];
        t.resize(dom.size());
        for (size_t i = 0; i < dom.size(); ++i) {
            int w = C.compose(v, C.compose(dom[i], u));
            t[i] = static_cast<int>(
                std::find(cod.begin(), cod.end(), w) - cod.begin());
        }
    }
    return h;
}

FinBifunctor functor_pair_bifunctor(const Functor& F, const Functor& G) {
    CatPtr c = F.source;
    const FinCategory& D = *F.target;
    FinBifunctor h;
    h.base = c;
    h.domain = product(opposite(c), c);
    const FinCategory& P = *h.domain.category;

    // elements of H(x, y) are positions in Hom_D(F x, G y)
    h.value.resize(P.object_count());
    for (int o = 0; o < P.object_count(); ++o) {
        auto [x, y] = h.domain.object_pair[o];
        h.value[o] = static_cast<int>(D.hom(F.omap[x], G.omap[y]).size());
    }
    h.action.resize(P.morphism_count());
    for (int m = 0; m < P.morphism_count(); ++m) {
        auto [u, v] = h.domain.morphism_pair[m]; // u: x' -> x in C, v: y -> y'
        auto [x, y] = h.domain.object_pair[P.src(m)];
        auto [x2, y2] = h.domain.object_pair[P.tgt(m)];
        auto dom = D.hom(F.omap[x], G.omap[y]);
        auto cod = D.hom(F.omap[x2], G.omap[y2]);
        std::vector<int>& t = h.action[m];
        t.resize(dom.size());
        for (size_t i = 0; i < dom.size(); ++i) {
            int w = D.compose(G.mmap[v], D.compose(dom[i], F.mmap[u]));
            t[i] = static_cast<int>(std::find(cod.begin(), cod.end(), w) - cod.begin());
        }
    }
    return h;
}

EndResult end_naturality_subset(const FinBifunctor& h) {
    const FinCategory& C = *h.base;
    EndResult res;
    const int n = C.object_count();
    std::vector<int> family(n, -1);

    auto compatible_so_far = [&](int upto) {
        for (int m = 0; m < C.morphism_count(); ++m) {
            if (C.is_identity(m)) continue;
            int x = C.src(m), y = C.tgt(m);
            if (x > upto || y > upto) continue;
            const auto& left = h.action_of(C.identity(x), m);  // H(x, m): (x,x) -> (x,y)
            const auto& right = h.action_of(m, C.identity(y)); // H(m, y): (y,y) -> (x,y)
            if (left[family[x]] != right[family[y]]) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int o) -> void {
        if (o == n) {
            res.elements.push_back(family);
            return;
        }
        for (int x = 0; x < h.value_at(o, o); ++x) {
            family[o] = x;
            if (compatible_so_far(o)) self(self, o + 1);
            family[o] = -1;
        }
    };
    rec(rec, 0);
    return res;
}

TwistedLimitResult end_twisted_limit(const FinBifunctor& h) {
    TwistedLimitResult res;
    res.tw = twisted_arrow(h.base);
    const FinCategory& T = *res.tw.category;

    std::vector<int> comp(T.object_count(), -1);
    auto value_at_tw = [&](int w) { return h.value[res.tw.projection.omap[w]]; };

    auto compatible_so_far = [&](int upto) {
        for (int m = 0; m < T.morphism_count(); ++m) {
            if (T.is_identity(m)) continue;
            int a = T.src(m), b = T.tgt(m);
            if (a > upto || b > upto) continue;
            const auto& act = h.action[res.tw.projection.mmap[m]];
            if (act[comp[a]] != comp[b]) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int w) -> void {
        if (w == T.object_count()) {
            res.elements.push_back(comp);
            return;
        }
        for (int x = 0; x < value_at_tw(w); ++x) {
            comp[w] = x;
            if (compatible_so_far(w)) self(self, w + 1);
            comp[w] = -1;
        }
    };
    rec(rec, 0);
    return res;
}

CheckedEnd end_of_bifunctor(const FinBifunctor& h) {
    CheckedEnd res;
    res.end = end_naturality_subset(h);
    res.limit = end_twisted_limit(h);
    const FinCategory& C = *h.base;
    const FinCategory& T = *res.limit.tw.category;

    if (res.end.elements.size() != res.limit.elements.size()) return res;

    // canonical comparison: the component of an end family at the tw-object
    // for m: c -> c' is H(c, m)(x_c)
    res.end_to_limit.assign(res.end.elements.size(), -1);
    std::vector<bool> hit(res.limit.elements.size(), false);
    for (size_t e = 0; e < res.end.elements.size(); ++e) {
        std::vector<int> tup(T.object_count());
        for (int w = 0; w < T.object_count(); ++w) {
            int m = res.limit.tw.base_morphism[w];
            int cc = C.src(m);
            tup[w] = h.action_of(C.identity(cc), m)[res.end.elements[e][cc]];
        }
        auto it = std::find(res.limit.elements.begin(), res.limit.elements.end(), tup);
        if (it == res.limit.elements.end()) return res;
        size_t idx = static_cast<size_t>(it - res.limit.elements.begin());
        if (hit[idx]) return res;
        hit[idx] = true;
        res.end_to_limit[e] = static_cast<int>(idx);

        // compatibility with projections: the limit tuple restricted to
        // identity objects recovers the end family
        for (int c = 0; c < C.object_count(); ++c) {
            int w = -1;
            for (int tw_obj = 0; tw_obj < T.object_count(); ++tw_obj)
                if (res.limit.tw.base_morphism[tw_obj] == C.identity(c)) { w = tw_obj; break; }
            if (tup[w] != res.end.elements[e][c]) return res;
        }
    }
    res.algorithms_agree = true;
    return res;
}

BifunctorParseResult parse_bifunctor_text(CatPtr base, const std::string& text) {
    const FinCategory& C = *base;
    BifunctorParseResult res;
    res.bifunctor.base = base;
    res.bifunctor.domain = product(opposite(base), base);
    const FinCategory& P = *res.bifunctor.domain.category;

    auto err = [&](int lineno, const std::string& msg) {
        res.errors.push_back("line " + std::to_string(lineno) + ": " + msg);
    };

    std::vector<int> value(P.object_count(), -1);
    // lact[u][y], ract[v][x] for non-identity u, v
    std::map<std::pair<int, int>, std::vector<int>> lact, ract;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool seen_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks[0] == "bifunctor") {
            if (toks.size() != 2) { err(lineno, "expected: bifunctor <name>"); continue; }
            seen_header = true;
        } else if (toks[0] == "value") {
            if (toks.size() != 5 || toks[3] != "=") {
                err(lineno, "expected: value <x> <y> = <n>");
                continue;
            }
            auto x = C.object_index(toks[1]), y = C.object_index(toks[2]);
            if (!x || !y) { err(lineno, "unknown object"); continue; }
            value[res.bifunctor.domain.object_of(*x, *y)] = std::stoi(toks[4]);
        } else if (toks[0] == "lact" || toks[0] == "ract") {
            if (toks.size() < 4 || toks[3] != "=") {
                err(lineno, "expected: " + toks[0] + " <mor> <obj> = entries...");
                continue;
            }
            auto m = C.morphism_index(toks[1]);
            auto o = C.object_index(toks[2]);
            if (!m || !o) { err(lineno, "unknown morphism or object"); continue; }
            if (C.is_identity(*m)) { err(lineno, "identity actions are implicit"); continue; }
            std::vector<int> table;
            for (size_t i = 4; i < toks.size(); ++i) table.push_back(std::stoi(toks[i]));
            auto& slot = toks[0] == "lact" ? lact[{*m, *o}] : ract[{*m, *o}];
            slot = std::move(table);
        } else {
            err(lineno, "unknown keyword '" + toks[0] + "'");
        }
    }
    if (!seen_header) err(0, "missing bifunctor line");
    for (int o = 0; o < P.object_count(); ++o)
        if (value[o] < 0) {
            auto [x, y] = res.bifunctor.domain.object_pair[o];
            err(0, "missing value for (" + C.object_id(x) + ", " + C.object_id(y) + ")");
        }
    if (!res.errors.empty()) return res;

    res.bifunctor.value = value;
    res.bifunctor.action.resize(P.morphism_count());
    for (int pm = 0; pm < P.morphism_count(); ++pm) {
        auto [u, v] = res.bifunctor.domain.morphism_pair[pm];
        auto [x, y] = res.bifunctor.domain.object_pair[P.src(pm)];
        auto [x2, y2] = res.bifunctor.domain.object_pair[P.tgt(pm)];
        int dom = value[P.src(pm)];
        auto identity_table = [&](int n) {
            std::vector<int> t(n);
            for (int i = 0; i < n; ++i) t[i] = i;
            return t;
        };
        std::vector<int> left, right;
        if (C.is_identity(u)) {
            left = identity_table(dom);
        } else {
            auto it = lact.find({u, y});
            if (it == lact.end()) {
                err(0, "missing lact " + C.morphism_id(u) + " " + C.object_id(y));
                continue;
            }
            left = it->second; // H(x,y) -> H(x',y)
        }
        if (C.is_identity(v)) {
            right = identity_table(value[res.bifunctor.domain.object_of(x2, y)]);
        } else {
            auto it = ract.find({v, x2});
            if (it == ract.end()) {
                err(0, "missing ract " + C.morphism_id(v) + " " + C.object_id(x2));
                continue;
            }
            right = it->second; // H(x',y) -> H(x',y')
        }
        std::vector<int> t(dom);
        bool bad = false;
        for (int i = 0; i < dom; ++i) {
            if (i >= static_cast<int>(left.size()) || left[i] < 0 ||
                left[i] >= static_cast<int>(right.size())) { bad = true; break; }
            t[i] = right[left[i]];
        }
        if (bad) { err(0, "action tables have inconsistent sizes at " + P.morphism_id(pm)); continue; }
        res.bifunctor.action[pm] = std::move(t);
    }
    if (!res.errors.empty()) return res;
    for (auto& v : bifunctor_violations(res.bifunctor)) res.errors.push_back(v);
    return res;
}

std::string serialize_bifunctor(const FinBifunctor& h, const std::string& name) {
    const FinCategory& C = *h.base;
    std::ostringstream out;
    out << "bifunctor " << name << "\n";
    for (int x = 0; x < C.object_count(); ++x)
        for (int y = 0; y < C.object_count(); ++y)
            out << "value " << C.object_id(x) << " " << C.object_id(y) << " = "
                << h.value_at(x, y) << "\n";
    for (int u = 0; u < C.morphism_count(); ++u) {
        if (C.is_identity(u)) continue;
        for (int y = 0; y < C.object_count(); ++y) {
            out << "lact " << C.morphism_id(u) << " " << C.object_id(y) << " =";
            for (int e : h.action_of(u, C.identity(y))) out << " " << e;
            out << "\n";
        }
    }
    for (int v = 0; v < C.morphism_count(); ++v) {
        if (C.is_identity(v)) continue;
        for (int x = 0; x < C.object_count(); ++x) {
            out << "ract " << C.morphism_id(v) << " " << C.object_id(x) << " =";
            for (int e : h.action_of(C.identity(x), v)) out << " " << e;
            out << "\n";
        }
    }
    return out.str();
}

} // namespace fincat
