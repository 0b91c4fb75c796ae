#include "fincat/constructions.hpp"

#include <algorithm>
#include <map>

namespace fincat {

CatPtr opposite(CatPtr c) {
    const FinCategory& C = *c;
    CategoryBuilder b(C.name());
    for (int o = 0; o < C.object_count(); ++o) b.add_object(C.object_id(o));
    for (int m = 0; m < C.morphism_count(); ++m)
        if (!C.is_identity(m))
            b.add_morphism(C.morphism_id(m), C.object_id(C.tgt(m)), C.object_id(C.src(m)));
    for (int g = 0; g < C.morphism_count(); ++g)
        for (int f = 0; f < C.morphism_count(); ++f) {
            if (C.is_identity(g) || C.is_identity(f)) continue;
            // (g, f) composable in the opposite iff (f, g) composable in C
            if (C.composable(f, g))
                b.set_compose(C.morphism_id(g), C.morphism_id(f),
                              C.morphism_id(C.compose(f, g)));
        }
    return b.build();
}

int ProductResult::object_of(int lo, int ro) const {
    for (size_t i = 0; i < object_pair.size(); ++i)
        if (object_pair[i] == std::make_pair(lo, ro)) return static_cast<int>(i);
    return -1;
}

int ProductResult::morphism_of(int lm, int rm) const {
    for (size_t i = 0; i < morphism_pair.size(); ++i)
        if (morphism_pair[i] == std::make_pair(lm, rm)) return static_cast<int>(i);
    return -1;
}

ProductResult product(CatPtr c, CatPtr d) {
    const FinCategory& C = *c;
    const FinCategory& D = *d;
    ProductResult res;
    res.left = c;
    res.right = d;

    CategoryBuilder b(C.name() + "_x_" + D.name());
    const int NO = C.object_count() * D.object_count();
    std::vector<std::string> onames;
    std::vector<std::pair<int, int>> opairs;
    for (int x = 0; x < C.object_count(); ++x)
        for (int y = 0; y < D.object_count(); ++y) {
            std::string id = padded_id("p", static_cast<int>(opairs.size()), NO,
                                       C.object_id(x) + "_" + D.object_id(y));
            b.add_object(id);
            onames.push_back(id);
            opairs.push_back({x, y});
        }
    auto opos = [&](int x, int y) { return x * D.object_count() + y; };

    struct Cell { int cm, dm; std::string id; };
    std::vector<Cell> cells;
    const int NM = C.morphism_count() * D.morphism_count();
    for (int f = 0; f < C.morphism_count(); ++f)
        for (int g = 0; g < D.morphism_count(); ++g) {
            if (C.is_identity(f) && D.is_identity(g)) continue;
            std::string id = padded_id("q", static_cast<int>(cells.size()), NM,
                                       C.morphism_id(f) + "_" + D.morphism_id(g));
            b.add_morphism(id, onames[opos(C.src(f), D.src(g))],
                           onames[opos(C.tgt(f), D.tgt(g))]);
            cells.push_back({f, g, id});
        }
    auto cell_name = [&](int cm, int dm) -> std::string {
        if (C.is_identity(cm) && D.is_identity(dm))
            return "id_" + onames[opos(C.src(cm), D.src(dm))];
        for (const auto& cc : cells)
            if (cc.cm == cm && cc.dm == dm) return cc.id;
        throw CategoryError("product: missing cell");
    };
    for (const auto& g : cells)
        for (const auto& f : cells) {
            if (!C.composable(g.cm, f.cm) || !D.composable(g.dm, f.dm)) continue;
            b.set_compose(g.id, f.id, cell_name(C.compose(g.cm, f.cm), D.compose(g.dm, f.dm)));
        }
    res.category = b.build();

    const FinCategory& P = *res.category;
    res.object_pair.resize(P.object_count());
    for (size_t i = 0; i < onames.size(); ++i)
        res.object_pair[P.object_index(onames[i]).value()] = opairs[i];
    res.morphism_pair.resize(P.morphism_count());
    for (const auto& cc : cells)
        res.morphism_pair[P.morphism_index(cc.id).value()] = {cc.cm, cc.dm};
    for (size_t i = 0; i < onames.size(); ++i) {
        int po = P.object_index(onames[i]).value();
        res.morphism_pair[P.identity(po)] = {C.identity(opairs[i].first),
                                             D.identity(opairs[i].second)};
    }
    return res;
}

int StagedCategory::staged_object(int base_obj, int stage) const {
    return obj_index_[static_cast<size_t>(stage) * base->object_count() + base_obj];
}

int StagedCategory::staged_morphism(int base_mor, int stage_from, int stage_to) const {
    size_t idx = (static_cast<size_t>(stage_from) * stage_count + stage_to) *
                     base->morphism_count() +
                 base_mor;
    return mor_index_[idx];
}

StagedCategory build_I_alpha(CatPtr base, int stages, const Limits& limits) {
    const FinCategory& I = *base;
    if (stages < 1) throw CategoryError("build_I_alpha: need at least one stage");
    StagedCategory res;
    res.base = base;
    res.stage_count = stages;

    long obj_total = static_cast<long>(stages) * I.object_count();
    long cross = static_cast<long>(stages) * (stages - 1) / 2 * I.morphism_count();
    if (obj_total + cross > limits.max_morphisms)
        throw SizeLimitError("staged category exceeds morphism cap");

    CategoryBuilder b(I.name() + "_stage" + std::to_string(stages));
    std::vector<std::string> onames(static_cast<size_t>(stages) * I.object_count());
    auto opos = [&](int x, int beta) { return static_cast<size_t>(beta) * I.object_count() + x; };
    int ocount = stages * I.object_count();
    for (int beta = 0; beta < stages; ++beta)
        for (int x = 0; x < I.object_count(); ++x) {
            std::string id = padded_id("o", static_cast<int>(opos(x, beta)), ocount,
                                       I.object_id(x) + "_s" + std::to_string(beta));
            b.add_object(id);
            onames[opos(x, beta)] = id;
        }

    struct Cell { int m, from, to; std::string id; };
    std::vector<Cell> cells;
    for (int from = 0; from < stages; ++from)
        for (int to = from + 1; to < stages; ++to)
            for (int m = 0; m < I.morphism_count(); ++m) cells.push_back({m, from, to, ""});
    for (size_t k = 0; k < cells.size(); ++k) {
        auto& cc = cells[k];
        cc.id = padded_id("a", static_cast<int>(k), static_cast<int>(cells.size()),
                          I.morphism_id(cc.m) + "_s" + std::to_string(cc.from) + "_s" +
                              std::to_string(cc.to));
        b.add_morphism(cc.id, onames[opos(I.src(cc.m), cc.from)],
                       onames[opos(I.tgt(cc.m), cc.to)]);
    }
    auto cell_id = [&](int m, int from, int to) -> std::string {
        for (const auto& cc : cells)
            if (cc.m == m && cc.from == from && cc.to == to) return cc.id;
        throw CategoryError("staged: missing cell");
    };
    for (const auto& g : cells)
        for (const auto& f : cells) {
            if (f.to != g.from || I.tgt(f.m) != I.src(g.m)) continue;
            b.set_compose(g.id, f.id, cell_id(I.compose(g.m, f.m), f.from, g.to));
        }
    res.category = b.build();

    const FinCategory& S = *res.category;
    res.object_of.resize(S.object_count());
    res.obj_index_.assign(static_cast<size_t>(stages) * I.object_count(), -1);
    for (int beta = 0; beta < stages; ++beta)
        for (int x = 0; x < I.object_count(); ++x) {
            int so = S.object_index(onames[opos(x, beta)]).value();
            res.object_of[so] = {x, beta};
            res.obj_index_[opos(x, beta)] = so;
        }
    res.mor_index_.assign(static_cast<size_t>(stages) * stages * I.morphism_count(), -1);
    for (const auto& cc : cells) {
        size_t idx = (static_cast<size_t>(cc.from) * stages + cc.to) * I.morphism_count() + cc.m;
        res.mor_index_[idx] = S.morphism_index(cc.id).value();
    }

    res.projection = Functor{res.category, base, {}, {}};
    res.projection.omap.resize(S.object_count());
    for (int so = 0; so < S.object_count(); ++so)
        res.projection.omap[so] = res.object_of[so].first;
    res.projection.mmap.resize(S.morphism_count());
    for (int sm = 0; sm < S.morphism_count(); ++sm) {
        if (S.is_identity(sm)) {
            res.projection.mmap[sm] = I.identity(res.object_of[S.src(sm)].first);
        } else {
            // find the generating cell
            res.projection.mmap[sm] = -1;
        }
    }
    for (const auto& cc : cells)
        res.projection.mmap[S.morphism_index(cc.id).value()] = cc.m;
    if (auto viol = functor_violation(res.projection))
        throw CategoryError("staged: projection invalid: " + *viol);
    return res;
}

TwistedArrowResult twisted_arrow(CatPtr c) {
    const FinCategory& C = *c;
    TwistedArrowResult res;
    res.op_times_c = product(opposite(c), c);

    CategoryBuilder b(C.name() + "_tw");
    const int N = C.morphism_count();
    std::vector<std::string> onames(N);
    for (int m = 0; m < N; ++m) {
        onames[m] = padded_id("w", m, N, C.morphism_id(m));
        b.add_object(onames[m]);
    }
    // a morphism f -> g is (u, v) with u: src g -> src f, v: tgt f -> tgt g
    // and g = v.f.u
    struct Cell { int f, g, u, v; std::string id; };
    std::vector<Cell> cells;
    for (int f = 0; f < N; ++f)
        for (int g = 0; g < N; ++g)
            for (int u : C.hom(C.src(g), C.src(f)))
                for (int v : C.hom(C.tgt(f), C.tgt(g))) {
                    if (C.compose(v, C.compose(f, u)) != g) continue;
                    if (f == g && C.is_identity(u) && C.is_identity(v)) continue;
                    cells.push_back({f, g, u, v, ""});
                }
    for (size_t k = 0; k < cells.size(); ++k) {
        cells[k].id = padded_id("t", static_cast<int>(k), static_cast<int>(cells.size()));
        b.add_morphism(cells[k].id, onames[cells[k].f], onames[cells[k].g]);
    }
    auto cell_id = [&](int f, int g, int u, int v) -> std::string {
        if (f == g && C.is_identity(u) && C.is_identity(v)) return "id_" + onames[f];
        for (const auto& cc : cells)
            if (cc.f == f && cc.g == g && cc.u == u && cc.v == v) return cc.id;
        throw CategoryError("twisted arrow: missing cell");
    };
    for (const auto& s : cells)      // s: f -> g, t: g -> h; composite (u.u', v'.v)
        for (const auto& t : cells) {
            if (t.f != s.g) continue;
            b.set_compose(t.id, s.id, cell_id(s.f, t.g, C.compose(s.u, t.u), C.compose(t.v, s.v)));
        }
    res.category = b.build();

    const FinCategory& T = *res.category;
    res.base_morphism.resize(T.object_count());
    for (int m = 0; m < N; ++m) res.base_morphism[T.object_index(onames[m]).value()] = m;
    res.factor.resize(T.morphism_count());
    for (const auto& cc : cells)
        res.factor[T.morphism_index(cc.id).value()] = {cc.u, cc.v};
    for (int m = 0; m < N; ++m) {
        int to = T.object_index(onames[m]).value();
        res.factor[T.identity(to)] = {C.identity(C.src(m)), C.identity(C.tgt(m))};
    }

    res.projection = Functor{res.category, res.op_times_c.category, {}, {}};
    res.projection.omap.resize(T.object_count());
    for (int to = 0; to < T.object_count(); ++to) {
        int m = res.base_morphism[to];
        res.projection.omap[to] = res.op_times_c.object_of(C.src(m), C.tgt(m));
    }
    res.projection.mmap.resize(T.morphism_count());
    for (int tm = 0; tm < T.morphism_count(); ++tm) {
        auto [u, v] = res.factor[tm];
        res.projection.mmap[tm] = res.op_times_c.morphism_of(u, v);
    }
    if (auto viol = functor_violation(res.projection))
        throw CategoryError("twisted arrow: projection invalid: " + *viol);
    return res;
}

int FinSetCategory::object_of_size(int n) const {
    for (size_t i = 0; i < size_of.size(); ++i)
        if (size_of[i] == n) return static_cast<int>(i);
    return -1;
}

int FinSetCategory::morphism_of_table(int src_obj, int tgt_obj,
                                      const std::vector<int>& table) const {
    const FinCategory& C = *category;
    for (int m = 0; m < C.morphism_count(); ++m)
        if (C.src(m) == src_obj && C.tgt(m) == tgt_obj && table_of[m] == table) return m;
    return -1;
}

FinSetCategory finset_category(int max_size) {
    FinSetCategory res;
    CategoryBuilder b("finset" + std::to_string(max_size));
    for (int n = 0; n <= max_size; ++n) b.add_object("n" + std::to_string(n));

    struct Cell { int s, t; std::vector<int> table; std::string id; };
    std::vector<Cell> cells;
    for (int s = 0; s <= max_size; ++s)
        for (int t = 0; t <= max_size; ++t) {
            if (s > 0 && t == 0) continue;
            long count = 1;
            for (int i = 0; i < s; ++i) count *= t;
            for (long k = 0; k < count; ++k) {
                std::vector<int> table(s);
                long rem = k;
                for (int i = 0; i < s; ++i) { table[i] = static_cast<int>(rem % t); rem /= t; }
                bool is_id = s == t;
                for (int i = 0; i < s && is_id; ++i) is_id = table[i] == i;
                if (is_id) continue;
                cells.push_back({s, t, std::move(table), ""});
            }
        }
    for (size_t k = 0; k < cells.size(); ++k) {
        auto& cc = cells[k];
        cc.id = padded_id("f", static_cast<int>(k), static_cast<int>(cells.size()));
        b.add_morphism(cc.id, "n" + std::to_string(cc.s), "n" + std::to_string(cc.t));
    }
    auto cell_id = [&](int s, int t, const std::vector<int>& table) -> std::string {
        bool is_id = s == t;
        for (int i = 0; i < s && is_id; ++i) is_id = table[i] == i;
        if (is_id) return "id_n" + std::to_string(s);
        for (const auto& cc : cells)
            if (cc.s == s && cc.t == t && cc.table == table) return cc.id;
        throw CategoryError("finset: missing cell");
    };
    for (const auto& g : cells)
        for (const auto& f : cells) {
            if (f.t != g.s) continue;
            std::vector<int> comp(f.table.size());
            for (size_t i = 0; i < f.table.size(); ++i) comp[i] = g.table[f.table[i]];
            b.set_compose(g.id, f.id, cell_id(f.s, g.t, comp));
        }
    res.category = b.build();

    const FinCategory& F = *res.category;
    res.size_of.resize(F.object_count());
    for (int n = 0; n <= max_size; ++n)
        res.size_of[F.object_index("n" + std::to_string(n)).value()] = n;
    res.table_of.resize(F.morphism_count());
    for (const auto& cc : cells) res.table_of[F.morphism_index(cc.id).value()] = cc.table;
    for (int n = 0; n <= max_size; ++n) {
        int o = F.object_index("n" + std::to_string(n)).value();
        std::vector<int> idt(n);
        for (int i = 0; i < n; ++i) idt[i] = i;
        res.table_of[F.identity(o)] = idt;
    }
    return res;
}

} // namespace fincat
