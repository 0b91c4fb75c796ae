#include "fincat/functor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fincat {

std::optional<std::string> functor_violation(const Functor& f) {
    const FinCategory& C = *f.source;
    const FinCategory& D = *f.target;
    if (static_cast<int>(f.omap.size()) != C.object_count() ||
        static_cast<int>(f.mmap.size()) != C.morphism_count())
        return "map sizes do not match the source category";
    for (int m = 0; m < C.morphism_count(); ++m) {
        int fm = f.mmap[m];
        if (D.src(fm) != f.omap[C.src(m)] || D.tgt(fm) != f.omap[C.tgt(m)])
            return "morphism " + C.morphism_id(m) + " maps outside the expected hom-set";
    }
    for (int o = 0; o < C.object_count(); ++o)
        if (f.mmap[C.identity(o)] != D.identity(f.omap[o]))
            return "identity of " + C.object_id(o) + " not preserved";
    for (int g = 0; g < C.morphism_count(); ++g)
        for (int m = 0; m < C.morphism_count(); ++m) {
            if (!C.composable(g, m)) continue;
            if (f.mmap[C.compose(g, m)] != D.compose(f.mmap[g], f.mmap[m]))
                return "composition (" + C.morphism_id(g) + ", " + C.morphism_id(m) +
                       ") not preserved";
        }
    return std::nullopt;
}

Functor identity_functor(CatPtr c) {
    Functor f{c, c, {}, {}};
    f.omap.resize(c->object_count());
    f.mmap.resize(c->morphism_count());
    std::iota(f.omap.begin(), f.omap.end(), 0);
    std::iota(f.mmap.begin(), f.mmap.end(), 0);
    return f;
}

Functor compose_functors(const Functor& g, const Functor& f) {
    Functor out{f.source, g.target, {}, {}};
    out.omap.reserve(f.omap.size());
    for (int o : f.omap) out.omap.push_back(g.omap[o]);
    out.mmap.reserve(f.mmap.size());
    for (int m : f.mmap) out.mmap.push_back(g.mmap[m]);
    return out;
}

std::optional<std::string> naturality_violation(const NatTransformation& t) {
    const FinCategory& C = *t.source_functor.source;
    const FinCategory& D = *t.source_functor.target;
    if (static_cast<int>(t.components.size()) != C.object_count())
        return "component count does not match";
    for (int o = 0; o < C.object_count(); ++o) {
        int c = t.components[o];
        if (D.src(c) != t.source_functor.omap[o] || D.tgt(c) != t.target_functor.omap[o])
            return "component at " + C.object_id(o) + " has wrong endpoints";
    }
    for (int m = 0; m < C.morphism_count(); ++m) {
        int x = C.src(m), y = C.tgt(m);
        if (D.compose(t.target_functor.mmap[m], t.components[x]) !=
            D.compose(t.components[y], t.source_functor.mmap[m]))
            return "naturality fails at " + C.morphism_id(m);
    }
    return std::nullopt;
}

void enumerate_functors_visit(CatPtr source, CatPtr target,
                              const std::function<bool(const Functor&)>& visit) {
    const FinCategory& C = *source;
    const FinCategory& D = *target;

    std::vector<int> nonids;
    for (int m = 0; m < C.morphism_count(); ++m)
        if (!C.is_identity(m)) nonids.push_back(m);

    std::vector<int> omap(C.object_count(), -1);
    std::vector<int> mmap(C.morphism_count(), -1);
    bool stop = false;

    // Checks every composable pair whose three participants are assigned.
    auto consistent = [&]() {
        for (int g = 0; g < C.morphism_count(); ++g) {
            if (mmap[g] < 0) continue;
            for (int f = 0; f < C.morphism_count(); ++f) {
                if (mmap[f] < 0 || !C.composable(g, f)) continue;
                int h = C.compose(g, f);
                if (mmap[h] < 0) continue;
                if (D.compose(mmap[g], mmap[f]) != mmap[h]) return false;
            }
        }
        return true;
    };

    auto assign_morphisms = [&](auto&& self, size_t k) -> void {
        if (stop) return;
        if (k == nonids.size()) {
            Functor f{source, target, omap, mmap};
            if (!visit(f)) stop = true;
            return;
        }
        int m = nonids[k];
        for (int cand : D.hom(omap[C.src(m)], omap[C.tgt(m)])) {
            if (stop) return;
            mmap[m] = cand;
            if (consistent()) self(self, k + 1);
            mmap[m] = -1;
        }
    };

    auto assign_objects = [&](auto&& self, int o) -> void {
        if (stop) return;
        if (o == C.object_count()) {
            for (int i = 0; i < C.object_count(); ++i)
                mmap[C.identity(i)] = D.identity(omap[i]);
            // prune object maps under which some hom-set has no image choices
            bool dead = false;
            for (int m : nonids)
                if (D.hom(omap[C.src(m)], omap[C.tgt(m)]).empty()) { dead = true; break; }
            if (!dead) assign_morphisms(assign_morphisms, 0);
            for (int i = 0; i < C.object_count(); ++i) mmap[C.identity(i)] = -1;
            return;
        }
        for (int d = 0; d < D.object_count(); ++d) {
            if (stop) return;
            omap[o] = d;
            self(self, o + 1);
            omap[o] = -1;
        }
    };
    assign_objects(assign_objects, 0);
}

std::vector<Functor> enumerate_functors(CatPtr source, CatPtr target, const Limits& limits) {
    std::vector<Functor> out;
    enumerate_functors_visit(source, target, [&](const Functor& f) {
        out.push_back(f);
        if (static_cast<long>(out.size()) > limits.max_functors)
            throw SizeLimitError("functor enumeration exceeds cap");
        return true;
    });
    return out;
}

std::vector<NatTransformation> natural_transformations(const Functor& F, const Functor& G) {
    const FinCategory& C = *F.source;
    const FinCategory& D = *F.target;
    std::vector<NatTransformation> out;
    std::vector<int> comp(C.object_count(), -1);

    auto natural_so_far = [&](int upto) {
        for (int m = 0; m < C.morphism_count(); ++m) {
            int x = C.src(m), y = C.tgt(m);
            if (x > upto || y > upto) continue;
            if (D.compose(G.mmap[m], comp[x]) != D.compose(comp[y], F.mmap[m])) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int o) -> void {
        if (o == C.object_count()) {
            out.push_back({F, G, comp});
            return;
        }
        for (int cand : D.hom(F.omap[o], G.omap[o])) {
            comp[o] = cand;
            if (natural_so_far(o)) self(self, o + 1);
            comp[o] = -1;
        }
    };
    rec(rec, 0);
    return out;
}

int FunctorCategoryResult::object_for(const Functor& f) const {
    for (size_t i = 0; i < objects.size(); ++i)
        if (objects[i].same_maps(f)) return static_cast<int>(i);
    return -1;
}

int FunctorCategoryResult::morphism_for(const NatTransformation& t) const {
    for (size_t i = 0; i < morphisms.size(); ++i)
        if (morphisms[i].source_functor.same_maps(t.source_functor) &&
            morphisms[i].target_functor.same_maps(t.target_functor) &&
            morphisms[i].components == t.components)
            return static_cast<int>(i);
    return -1;
}

FunctorCategoryResult functor_category(CatPtr index, CatPtr target, const Limits& limits) {
    FunctorCategoryResult res;
    auto functors = enumerate_functors(index, target, limits);
    const int N = static_cast<int>(functors.size());

    CategoryBuilder b(index->name() + "_to_" + target->name());
    std::vector<std::string> onames(N);
    for (int i = 0; i < N; ++i) {
        onames[i] = padded_id("F", i, N);
        b.add_object(onames[i]);
    }

    struct Cell {
        int from, to;
        NatTransformation transf;
        std::string id;
    };
    std::vector<Cell> cells;
    long count = 0;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            auto ts = natural_transformations(functors[i], functors[j]);
            for (auto& t : ts) {
                if (i == j) {
                    bool is_id = true;
                    for (int o = 0; o < index->object_count(); ++o)
                        if (t.components[o] != target->identity(functors[i].omap[o]))
                            is_id = false;
                    if (is_id) continue; // identities are implicit in the builder
                }
                cells.push_back({i, j, std::move(t), ""});
                if (++count + N > limits.max_morphisms)
                    throw SizeLimitError("functor category exceeds morphism cap");
            }
        }
    for (size_t k = 0; k < cells.size(); ++k) {
        cells[k].id = padded_id("t", static_cast<int>(k), static_cast<int>(cells.size()));
        b.add_morphism(cells[k].id, onames[cells[k].from], onames[cells[k].to]);
    }
    // componentwise composition
    auto vertical = [&](const NatTransformation& later, const NatTransformation& first) {
        std::vector<int> comp(index->object_count());
        for (int o = 0; o < index->object_count(); ++o)
            comp[o] = target->compose(later.components[o], first.components[o]);
        return comp;
    };
    auto find_cell = [&](int from, int to, const std::vector<int>& comp) -> std::string {
        bool is_id = from == to;
        if (is_id) {
            for (int o = 0; o < index->object_count(); ++o)
                if (comp[o] != target->identity(functors[from].omap[o])) { is_id = false; break; }
        }
        if (is_id) return "id_" + onames[from];
        for (const auto& c : cells)
            if (c.from == from && c.to == to && c.transf.components == comp) return c.id;
        throw CategoryError("functor category: composite transformation not found");
    };
    for (const auto& g : cells)
        for (const auto& f : cells) {
            if (f.to != g.from) continue;
            b.set_compose(g.id, f.id, find_cell(f.from, g.to, vertical(g.transf, f.transf)));
        }

    res.category = b.build();

    // Builder sorted everything by id; our generated ids sort in construction
    // order, so align tables with the built category.
    res.objects.resize(N);
    for (int i = 0; i < N; ++i)
        res.objects[res.category->object_index(onames[i]).value()] = functors[i];
    res.morphisms.resize(res.category->morphism_count());
    for (const auto& c : cells)
        res.morphisms[res.category->morphism_index(c.id).value()] = c.transf;
    for (int i = 0; i < N; ++i) {
        int oi = res.category->object_index(onames[i]).value();
        NatTransformation idt{functors[i], functors[i], {}};
        idt.components.resize(index->object_count());
        for (int o = 0; o < index->object_count(); ++o)
            idt.components[o] = target->identity(functors[i].omap[o]);
        res.morphisms[res.category->identity(oi)] = std::move(idt);
    }
    return res;
}

EquivalenceWitness is_equivalence(const Functor& f) {
    const FinCategory& C = *f.source;
    const FinCategory& D = *f.target;
    EquivalenceWitness w;

    // fully faithful: every hom map is a bijection
    for (int x = 0; x < C.object_count(); ++x)
        for (int y = 0; y < C.object_count(); ++y) {
            auto dom = C.hom(x, y);
            auto cod = D.hom(f.omap[x], f.omap[y]);
            std::vector<int> image;
            for (int m : dom) image.push_back(f.mmap[m]);
            std::sort(image.begin(), image.end());
            if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
                w.failure = "not faithful on Hom(" + C.object_id(x) + ", " + C.object_id(y) + ")";
                return w;
            }
            if (image.size() != cod.size()) {
                w.failure = "not full on Hom(" + C.object_id(x) + ", " + C.object_id(y) + ")";
                return w;
            }
        }

    // essentially surjective: every D-object isomorphic to some image
    std::vector<int> preimage(D.object_count(), -1);
    std::vector<int> iso_to_image(D.object_count(), -1); // D-morphism F(pre) -> d
    for (int d = 0; d < D.object_count(); ++d) {
        for (int x = 0; x < C.object_count() && preimage[d] < 0; ++x)
            for (int m : D.hom(f.omap[x], d)) {
                if (D.is_iso(m)) {
                    preimage[d] = x;
                    iso_to_image[d] = m;
                    break;
                }
            }
        if (preimage[d] < 0) {
            w.failure = "object " + D.object_id(d) + " not in the essential image";
            return w;
        }
    }

    // quasi-inverse: G(d) = preimage, G(g) = unique lift of theta_d'^-1 . g . theta_d
    Functor g{f.target, f.source, {}, {}};
    g.omap = preimage;
    g.mmap.resize(D.morphism_count());
    for (int m = 0; m < D.morphism_count(); ++m) {
        int d = D.src(m), d2 = D.tgt(m);
        int inv = -1;
        D.is_iso(iso_to_image[d2], &inv);
        int conj = D.compose(inv, D.compose(m, iso_to_image[d]));
        int lift = -1;
        for (int c : C.hom(preimage[d], preimage[d2]))
            if (f.mmap[c] == conj) { lift = c; break; }
        if (lift < 0) throw CategoryError("is_equivalence: fullness lift missing");
        g.mmap[m] = lift;
    }
    if (auto viol = functor_violation(g))
        throw CategoryError("is_equivalence: quasi-inverse invalid: " + *viol);
    w.holds = true;
    w.quasi_inverse = std::move(g);
    return w;
}

SkeletonResult skeleton(CatPtr c) {
    const FinCategory& C = *c;
    SkeletonResult res;
    res.representative.assign(C.object_count(), -1);
    std::vector<int> iso_to_rep(C.object_count(), -1); // morphism x -> rep(x)
    for (int x = 0; x < C.object_count(); ++x) {
        if (res.representative[x] >= 0) continue;
        res.representative[x] = x;
        iso_to_rep[x] = C.identity(x);
        for (int y = x + 1; y < C.object_count(); ++y) {
            if (res.representative[y] >= 0) continue;
            for (int m : C.hom(y, x))
                if (C.is_iso(m)) {
                    res.representative[y] = x;
                    iso_to_rep[y] = m;
                    break;
                }
        }
    }

    std::vector<int> reps;
    for (int x = 0; x < C.object_count(); ++x)
        if (res.representative[x] == x) reps.push_back(x);

    CategoryBuilder b(C.name() + "_skel");
    for (int r : reps) b.add_object(C.object_id(r));
    std::vector<bool> keep(C.morphism_count(), false);
    for (int m = 0; m < C.morphism_count(); ++m) {
        bool in = res.representative[C.src(m)] == C.src(m) &&
                  res.representative[C.tgt(m)] == C.tgt(m);
        keep[m] = in;
        if (in && !C.is_identity(m))
            b.add_morphism(C.morphism_id(m), C.object_id(C.src(m)), C.object_id(C.tgt(m)));
    }
    for (int g = 0; g < C.morphism_count(); ++g)
        for (int f = 0; f < C.morphism_count(); ++f)
            if (keep[g] && keep[f] && !C.is_identity(g) && !C.is_identity(f) &&
                C.composable(g, f))
                b.set_compose(C.morphism_id(g), C.morphism_id(f),
                              C.morphism_id(C.compose(g, f)));
    res.skeleton = b.build();

    const FinCategory& S = *res.skeleton;
    auto sobj = [&](int c_obj) { return S.object_index(C.object_id(c_obj)).value(); };
    auto smor = [&](int c_mor) { return S.morphism_index(C.morphism_id(c_mor)).value(); };

    res.inclusion = Functor{res.skeleton, c, {}, {}};
    res.inclusion.omap.resize(S.object_count());
    res.inclusion.mmap.resize(S.morphism_count());
    for (int r : reps) res.inclusion.omap[sobj(r)] = r;
    for (int m = 0; m < C.morphism_count(); ++m)
        if (keep[m]) res.inclusion.mmap[smor(m)] = m;

    res.to_skeleton = Functor{c, res.skeleton, {}, {}};
    res.to_skeleton.omap.resize(C.object_count());
    res.to_skeleton.mmap.resize(C.morphism_count());
    for (int x = 0; x < C.object_count(); ++x)
        res.to_skeleton.omap[x] = sobj(res.representative[x]);
    for (int m = 0; m < C.morphism_count(); ++m) {
        int x = C.src(m), y = C.tgt(m);
        int inv = -1;
        C.is_iso(iso_to_rep[x], &inv); // rep(x) -> x
        int conj = C.compose(iso_to_rep[y], C.compose(m, inv));
        res.to_skeleton.mmap[m] = smor(conj);
    }
    if (auto viol = functor_violation(res.to_skeleton))
        throw CategoryError("skeleton: quotient functor invalid: " + *viol);
    return res;
}

CauchyResult cauchy_completion(CatPtr c) {
    const FinCategory& C = *c;
    std::vector<int> idem;
    for (int m = 0; m < C.morphism_count(); ++m)
        if (C.is_idempotent(m)) idem.push_back(m);
    const int N = static_cast<int>(idem.size());

    CategoryBuilder b(C.name() + "_cauchy");
    std::vector<std::string> onames(N);
    for (int i = 0; i < N; ++i) {
        onames[i] = padded_id("e", i, N, C.morphism_id(idem[i]));
        b.add_object(onames[i]);
    }
    // morphisms e -> e' are C-morphisms f with e'.f = f = f.e;
    // the identity of e is e itself.
    struct Cell { int from, to, mor; std::string id; };
    std::vector<Cell> cells;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            int e = idem[i], e2 = idem[j];
            for (int f : C.hom(C.src(e), C.src(e2))) {
                if (C.compose(e2, f) != f || C.compose(f, e) != f) continue;
                if (i == j && f == e) continue; // the identity of this object
                cells.push_back({i, j, f, ""});
            }
        }
    for (size_t k = 0; k < cells.size(); ++k) {
        cells[k].id = padded_id("c", static_cast<int>(k), static_cast<int>(cells.size()));
        b.add_morphism(cells[k].id, onames[cells[k].from], onames[cells[k].to]);
    }
    auto cell_name = [&](int from, int to, int mor) -> std::string {
        if (from == to && mor == idem[from]) return "id_" + onames[from];
        for (const auto& cc : cells)
            if (cc.from == from && cc.to == to && cc.mor == mor) return cc.id;
        throw CategoryError("cauchy: composite cell not found");
    };
    for (const auto& g : cells)
        for (const auto& f : cells) {
            if (f.to != g.from) continue;
            b.set_compose(g.id, f.id, cell_name(f.from, g.to, C.compose(g.mor, f.mor)));
        }

    CauchyResult res;
    res.completion = b.build();
    const FinCategory& K = *res.completion;

    res.splitting_of.assign(K.object_count(), -1);
    for (int i = 0; i < N; ++i)
        res.splitting_of[K.object_index(onames[i]).value()] = idem[i];

    res.embedding = Functor{c, res.completion, {}, {}};
    res.embedding.omap.resize(C.object_count());
    res.embedding.mmap.resize(C.morphism_count());
    std::vector<int> obj_of_identity(C.object_count());
    for (int i = 0; i < N; ++i)
        if (C.is_identity(idem[i]))
            obj_of_identity[C.src(idem[i])] = K.object_index(onames[i]).value();
    for (int x = 0; x < C.object_count(); ++x) res.embedding.omap[x] = obj_of_identity[x];
    std::map<std::tuple<int, int, int>, int> cell_index;
    for (const auto& cc : cells)
        cell_index[{cc.from, cc.to, cc.mor}] = K.morphism_index(cc.id).value();
    auto idem_pos = [&](int e) {
        return static_cast<int>(std::lower_bound(idem.begin(), idem.end(), e) - idem.begin());
    };
    for (int m = 0; m < C.morphism_count(); ++m) {
        int from = idem_pos(C.identity(C.src(m))), to = idem_pos(C.identity(C.tgt(m)));
        if (C.is_identity(m)) {
            res.embedding.mmap[m] = K.identity(res.embedding.omap[C.src(m)]);
        } else {
            res.embedding.mmap[m] = cell_index.at({from, to, m});
        }
    }
    if (auto viol = functor_violation(res.embedding))
        throw CategoryError("cauchy: embedding invalid: " + *viol);
    return res;
}

PosetReflectionResult posetal_reflection(CatPtr c) {
    const FinCategory& C = *c;
    const int n = C.object_count();
    // reachability is just hom-nonemptiness: composition makes it transitive
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) le[x][y] = x == y || !C.hom(x, y).empty();

    std::vector<int> rep(n, -1);
    for (int x = 0; x < n; ++x) {
        if (rep[x] >= 0) continue;
        rep[x] = x;
        for (int y = x + 1; y < n; ++y)
            if (rep[y] < 0 && le[x][y] && le[y][x]) rep[y] = x;
    }
    std::vector<int> reps;
    for (int x = 0; x < n; ++x)
        if (rep[x] == x) reps.push_back(x);

    CategoryBuilder b(C.name() + "_poset");
    for (int r : reps) b.add_object(C.object_id(r));
    struct Arrow { int from, to; std::string id; };
    std::vector<Arrow> arrows;
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = 0; j < reps.size(); ++j)
            if (i != j && le[reps[i]][reps[j]]) arrows.push_back({reps[i], reps[j], ""});
    for (size_t k = 0; k < arrows.size(); ++k) {
        arrows[k].id = padded_id("le", static_cast<int>(k), static_cast<int>(arrows.size()));
        b.add_morphism(arrows[k].id, C.object_id(arrows[k].from), C.object_id(arrows[k].to));
    }
    auto arrow_name = [&](int from, int to) -> std::string {
        if (from == to) return "id_" + C.object_id(from);
        for (const auto& a : arrows)
            if (a.from == from && a.to == to) return a.id;
        throw CategoryError("posetal reflection: missing arrow");
    };
    for (const auto& g : arrows)
        for (const auto& f : arrows)
            if (f.to == g.from) b.set_compose(g.id, f.id, arrow_name(f.from, g.to));

    PosetReflectionResult res;
    res.poset = b.build();
    const FinCategory& P = *res.poset;

    res.quotient = Functor{c, res.poset, {}, {}};
    res.quotient.omap.resize(n);
    for (int x = 0; x < n; ++x)
        res.quotient.omap[x] = P.object_index(C.object_id(rep[x])).value();
    res.quotient.mmap.resize(C.morphism_count());
    for (int m = 0; m < C.morphism_count(); ++m) {
        int fx = rep[C.src(m)], fy = rep[C.tgt(m)];
        res.quotient.mmap[m] = P.morphism_index(arrow_name(fx, fy)).value();
    }
    if (auto viol = functor_violation(res.quotient))
        throw CategoryError("posetal reflection: quotient invalid: " + *viol);
    return res;
}

MorphismWitness is_identity_reflecting(const Functor& f) {
    const FinCategory& C = *f.source;
    const FinCategory& D = *f.target;
    for (int m = 0; m < C.morphism_count(); ++m)
        if (D.is_identity(f.mmap[m]) && !C.is_identity(m)) return {false, m};
    return {true, -1};
}

MorphismWitness is_conservative(const Functor& f) {
    const FinCategory& C = *f.source;
    const FinCategory& D = *f.target;
    for (int m = 0; m < C.morphism_count(); ++m)
        if (D.is_iso(f.mmap[m]) && !C.is_iso(m)) return {false, m};
    return {true, -1};
}

} // namespace fincat
