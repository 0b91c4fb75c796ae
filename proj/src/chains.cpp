#include "fincat/chains.hpp"

#include "fincat/wellfounded.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fincat {

namespace {

template <class Entry>
void canonicalize_entries(std::vector<Entry>& prefix, std::vector<Entry>& cycle) {
    int q = static_cast<int>(cycle.size());
    for (int d = 1; d <= q; ++d) {
        if (q % d) continue;
        bool periodic = true;
        for (int i = 0; i < q && periodic; ++i) periodic = cycle[(i + d) % q] == cycle[i];
        if (periodic) {
            cycle.resize(d);
            q = d;
            break;
        }
    }
    while (!prefix.empty() && prefix.back() == cycle[q - 1]) {
        prefix.pop_back();
        std::rotate(cycle.begin(), cycle.begin() + (q - 1), cycle.end());
    }
}

} // namespace

int PeriodicChain::object_at(int k) const {
    int p = static_cast<int>(prefix.size());
    if (k < p) return prefix[k].object;
    return cycle[(k - p) % cycle.size()].object;
}

int PeriodicChain::transition_at(int k) const {
    int p = static_cast<int>(prefix.size());
    if (k < p) return prefix[k].morphism;
    return cycle[(k - p) % cycle.size()].morphism;
}

PeriodicChain make_chain(CatPtr c, std::vector<ChainEntry> prefix,
                         std::vector<ChainEntry> cycle) {
    if (cycle.empty()) throw CategoryError("chain: cycle may not be empty");
    const FinCategory& C = *c;
    auto check = [&](const ChainEntry& e, int next_object) {
        if (e.object < 0 || e.object >= C.object_count() || e.morphism < 0 ||
            e.morphism >= C.morphism_count())
            throw CategoryError("chain: entry out of range");
        if (C.src(e.morphism) != e.object || C.tgt(e.morphism) != next_object)
            throw CategoryError("chain: connecting morphism has wrong endpoints");
    };
    for (size_t i = 0; i < prefix.size(); ++i)
        check(prefix[i], i + 1 < prefix.size() ? prefix[i + 1].object : cycle[0].object);
    for (size_t i = 0; i < cycle.size(); ++i)
        check(cycle[i], cycle[(i + 1) % cycle.size()].object);
    canonicalize_entries(prefix, cycle);
    return PeriodicChain{c, std::move(prefix), std::move(cycle)};
}

PeriodicChain insert_identity_step(const PeriodicChain& x, int k) {
    const FinCategory& C = *x.category;
    // materialize enough of the chain to place the step, then re-close
    int p = static_cast<int>(x.prefix.size());
    int q = static_cast<int>(x.cycle.size());
    int depth = std::max(k + 1, p) ;
    // unroll to a presentation whose prefix covers position k, keeping the cycle
    std::vector<ChainEntry> prefix;
    for (int i = 0; i < depth; ++i) prefix.push_back({x.object_at(i), x.transition_at(i)});
    std::vector<ChainEntry> cycle;
    int start = depth;
    for (int i = 0; i < q; ++i)
        cycle.push_back({x.object_at(start + i), x.transition_at(start + i)});
    int obj = x.object_at(k);
    prefix.insert(prefix.begin() + k, ChainEntry{obj, C.identity(obj)});
    return make_chain(x.category, std::move(prefix), std::move(cycle));
}

int FinSetChain::size_at(int k) const {
    int p = static_cast<int>(prefix.size());
    if (k < p) return prefix[k].size;
    return cycle[(k - p) % cycle.size()].size;
}

const std::vector<int>& FinSetChain::map_at(int k) const {
    int p = static_cast<int>(prefix.size());
    if (k < p) return prefix[k].map;
    return cycle[(k - p) % cycle.size()].map;
}

namespace {

int entry_size_at(const std::vector<SetChainEntry>& prefix,
                  const std::vector<SetChainEntry>& cycle, size_t i) {
    if (i < prefix.size()) return prefix[i].size;
    return cycle[(i - prefix.size()) % cycle.size()].size;
}

void check_forward_chain(const std::vector<SetChainEntry>& prefix,
                         const std::vector<SetChainEntry>& cycle) {
    if (cycle.empty()) throw CategoryError("set chain: cycle may not be empty");
    for (size_t i = 0; i < prefix.size() + cycle.size(); ++i) {
        const SetChainEntry& e = i < prefix.size() ? prefix[i] : cycle[i - prefix.size()];
        int next = entry_size_at(prefix, cycle, i + 1);
        if (static_cast<int>(e.map.size()) != e.size)
            throw CategoryError("set chain: map with wrong domain");
        for (int v : e.map)
            if (v < 0 || v >= next) throw CategoryError("set chain: map value out of range");
    }
}

void check_inverse_chain(const std::vector<SetChainEntry>& prefix,
                         const std::vector<SetChainEntry>& cycle) {
    if (cycle.empty()) throw CategoryError("inverse chain: cycle may not be empty");
    for (size_t i = 0; i < prefix.size() + cycle.size(); ++i) {
        const SetChainEntry& e = i < prefix.size() ? prefix[i] : cycle[i - prefix.size()];
        int next = entry_size_at(prefix, cycle, i + 1);
        if (static_cast<int>(e.map.size()) != next)
            throw CategoryError("inverse chain: map with wrong domain");
        for (int v : e.map)
            if (v < 0 || v >= e.size) throw CategoryError("inverse chain: map value out of range");
    }
}

} // namespace

FinSetChain make_set_chain(std::vector<SetChainEntry> prefix, std::vector<SetChainEntry> cycle) {
    check_forward_chain(prefix, cycle);
    canonicalize_entries(prefix, cycle);
    return FinSetChain{std::move(prefix), std::move(cycle)};
}

int InverseFinSetChain::size_at(int k) const {
    int p = static_cast<int>(prefix.size());
    if (k < p) return prefix[k].size;
    return cycle[(k - p) % cycle.size()].size;
}

const std::vector<int>& InverseFinSetChain::map_from_next(int k) const {
    int p = static_cast<int>(prefix.size());
    if (k < p) return prefix[k].map;
    return cycle[(k - p) % cycle.size()].map;
}

InverseFinSetChain make_inverse_set_chain(std::vector<SetChainEntry> prefix,
                                          std::vector<SetChainEntry> cycle) {
    check_inverse_chain(prefix, cycle);
    canonicalize_entries(prefix, cycle);
    return InverseFinSetChain{std::move(prefix), std::move(cycle)};
}

namespace {

// eventual image of a self-map, reached within |domain| iterations
std::vector<int> eventual_image(const std::vector<int>& t) {
    const int n = static_cast<int>(t.size());
    std::vector<int> cur(n);
    for (int i = 0; i < n; ++i) cur[i] = i;
    for (int it = 0; it < n; ++it)
        for (int i = 0; i < n; ++i) cur[i] = t[cur[i]];
    std::vector<int> img(cur);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

// index permutation of `eventual` induced by t, inverted
std::vector<int> inverse_on_eventual(const std::vector<int>& t, const std::vector<int>& eventual) {
    std::vector<int> inv(eventual.size(), -1);
    for (size_t i = 0; i < eventual.size(); ++i) {
        int im = t[eventual[i]];
        auto it = std::lower_bound(eventual.begin(), eventual.end(), im);
        if (it == eventual.end() || *it != im)
            throw CategoryError("chain: period map does not preserve its eventual image");
        size_t j = static_cast<size_t>(it - eventual.begin());
        if (inv[j] != -1)
            throw CategoryError("chain: period map not injective on its eventual image");
        inv[j] = static_cast<int>(i);
    }
    return inv;
}

} // namespace

ChainColimit colim_of_chain(const FinSetChain& s) {
    ChainColimit res;
    res.chain = s;
    const int p = static_cast<int>(s.prefix.size());
    const int q = static_cast<int>(s.cycle.size());
    const int c0 = s.size_at(p);

    std::vector<int> t(c0);
    for (int x = 0; x < c0; ++x) {
        int cur = x;
        for (int lvl = p; lvl < p + q; ++lvl) cur = s.map_at(lvl)[cur];
        t[x] = cur;
    }
    res.eventual = eventual_image(t);
    res.period_inverse = inverse_on_eventual(t, res.eventual);
    res.settle_iterations = c0;
    return res;
}

int ChainColimit::cocone(int level, int element) const {
    const int p = static_cast<int>(chain.prefix.size());
    const int q = static_cast<int>(chain.cycle.size());
    int periods_to_clear = level <= p ? 0 : (level - p + q - 1) / q;
    int m = settle_iterations + periods_to_clear;
    int cur = element;
    for (int lvl = level; lvl < p + m * q; ++lvl) cur = chain.map_at(lvl)[cur];
    auto it = std::lower_bound(eventual.begin(), eventual.end(), cur);
    if (it == eventual.end() || *it != cur)
        throw CategoryError("colimit cocone: value escaped the eventual image");
    int idx = static_cast<int>(it - eventual.begin());
    for (int i = 0; i < m; ++i) idx = period_inverse[idx];
    return idx;
}

ChainLimit lim_of_inverse_chain(const InverseFinSetChain& s) {
    ChainLimit res;
    res.chain = s;
    const int p = static_cast<int>(s.prefix.size());
    const int q = static_cast<int>(s.cycle.size());
    const int c0 = s.size_at(p);

    std::vector<int> t(c0);
    for (int x = 0; x < c0; ++x) {
        int cur = x; // an element of the set at level p + q
        for (int lvl = p + q - 1; lvl >= p; --lvl) cur = s.map_from_next(lvl)[cur];
        t[x] = cur;
    }
    res.eventual = eventual_image(t);
    res.period_inverse = inverse_on_eventual(t, res.eventual);
    return res;
}

int ChainLimit::projection(int level, int thread) const {
    const int p = static_cast<int>(chain.prefix.size());
    const int q = static_cast<int>(chain.cycle.size());
    int idx = thread;
    int at = p;
    if (level > p) {
        int m = (level - p + q - 1) / q;
        for (int i = 0; i < m; ++i) idx = period_inverse[idx];
        at = p + m * q;
    }
    int cur = eventual[idx];
    for (int lvl = at - 1; lvl >= level; --lvl) cur = chain.map_from_next(lvl)[cur];
    return cur;
}

std::vector<int> IndHom::homset_at(int i, int j) const {
    return X.category->hom(X.object_at(i), Y.object_at(j));
}

const ChainColimit& IndHom::colim_at(int i) const {
    int px = ref_level_;
    if (i < px) return colims[i];
    return colims[px + (i - px) % cx_];
}

std::pair<int, int> IndHom::representative(int element, int m) const {
    int z = limit.projection(m, element);
    const ChainColimit& Q = colim_at(m);
    int hom_pos = Q.eventual[z];
    return {jref_, homset_at(m, jref_)[hom_pos]};
}

int IndHom::from_component(int m, int j, int morphism) const {
    if (m != ref_level_)
        throw CategoryError("IndHom::from_component must be called at the reference level");
    auto hs = homset_at(m, j);
    auto it = std::find(hs.begin(), hs.end(), morphism);
    if (it == hs.end()) throw CategoryError("from_component: morphism not in hom-set");
    int q = colim_at(m).cocone(j, static_cast<int>(it - hs.begin()));
    auto lt = std::lower_bound(limit.eventual.begin(), limit.eventual.end(), q);
    if (lt == limit.eventual.end() || *lt != q)
        throw CategoryError("from_component: component is not part of any thread");
    return static_cast<int>(lt - limit.eventual.begin());
}

IndHom ind_hom(const PeriodicChain& x, const PeriodicChain& y) {
    IndHom ih;
    ih.X = x;
    ih.Y = y;
    const FinCategory& C = *x.category;
    const int px = static_cast<int>(x.prefix.size());
    const int cx = static_cast<int>(x.cycle.size());
    const int py = static_cast<int>(y.prefix.size());
    const int cy = static_cast<int>(y.cycle.size());
    ih.ref_level_ = px;
    ih.jref_ = py;
    ih.cx_ = cx;

    auto homset = [&](int i, int j) { return C.hom(x.object_at(i), y.object_at(j)); };

    auto jchain = [&](int i) {
        std::vector<SetChainEntry> pre, cyc;
        auto entry = [&](int j, int wrap_to) {
            auto dom = homset(i, j);
            auto cod = homset(i, wrap_to);
            SetChainEntry e;
            e.size = static_cast<int>(dom.size());
            e.map.resize(dom.size());
            for (size_t a = 0; a < dom.size(); ++a) {
                int w = C.compose(y.transition_at(j), dom[a]);
                e.map[a] =
                    static_cast<int>(std::find(cod.begin(), cod.end(), w) - cod.begin());
            }
            return e;
        };
        for (int j = 0; j < py; ++j) pre.push_back(entry(j, j + 1));
        for (int j = 0; j < cy; ++j)
            cyc.push_back(entry(py + j, py + (j + 1) % cy));
        check_forward_chain(pre, cyc); // aligned presentation, deliberately not canonicalized
        return FinSetChain{std::move(pre), std::move(cyc)};
    };

    for (int i = 0; i < px + cx; ++i) ih.colims.push_back(colim_of_chain(jchain(i)));

    auto rho = [&](int i) {
        const ChainColimit& qn = ih.colim_at(i + 1);
        const ChainColimit& qi = ih.colim_at(i);
        auto hs_next = homset(i + 1, py);
        auto hs_this = homset(i, py);
        SetChainEntry e;
        e.size = qi.size();
        e.map.resize(qn.size());
        for (int z = 0; z < qn.size(); ++z) {
            int g = hs_next[qn.eventual[z]];
            int w = C.compose(g, x.transition_at(i));
            int pos =
                static_cast<int>(std::find(hs_this.begin(), hs_this.end(), w) - hs_this.begin());
            e.map[z] = qi.cocone(py, pos);
        }
        return e;
    };

    std::vector<SetChainEntry> ipre, icyc;
    for (int i = 0; i < px; ++i) ipre.push_back(rho(i));
    for (int i = px; i < px + cx; ++i) icyc.push_back(rho(i));
    check_inverse_chain(ipre, icyc);
    InverseFinSetChain inv{std::move(ipre), std::move(icyc)};
    ih.limit = lim_of_inverse_chain(inv);
    return ih;
}

const Functor& EvaluatedFamily::functor_at(int k) const {
    int p = static_cast<int>(level_prefix.size());
    if (k < p) return level_prefix[k];
    return level_cycle[(k - p) % level_cycle.size()];
}

int EvaluatedFamily::action(int f, int k) const { return functor_at(k).mmap[f]; }

EvaluatedFamily apply_E(const FunctorCategoryResult& fc, const PeriodicChain& x) {
    EvaluatedFamily fam;
    fam.index_cat = fc.objects.at(x.object_at(0)).source;
    fam.target_cat = fc.objects.at(x.object_at(0)).target;
    const int p = static_cast<int>(x.prefix.size());
    const int q = static_cast<int>(x.cycle.size());
    for (int k = 0; k < p; ++k) fam.level_prefix.push_back(fc.objects[x.prefix[k].object]);
    for (int k = 0; k < q; ++k) fam.level_cycle.push_back(fc.objects[x.cycle[k].object]);

    const int n = fam.index_cat->object_count();
    for (int i = 0; i < n; ++i) {
        std::vector<ChainEntry> pre, cyc;
        for (int k = 0; k < p; ++k)
            pre.push_back({fc.objects[x.prefix[k].object].omap[i],
                           fc.morphisms[x.prefix[k].morphism].components[i]});
        for (int k = 0; k < q; ++k)
            cyc.push_back({fc.objects[x.cycle[k].object].omap[i],
                           fc.morphisms[x.cycle[k].morphism].components[i]});
        fam.component.push_back(make_chain(fam.target_cat, std::move(pre), std::move(cyc)));
    }
    return fam;
}

FunctorIndHomResult hom_in_functor_ind(const EvaluatedFamily& u, const EvaluatedFamily& v) {
    const FinCategory& I = *u.index_cat;
    const FinCategory& C = *u.target_cat;
    FunctorIndHomResult res;
    for (int i = 0; i < I.object_count(); ++i)
        res.per_object.push_back(ind_hom(u.component[i], v.component[i]));

    struct Edge {
        int i = 0, i2 = 0;
        std::vector<int> post, pre;
    };
    std::vector<Edge> edges;
    for (int f = 0; f < I.morphism_count(); ++f) {
        if (I.is_identity(f)) continue;
        Edge e;
        e.i = I.src(f);
        e.i2 = I.tgt(f);
        IndHom cross = ind_hom(u.component[e.i], v.component[e.i2]);
        int mstar = cross.reference_level();
        e.post.resize(res.per_object[e.i].size());
        for (int el = 0; el < res.per_object[e.i].size(); ++el) {
            auto [j, g] = res.per_object[e.i].representative(el, mstar);
            int g2 = C.compose(v.action(f, j), g);
            e.post[el] = cross.from_component(mstar, j, g2);
        }
        e.pre.resize(res.per_object[e.i2].size());
        for (int el = 0; el < res.per_object[e.i2].size(); ++el) {
            auto [j, h] = res.per_object[e.i2].representative(el, mstar);
            int h2 = C.compose(h, u.action(f, mstar));
            e.pre[el] = cross.from_component(mstar, j, h2);
        }
        edges.push_back(std::move(e));
    }

    std::vector<int> tuple(I.object_count(), -1);
    auto compatible = [&](int upto) {
        for (const auto& e : edges) {
            if (e.i > upto || e.i2 > upto) continue;
            if (e.post[tuple[e.i]] != e.pre[tuple[e.i2]]) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int i) -> void {
        if (i == I.object_count()) {
            res.elements.push_back(tuple);
            return;
        }
        for (int el = 0; el < res.per_object[i].size(); ++el) {
            tuple[i] = el;
            if (compatible(i)) self(self, i + 1);
            tuple[i] = -1;
        }
    };
    rec(rec, 0);
    return res;
}

std::string FullFaithfulnessReport::render() const {
    std::ostringstream out;
    for (size_t i = 0; i < samples.size(); ++i)
        out << "sample " << i << ": lhs " << samples[i].lhs_size << " rhs "
            << samples[i].rhs_size << " " << (samples[i].bijective ? "bijective" : "MISMATCH")
            << "\n";
    out << (all_ok ? "FULLY-FAITHFUL: all samples bijective" : "FAILURE: comparison not bijective")
        << "\n";
    return out.str();
}

FullFaithfulnessReport check_full_faithfulness(
    const FunctorCategoryResult& fc,
    const std::vector<std::pair<PeriodicChain, PeriodicChain>>& samples) {
    FullFaithfulnessReport rep;
    rep.all_ok = true;
    for (const auto& [x, y] : samples) {
        IndHom lhs = ind_hom(x, y);
        EvaluatedFamily u = apply_E(fc, x);
        EvaluatedFamily v = apply_E(fc, y);
        FunctorIndHomResult rhs = hom_in_functor_ind(u, v);

        SampleReport sr;
        sr.lhs_size = lhs.size();
        sr.rhs_size = static_cast<int>(rhs.elements.size());
        bool ok = sr.lhs_size == sr.rhs_size;
        std::set<std::vector<int>> seen;
        const int n = u.index_cat->object_count();
        for (int el = 0; ok && el < lhs.size(); ++el) {
            std::vector<int> tuple(n);
            for (int i = 0; i < n; ++i) {
                int mstar = rhs.per_object[i].reference_level();
                auto [j, alpha] = lhs.representative(el, mstar);
                int comp = fc.morphisms[alpha].components[i];
                tuple[i] = rhs.per_object[i].from_component(mstar, j, comp);
            }
            if (std::find(rhs.elements.begin(), rhs.elements.end(), tuple) ==
                rhs.elements.end())
                ok = false;
            else if (!seen.insert(tuple).second)
                ok = false; // comparison failed to be injective
        }
        sr.bijective = ok;
        rep.all_ok = rep.all_ok && ok;
        rep.samples.push_back(sr);
    }
    return rep;
}

std::string CounterexampleReport::render() const {
    std::ostringstream out;
    for (const auto& s : stages)
        out << "stage " << s.stage << ": presheaf "
            << (s.presheaf_ok ? "ok" : "MISMATCH") << ", retract "
            << (s.has_retract ? "certificate" : "absent") << "\n";
    if (first_certificate >= 0)
        out << "first certificate: stage " << first_certificate << "\n";
    else
        out << "no retract certificate at any tested stage\n";
    out << "note: essential surjectivity of the comparison functor is probed through the\n"
           "note: retract search; certificates absent at every stage are its finite\n"
           "note: obstruction, essential surjectivity itself quantifies over all ind-objects\n";
    return out.str();
}

namespace {

bool presheaf_identity_holds(const FinCategory& I, const StagedCategory& staged) {
    const FinCategory& S = *staged.category;
    for (int x = 0; x < I.object_count(); ++x) {
        for (int so = 0; so < S.object_count(); ++so) {
            auto [y, beta] = staged.object_of[so];
            auto base_hom = I.hom(y, x);
            for (int alpha = beta + 1; alpha < staged.stage_count; ++alpha) {
                int target = staged.staged_object(x, alpha);
                auto lifted = S.hom(so, target);
                if (lifted.size() != base_hom.size()) return false;
                std::vector<int> image;
                for (int h : lifted) image.push_back(staged.projection.mmap[h]);
                std::sort(image.begin(), image.end());
                if (image != base_hom) return false;
                if (alpha + 1 < staged.stage_count) {
                    int step = staged.staged_morphism(I.identity(x), alpha, alpha + 1);
                    std::set<int> hit;
                    for (int h : lifted) {
                        int h2 = S.compose(step, h);
                        if (staged.projection.mmap[h2] != staged.projection.mmap[h])
                            return false;
                        hit.insert(h2);
                    }
                    if (hit.size() != lifted.size()) return false; // transition not injective
                }
            }
        }
    }
    return true;
}

} // namespace

CounterexampleReport counterexample_report(CatPtr i, int n_max, const Limits& limits) {
    CounterexampleReport rep;
    rep.presheaf_all_ok = true;
    for (int n = 1; n <= n_max; ++n) {
        StagedCategory staged = build_I_alpha(i, n, limits);
        CounterexampleStage line;
        line.stage = n;
        line.presheaf_ok = presheaf_identity_holds(*i, staged);
        line.has_retract = retract_through_stage(i, n, limits).has_value();
        rep.presheaf_all_ok = rep.presheaf_all_ok && line.presheaf_ok;
        if (line.has_retract && rep.first_certificate < 0) rep.first_certificate = n;
        rep.stages.push_back(line);
    }
    return rep;
}

PeriodicChain random_chain(CatPtr c, std::mt19937_64& rng, int max_prefix, int max_period) {
    const FinCategory& C = *c;
    if (C.object_count() == 0) throw CategoryError("random_chain: empty category");
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned long>(n)); };

    int plen = pick(max_prefix + 1);
    int qlen = 1 + pick(max_period);

    std::vector<ChainEntry> prefix;
    int at = pick(C.object_count());
    for (int k = 0; k < plen; ++k) {
        std::vector<std::pair<int, int>> outgoing; // (morphism, target)
        for (int m = 0; m < C.morphism_count(); ++m)
            if (C.src(m) == at) outgoing.push_back({m, C.tgt(m)});
        auto [m, next] = outgoing[pick(static_cast<int>(outgoing.size()))];
        prefix.push_back({at, m});
        at = next;
    }

    // build a cycle from `at`; fall back to an identity loop when the random
    // walk cannot be closed
    for (int attempt = 0; attempt < 50; ++attempt) {
        std::vector<ChainEntry> cyc;
        int cur = at;
        bool dead = false;
        for (int k = 0; k < qlen - 1; ++k) {
            std::vector<std::pair<int, int>> outgoing;
            for (int m = 0; m < C.morphism_count(); ++m)
                if (C.src(m) == cur) outgoing.push_back({m, C.tgt(m)});
            if (outgoing.empty()) { dead = true; break; }
            auto [m, next] = outgoing[pick(static_cast<int>(outgoing.size()))];
            cyc.push_back({cur, m});
            cur = next;
        }
        if (dead) continue;
        auto closing = C.hom(cur, at);
        if (closing.empty()) continue;
        cyc.push_back({cur, closing[pick(static_cast<int>(closing.size()))]});
        return make_chain(c, std::move(prefix), std::move(cyc));
    }
    return make_chain(c, std::move(prefix), {{at, C.identity(at)}});
}

namespace {

std::vector<SetChainEntry> random_entries(std::mt19937_64& rng, int count, int max_size) {
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned long>(n)); };
    std::vector<SetChainEntry> out(count);
    for (auto& e : out) e.size = pick(max_size + 1);
    return out;
}

} // namespace

FinSetChain random_set_chain(std::mt19937_64& rng, int max_size, int max_prefix,
                             int max_period) {
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned long>(n)); };
    int plen = pick(max_prefix + 1);
    int qlen = 1 + pick(max_period);
    auto prefix = random_entries(rng, plen, max_size);
    auto cycle = random_entries(rng, qlen, max_size);
    // a map into an empty set forces an empty source
    bool zero = false;
    for (auto& e : cycle) zero = zero || e.size == 0;
    if (zero)
        for (auto& e : cycle) e.size = 0;
    for (int i = plen - 1; i >= 0; --i) {
        int next = i + 1 < plen ? prefix[i + 1].size : cycle[0].size;
        if (next == 0) prefix[i].size = 0;
    }
    auto fill = [&](SetChainEntry& e, int next) {
        e.map.resize(e.size);
        for (int& v : e.map) v = next == 0 ? 0 : pick(next);
    };
    for (int i = 0; i < plen; ++i)
        fill(prefix[i], i + 1 < plen ? prefix[i + 1].size : cycle[0].size);
    for (int i = 0; i < qlen; ++i) fill(cycle[i], cycle[(i + 1) % qlen].size);
    return make_set_chain(std::move(prefix), std::move(cycle));
}

InverseFinSetChain random_inverse_set_chain(std::mt19937_64& rng, int max_size, int max_prefix,
                                            int max_period) {
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned long>(n)); };
    int plen = pick(max_prefix + 1);
    int qlen = 1 + pick(max_period);
    auto prefix = random_entries(rng, plen, max_size);
    auto cycle = random_entries(rng, qlen, max_size);
    // maps point from the next set into this one: empty targets force empty sources
    bool zero = false;
    for (auto& e : cycle) zero = zero || e.size == 0;
    if (zero)
        for (auto& e : cycle) e.size = 0;
    for (int i = 0; i < plen; ++i)
        if (prefix[i].size == 0) {
            for (int j = i + 1; j < plen; ++j) prefix[j].size = 0;
            for (auto& e : cycle) e.size = 0;
            break;
        }
    auto fill = [&](SetChainEntry& e, int next) {
        e.map.resize(next);
        for (int& v : e.map) v = e.size == 0 ? 0 : pick(e.size);
    };
    for (int i = 0; i < plen; ++i)
        fill(prefix[i], i + 1 < plen ? prefix[i + 1].size : cycle[0].size);
    for (int i = 0; i < qlen; ++i) fill(cycle[i], cycle[(i + 1) % qlen].size);
    return make_inverse_set_chain(std::move(prefix), std::move(cycle));
}

ChainParseResult parse_chain_literal(CatPtr c, const std::string& text) {
    const FinCategory& C = *c;
    ChainParseResult res;
    std::string spaced;
    for (char ch : text) {
        if (ch == '[' || ch == ']') {
            spaced += ' ';
            spaced += ch;
            spaced += ' ';
        } else {
            spaced += ch;
        }
    }
    std::istringstream in(spaced);
    std::vector<std::string> toks;
    std::string tok;
    while (in >> tok) toks.push_back(tok);

    size_t at = 0;
    auto fail = [&](const std::string& msg) {
        res.error = msg;
        return res;
    };
    auto expect = [&](const std::string& s) {
        if (at < toks.size() && toks[at] == s) { ++at; return true; }
        return false;
    };
    if (!expect("chain")) return fail("expected 'chain'");
    if (at >= toks.size()) return fail("expected category name");
    if (toks[at] != C.name()) return fail("chain names category '" + toks[at] + "', not '" + C.name() + "'");
    ++at;

    auto parse_block = [&](std::vector<std::pair<int, int>>& entries, int& last_obj) -> bool {
        if (!expect("[")) { res.error = "expected '['"; return false; }
        last_obj = -1;
        if (expect("]")) return true;
        while (true) {
            if (at >= toks.size()) { res.error = "unterminated block"; return false; }
            auto obj = C.object_index(toks[at]);
            if (!obj) { res.error = "unknown object '" + toks[at] + "'"; return false; }
            ++at;
            last_obj = *obj;
            if (expect("]")) return true;
            if (at >= toks.size()) { res.error = "unterminated block"; return false; }
            const std::string& arrow = toks[at];
            if (arrow.size() < 4 || arrow.front() != '-' ||
                arrow.substr(arrow.size() - 2) != "->") {
                res.error = "expected '-<mor>->' or ']'";
                return false;
            }
            auto mor = C.morphism_index(arrow.substr(1, arrow.size() - 3));
            if (!mor) { res.error = "unknown morphism in '" + arrow + "'"; return false; }
            ++at;
            entries.push_back({*obj, *mor});
        }
    };

    if (!expect("prefix")) return fail("expected 'prefix'");
    std::vector<std::pair<int, int>> pre;
    int pre_last = -1;
    if (!parse_block(pre, pre_last)) return res;
    if (!expect("cycle")) return fail("expected 'cycle'");
    std::vector<std::pair<int, int>> cyc;
    int cyc_last = -1;
    if (!parse_block(cyc, cyc_last)) return res;
    if (cyc.empty()) return fail("cycle may not be empty");
    if (cyc_last != cyc.front().first) return fail("cycle must close onto its first object");
    if (!pre.empty() && pre_last != cyc.front().first)
        return fail("prefix must hand off to the cycle start");
    if (pre.empty() && pre_last >= 0 && pre_last != cyc.front().first)
        return fail("prefix must hand off to the cycle start");

    std::vector<ChainEntry> prefix, cycle;
    for (auto [o, m] : pre) prefix.push_back({o, m});
    for (auto [o, m] : cyc) cycle.push_back({o, m});
    try {
        res.chain = make_chain(c, std::move(prefix), std::move(cycle));
    } catch (const CategoryError& e) {
        res.error = e.what();
    }
    return res;
}

std::string serialize_chain_literal(const PeriodicChain& chain) {
    const FinCategory& C = *chain.category;
    std::ostringstream out;
    out << "chain " << C.name() << " prefix [";
    for (const auto& e : chain.prefix)
        out << " " << C.object_id(e.object) << " -" << C.morphism_id(e.morphism) << "->";
    if (!chain.prefix.empty()) out << " " << C.object_id(chain.cycle[0].object);
    out << " ] cycle [";
    for (const auto& e : chain.cycle)
        out << " " << C.object_id(e.object) << " -" << C.morphism_id(e.morphism) << "->";
    out << " " << C.object_id(chain.cycle[0].object) << " ]";
    return out.str();
}

} // namespace fincat
