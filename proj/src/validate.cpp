#include "fincat/validate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace fincat {

std::string violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::ParseError: return "ParseError";
        case ViolationKind::DuplicateId: return "DuplicateId";
        case ViolationKind::UnknownId: return "UnknownId";
        case ViolationKind::MissingComposite: return "MissingComposite";
        case ViolationKind::IllTypedComposite: return "IllTypedComposite";
        case ViolationKind::UnitLawViolation: return "UnitLawViolation";
        case ViolationKind::AssociativityViolation: return "AssociativityViolation";
    }
    return "Unknown";
}

namespace {

bool valid_id(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace

ParseResult parse_category_text(const std::string& text) {
    ParseResult res;
    bool seen_header = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto err = [&](const std::string& msg) {
        res.errors.push_back({ViolationKind::ParseError,
                              "line " + std::to_string(lineno) + ": " + msg});
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "category") {
            if (seen_header) { err("duplicate category line"); continue; }
            if (toks.size() != 2 || !valid_id(toks[1])) { err("expected: category <name>"); continue; }
            res.description.name = toks[1];
            seen_header = true;
        } else if (kw == "object") {
            if (toks.size() != 2 || !valid_id(toks[1])) { err("expected: object <id>"); continue; }
            res.description.objects.push_back(toks[1]);
        } else if (kw == "mor") {
            // mor <id> : <src> -> <tgt>
            if (toks.size() != 6 || toks[2] != ":" || toks[4] != "->" || !valid_id(toks[1]) ||
                !valid_id(toks[3]) || !valid_id(toks[5])) {
                err("expected: mor <id> : <src> -> <tgt>");
                continue;
            }
            if (toks[1].rfind("id_", 0) == 0) {
                err("morphism ids starting with id_ are reserved for identities");
                continue;
            }
            res.description.morphisms.emplace_back(toks[1], toks[3], toks[5]);
        } else if (kw == "comp") {
            // comp <g> . <f> = <h>
            if (toks.size() != 6 || toks[2] != "." || toks[4] != "=" || !valid_id(toks[1]) ||
                !valid_id(toks[3]) || !valid_id(toks[5])) {
                err("expected: comp <g> . <f> = <h>");
                continue;
            }
            if (toks[1].rfind("id_", 0) == 0 || toks[3].rfind("id_", 0) == 0) {
                err("identity composites are implicit");
                continue;
            }
            res.description.composites.emplace_back(toks[1], toks[3], toks[5]);
        } else {
            err("unknown keyword '" + kw + "'");
        }
    }
    if (!seen_header && res.errors.empty())
        res.errors.push_back({ViolationKind::ParseError, "missing category line"});
    return res;
}

ValidationResult validate_category(const CategoryDescription& raw) {
    ValidationResult res;
    auto add = [&](ViolationKind k, const std::string& d) { res.errors.push_back({k, d}); };

    if (!valid_id(raw.name)) add(ViolationKind::ParseError, "invalid category name");

    std::set<std::string> oids;
    for (const auto& o : raw.objects) {
        if (!valid_id(o)) { add(ViolationKind::ParseError, "invalid object id " + o); continue; }
        if (!oids.insert(o).second) add(ViolationKind::DuplicateId, "object " + o);
    }

    std::map<std::string, std::pair<std::string, std::string>> mors; // id -> (src, tgt)
    std::set<std::string> all_mor_ids;
    for (const auto& o : oids) all_mor_ids.insert("id_" + o);
    for (const auto& [id, s, t] : raw.morphisms) {
        if (!all_mor_ids.insert(id).second) {
            add(ViolationKind::DuplicateId, "morphism " + id);
            continue;
        }
        bool ok = true;
        if (!oids.count(s)) { add(ViolationKind::UnknownId, "morphism " + id + ": unknown source " + s); ok = false; }
        if (!oids.count(t)) { add(ViolationKind::UnknownId, "morphism " + id + ": unknown target " + t); ok = false; }
        if (ok) mors[id] = {s, t};
    }
    if (!res.errors.empty()) return res;

    auto src_of = [&](const std::string& m) -> std::string {
        if (m.rfind("id_", 0) == 0 && oids.count(m.substr(3))) return m.substr(3);
        return mors.at(m).first;
    };
    auto tgt_of = [&](const std::string& m) -> std::string {
        if (m.rfind("id_", 0) == 0 && oids.count(m.substr(3))) return m.substr(3);
        return mors.at(m).second;
    };
    auto known = [&](const std::string& m) { return all_mor_ids.count(m) > 0; };

    std::map<std::pair<std::string, std::string>, std::string> table;
    for (const auto& [g, f, h] : raw.composites) {
        if (!known(g)) { add(ViolationKind::UnknownId, "comp: unknown morphism " + g); continue; }
        if (!known(f)) { add(ViolationKind::UnknownId, "comp: unknown morphism " + f); continue; }
        if (!known(h)) { add(ViolationKind::UnknownId, "comp: unknown morphism " + h); continue; }
        if (tgt_of(f) != src_of(g)) {
            add(ViolationKind::IllTypedComposite,
                "comp " + g + " . " + f + ": not composable");
            continue;
        }
        if (src_of(h) != src_of(f) || tgt_of(h) != tgt_of(g)) {
            add(ViolationKind::IllTypedComposite,
                "comp " + g + " . " + f + " = " + h + ": result has wrong endpoints");
            continue;
        }
        auto key = std::make_pair(g, f);
        auto it = table.find(key);
        if (it != table.end()) {
            if (it->second != h)
                add(ViolationKind::DuplicateId, "conflicting comp entries for (" + g + ", " + f + ")");
            continue;
        }
        table[key] = h;
    }

    // Totality over non-identity composable pairs.
    for (const auto& [g, gp] : mors)
        for (const auto& [f, fp] : mors)
            if (fp.second == gp.first && !table.count({g, f}))
                add(ViolationKind::MissingComposite, "(" + g + ", " + f + ")");
    if (!res.errors.empty()) return res;

    // Extend the table with unit composites, then check associativity.
    auto full = [&](const std::string& g, const std::string& f) -> std::string {
        if (g.rfind("id_", 0) == 0 && oids.count(g.substr(3))) return f;
        if (f.rfind("id_", 0) == 0 && oids.count(f.substr(3))) return g;
        return table.at({g, f});
    };
    std::vector<std::string> every(all_mor_ids.begin(), all_mor_ids.end());
    for (const auto& h : every)
        for (const auto& g : every) {
            if (tgt_of(g) != src_of(h)) continue;
            for (const auto& f : every) {
                if (tgt_of(f) != src_of(g)) continue;
                if (full(h, full(g, f)) != full(full(h, g), f))
                    add(ViolationKind::AssociativityViolation,
                        "(" + h + ", " + g + ", " + f + "): " + full(h, full(g, f)) +
                            " != " + full(full(h, g), f));
            }
        }
    if (!res.errors.empty()) return res;

    CategoryBuilder b(raw.name);
    for (const auto& o : raw.objects) b.add_object(o);
    for (const auto& [id, s, t] : raw.morphisms) b.add_morphism(id, s, t);
    for (const auto& [gf, h] : table) b.set_compose(gf.first, gf.second, h);
    res.category = b.build();
    return res;
}

std::vector<Violation> check_invariants(const FinCategory& cat) {
    std::vector<Violation> out;
    const int M = cat.morphism_count();
    for (int f = 0; f < M; ++f) {
        int il = cat.identity(cat.tgt(f)), ir = cat.identity(cat.src(f));
        if (cat.compose(il, f) != f || cat.compose(f, ir) != f)
            out.push_back({ViolationKind::UnitLawViolation, cat.morphism_id(f)});
    }
    for (int g = 0; g < M; ++g)
        for (int f = 0; f < M; ++f) {
            if (!cat.composable(g, f)) continue;
            int h = cat.compose(g, f);
            if (cat.src(h) != cat.src(f) || cat.tgt(h) != cat.tgt(g))
                out.push_back({ViolationKind::IllTypedComposite,
                               "(" + cat.morphism_id(g) + ", " + cat.morphism_id(f) + ")"});
        }
    for (int h = 0; h < M; ++h)
        for (int g = 0; g < M; ++g) {
            if (!cat.composable(h, g)) continue;
            for (int f = 0; f < M; ++f) {
                if (!cat.composable(g, f)) continue;
                if (cat.compose(h, cat.compose(g, f)) != cat.compose(cat.compose(h, g), f))
                    out.push_back({ViolationKind::AssociativityViolation,
                                   "(" + cat.morphism_id(h) + ", " + cat.morphism_id(g) + ", " +
                                       cat.morphism_id(f) + ")"});
            }
        }
    return out;
}

std::string serialize_category(const FinCategory& cat) {
    std::ostringstream out;
    out << "category " << cat.name() << "\n";
    for (int o = 0; o < cat.object_count(); ++o) out << "object " << cat.object_id(o) << "\n";
    for (int m = 0; m < cat.morphism_count(); ++m) {
        if (cat.is_identity(m)) continue;
        out << "mor " << cat.morphism_id(m) << " : " << cat.object_id(cat.src(m)) << " -> "
            << cat.object_id(cat.tgt(m)) << "\n";
    }
    for (int g = 0; g < cat.morphism_count(); ++g) {
        if (cat.is_identity(g)) continue;
        for (int f = 0; f < cat.morphism_count(); ++f) {
            if (cat.is_identity(f) || !cat.composable(g, f)) continue;
            out << "comp " << cat.morphism_id(g) << " . " << cat.morphism_id(f) << " = "
                << cat.morphism_id(cat.compose(g, f)) << "\n";
        }
    }
    return out.str();
}

ValidationResult load_category_text(const std::string& text) {
    auto parsed = parse_category_text(text);
    if (!parsed.ok()) {
        ValidationResult res;
        res.errors = parsed.errors;
        return res;
    }
    return validate_category(parsed.description);
}

} // namespace fincat
