#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <istream>
#include <mutex>
#include <thread>

#include "padic/verify.hpp"

namespace padic::verify {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n"), b = s.find_last_not_of(" \t\r\n");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    return out;
}

int to_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw UsageError("config: " + key + " expects an integer, got '" + v + "'");
    }
}

}  // namespace

Config parse_config(std::istream& in) {
    Config cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key == "precision") cfg.precision = to_int(key, val);
        else if (key == "guard") cfg.guard = to_int(key, val);
        else if (key == "n_trunc") cfg.n_trunc = to_int(key, val);
        else if (key == "timings") cfg.timings = (val == "true" || val == "1" || val == "yes");
        else if (key == "families") {
            cfg.families.clear();
            for (auto& f : split(val, ','))
                if (!f.empty()) cfg.families.push_back(f);
        } else {
            throw UsageError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (cfg.precision < 2 || cfg.guard < 1 || cfg.n_trunc < 1) throw UsageError("config: precision >= 2, guard >= 1, n_trunc >= 1");
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file " + path);
    return parse_config(in);
}

std::string status_name(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    }
    return "?";
}

Status parse_status(const std::string& s) {
    for (Status x : {Status::pass, Status::fail, Status::skipped})
        if (status_name(x) == s) return x;
    throw std::invalid_argument("unknown status " + s);
}

void to_json(nlohmann::json& j, const CheckParams& p) {
    j = nlohmann::json::object();
    j["p"] = p.p;
    j["d"] = p.d;
    if (!p.z.empty()) j["z"] = p.z;
    if (p.c) j["c"] = p.c;
    if (p.m) j["m"] = p.m;
    if (p.n) j["n"] = p.n;
    if (p.k) j["k"] = p.k;
    if (!p.a.empty()) j["a"] = p.a;
    if (!p.family.empty()) j["family"] = p.family;
    if (p.M) j["M"] = p.M;
    if (p.guard) j["guard"] = p.guard;
}

void from_json(const nlohmann::json& j, CheckParams& p) {
    p = CheckParams{};
    p.p = j.at("p").get<u64>();
    p.d = j.at("d").get<int>();
    p.z = j.value("z", std::string{});
    p.c = j.value("c", i64{0});
    p.m = j.value("m", 0);
    p.n = j.value("n", 0);
    p.k = j.value("k", 0);
    p.a = j.value("a", std::string{});
    p.family = j.value("family", std::string{});
    p.M = j.value("M", 0);
    p.guard = j.value("guard", 0);
}

void to_json(nlohmann::json& j, const CheckReport& r) {
    j = nlohmann::json::object();
    j["check_id"] = r.check_id;
    j["params"] = r.params;
    j["status"] = status_name(r.status);
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["agreement_modulus"] = {{"p", r.params.p}, {"k", r.agreement}};
    j["requested_modulus"] = {{"p", r.params.p}, {"k", r.requested}};
    j["citation"] = r.citation;
    if (!r.note.empty()) j["note"] = r.note;
    j["wall_time_ms"] = r.wall_time_ms ? nlohmann::json(*r.wall_time_ms) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, CheckReport& r) {
    r = CheckReport{};
    r.check_id = j.at("check_id").get<std::string>();
    r.params = j.at("params").get<CheckParams>();
    r.status = parse_status(j.at("status").get<std::string>());
    r.lhs = j.at("lhs").get<std::string>();
    r.rhs = j.at("rhs").get<std::string>();
    r.agreement = j.at("agreement_modulus").at("k").get<int>();
    r.requested = j.at("requested_modulus").at("k").get<int>();
    r.citation = j.at("citation").get<std::string>();
    r.note = j.value("note", std::string{});
    if (j.contains("wall_time_ms") && !j["wall_time_ms"].is_null()) r.wall_time_ms = j["wall_time_ms"].get<double>();
}

std::string default_root(int d) { return d == 1 ? "-1" : "w"; }

UnramifiedElement parse_root(const UnramifiedField& F, int prec, const std::string& s) {
    if (s == "w") return UnramifiedElement::generator(F, prec);
    if (s.rfind("w^", 0) == 0) {
        int k = 0;
        try {
            k = std::stoi(s.substr(2));
        } catch (const std::exception&) {
            throw UsageError("z: bad exponent in '" + s + "'");
        }
        const u64 order = F.q() - 1;
        i64 e = ((k % static_cast<i64>(order)) + static_cast<i64>(order)) % static_cast<i64>(order);
        return UnramifiedElement::generator(F, prec).pow(static_cast<u64>(e));
    }
    i64 v = 0;
    try {
        std::size_t pos = 0;
        v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
        throw UsageError("z: expected an integer, w or w^k, got '" + s + "'");
    }
    if (v % static_cast<i64>(F.prime()) == 0) throw UsageError("z: p divides " + s + ", not a root of unity");
    return teichmuller(F, {v}, prec);
}

NormCompatibleUnit parse_family_spec(const std::string& spec, const UnramifiedField& F, int prec) {
    const i64 p = static_cast<i64>(F.prime());
    std::optional<NormCompatibleUnit> out;
    for (const std::string& part : split(spec, '*')) {
        std::string name = part, arg;
        if (auto lp = part.find('('); lp != std::string::npos) {
            if (part.back() != ')') throw UsageError("family: unbalanced parentheses in '" + part + "'");
            name = trim(part.substr(0, lp));
            arg = trim(part.substr(lp + 1, part.size() - lp - 2));
        }
        auto tag = parse_family(name);
        if (!tag) throw UsageError("family: unknown family '" + name + "'");
        FamilyParams fp;
        auto int_arg = [&](i64 dflt) {
            if (arg.empty()) return dflt;
            try {
                return static_cast<i64>(std::stoll(arg));
            } catch (const std::exception&) {
                throw UsageError("family: integer argument expected in '" + part + "'");
            }
        };
        switch (*tag) {
        case UnitFamily::one_minus_zT: fp.z = parse_root(F, prec, arg.empty() ? default_root(F.degree()) : arg); break;
        case UnitFamily::cyclotomic_c: fp.c = int_arg(1 + p); break;
        case UnitFamily::kza:
            fp.z = parse_root(F, prec, default_root(F.degree()));
            fp.a = int_arg(p == 3 ? 5 : 3);
            break;
        case UnitFamily::trivial: break;
        }
        NormCompatibleUnit u;
        try {
            u = builtin_unit_family(*tag, fp, F, prec);
        } catch (const std::domain_error& e) {
            throw UsageError(std::string("family: ") + e.what());
        }
        out = out ? *out * u : u;
    }
    return *out;
}

Profile parse_profile(const std::string& s) {
    if (s == "quick") return Profile::quick;
    if (s == "full") return Profile::full;
    throw UsageError("profile must be quick or full");
}

std::string profile_name(Profile p) { return p == Profile::quick ? "quick" : "full"; }

std::vector<GridPoint> suite_grid(Profile profile, const Config& cfg) {
    const bool full = profile == Profile::full;
    const std::vector<u64> ps{3, 5};
    std::vector<int> ds{1, 2};
    if (full) ds = {1, 2, 3, 4};
    const int mmax = full ? 8 : 4, nmax = full ? 3 : 2;
    std::vector<GridPoint> g;
    auto add = [&](const std::string& id, CheckParams P) { g.push_back({id, std::move(P)}); };
    auto base = [](u64 p, int d) {
        CheckParams P;
        P.p = p;
        P.d = d;
        return P;
    };
    for (u64 p : ps) {
        const i64 pi = static_cast<i64>(p);
        // Q_p-only statements
        for (int m = 1; m <= mmax; ++m)
            for (i64 c : {i64{2}, 1 + pi}) {
                CheckParams P = base(p, 1);
                P.c = c;
                P.m = m;
                add("eq-2-16", P);
            }
        for (int m = 2; m <= mmax; ++m) {
            CheckParams P = base(p, 1);
            P.m = m;
            add("eq-2-17", P);
        }
        for (i64 c : {i64{2}, i64{-1}, 1 + pi}) {
            CheckParams P = base(p, 1);
            P.c = c;
            add("eq-2-18", P);
        }
        for (int m = 1; m <= mmax; ++m)
            for (int n = 1; n <= nmax + 2; ++n) {
                CheckParams P = base(p, 1);
                P.m = m;
                P.n = n;
                add("lemma-4-3", P);
            }
        for (const auto& fam : cfg.families)
            for (int n = 1; n <= nmax; ++n) {
                CheckParams P = base(p, 1);
                P.z = "1";
                P.m = 3;
                P.n = n;
                P.family = fam;
                add("remark-4-5-classical", P);
            }
        for (int d : ds) {
            const std::string zr = default_root(d);
            for (int n = 1; n <= nmax; ++n) {
                CheckParams P = base(p, d);
                P.z = zr;
                P.n = n;
                add("lemma-2-4", P);
                add("lemma-4-1", P);
            }
            for (const std::string& z : {zr, std::string("1")})
                for (i64 c : {i64{2}, 1 + pi}) {
                    CheckParams P = base(p, d);
                    P.z = z;
                    P.c = c;
                    add("lemma-3-1-1", P);
                    add("lemma-3-1-2", P);
                    add("lemma-3-1-3", P);
                }
            {
                CheckParams P = base(p, d);
                P.z = zr;
                P.n = 2;
                add("lemma-3-4", P);
            }
            for (const auto& fam : cfg.families) {
                for (int n = 1; n <= nmax; ++n) {
                    CheckParams P = base(p, d);
                    P.z = zr;
                    P.n = n;
                    P.family = fam;
                    add("thm-3-6-bilinearity", P);
                    for (const std::string& a : {std::string("teich"), "norm:" + fam}) {
                        CheckParams Q = P;
                        Q.z.clear();
                        Q.a = a;
                        add("prop-5-1", Q);
                    }
                }
                for (int k = 1; k <= 2; ++k) {
                    CheckParams P = base(p, d);
                    P.family = fam;
                    P.k = k;
                    add("eq-5-5", P);
                }
                for (int m = 2; m <= mmax; ++m) {
                    CheckParams P = base(p, d);
                    P.z = zr;
                    P.m = m;
                    P.n = 2;
                    P.family = fam;
                    add("lemma-2-6", P);
                }
                std::vector<std::string> zs{zr};
                if (d == 1) zs.push_back("1");
                for (const auto& z : zs)
                    for (int n = 1; n <= nmax; ++n)
                        for (int m = 1; m <= mmax; ++m) {
                            CheckParams P = base(p, d);
                            P.z = z;
                            P.n = n;
                            P.m = m;
                            P.family = fam;
                            P.c = z == "1" ? soule_aux_c(p, m) : 2;
                            add("prop-4-2", P);
                            P.c = 0;
                            if (z != "1" || m >= 2) add("thm-fullformula-1", P);
                            if (m >= 2) {
                                add("thm-fullformula-2", P);
                                // the character is evaluated at level n + v_p((m-1)!)
                                int lift = 0;
                                for (int j = 2; j < m; ++j)
                                    for (int t = j; t % pi == 0; t /= static_cast<int>(p)) ++lift;
                                if (n + lift <= nmax) add("cor-maincor", P);
                            }
                        }
            }
        }
    }
    std::sort(g.begin(), g.end());
    return g;
}

std::vector<CheckReport> run_points(const std::vector<GridPoint>& points, const Config& cfg, int jobs) {
    std::vector<CheckReport> out(points.size());
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::string err;
    auto worker = [&] {
        for (std::size_t i; (i = next++) < points.size();) {
            try {
                out[i] = run_check(points[i].check_id, points[i].params, cfg);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (err.empty()) err = points[i].check_id + ": " + e.what();
            }
        }
    };
    const int k = std::max(1, std::min<int>(jobs, static_cast<int>(points.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < k; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (!err.empty()) throw UsageError(err);
    std::sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) {
        return std::tie(a.check_id, a.params) < std::tie(b.check_id, b.params);
    });
    return out;
}

nlohmann::json config_json(const Config& cfg) {
    return {{"precision", cfg.precision}, {"guard", cfg.guard}, {"n_trunc", cfg.n_trunc}, {"families", cfg.families},
            {"timings", cfg.timings}};
}

nlohmann::json suite_report(const std::vector<CheckReport>& reports, const std::string& profile, const Config& cfg) {
    nlohmann::json doc;
    doc["schema"] = kSchema;
    doc["profile"] = profile;
    doc["config"] = config_json(cfg);
    int pass = 0, fail = 0, skipped = 0;
    for (const auto& r : reports) (r.status == Status::pass ? pass : r.status == Status::fail ? fail : skipped)++;
    doc["summary"] = {{"total", reports.size()}, {"pass", pass}, {"fail", fail}, {"skipped", skipped}};
    doc["reports"] = reports;
    return doc;
}

std::vector<CheckReport> reports_from_json(const nlohmann::json& doc) {
    if (doc.value("schema", std::string{}) != kSchema)
        throw std::invalid_argument("report schema mismatch: expected " + std::string(kSchema));
    return doc.at("reports").get<std::vector<CheckReport>>();
}

}  // namespace padic::verify
