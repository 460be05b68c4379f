// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#include "lpbm/scenario.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "detail/verify_util.hpp"
#include "lpbm/combine.hpp"
#include "lpbm/errors.hpp"
#include "lpbm/verify.hpp"

namespace lpbm {

using detail::json;

namespace {

std::string pointer_token(const std::string& key) {
    std::string out;
    for (char c : key) {
        if (c == '~') out += "~0";
        else if (c == '/') out += "~1";
        else out += c;
    }
    return out;
}

std::string type_name(const json& j) { return j.type_name(); }

/// Strict view of one JSON object: every accessor records the key as known
/// and writes the canonical value into `out`; `done()` rejects the rest.
class Obj {
public:
    Obj(const json& j, std::string where) : j_(j), where_(std::move(where)) {
        if (!j_.is_object()) throw ConfigError(where_, "expected an object, got " + type_name(j_));
        out = json::object();
    }

    std::string at(const std::string& key) const { return where_ + "/" + pointer_token(key); }
    const std::string& where() const { return where_; }
    bool has(const std::string& key) const { return j_.contains(key); }

    const json& raw(const std::string& key) {
        seen_.insert(key);
        if (!j_.contains(key)) throw ConfigError(at(key), "missing required key");
        return j_.at(key);
    }
    const json* raw_opt(const std::string& key) {
        seen_.insert(key);
        return j_.contains(key) ? &j_.at(key) : nullptr;
    }

    double num(const std::string& key) { return put(key, as_num(raw(key), at(key))); }
    double num(const std::string& key, double def) {
        const json* v = raw_opt(key);
        return put(key, v ? as_num(*v, at(key)) : def);
    }
    int integer(const std::string& key, int def) {
        const json* v = raw_opt(key);
        return put(key, v ? as_int(*v, at(key)) : def);
    }
    int integer(const std::string& key) { return put(key, as_int(raw(key), at(key))); }
    std::uint64_t u64(const std::string& key, std::uint64_t def) {
        const json* v = raw_opt(key);
        if (!v) return put(key, def);
        if (!v->is_number_unsigned() && !(v->is_number_integer() && v->get<std::int64_t>() >= 0))
            throw ConfigError(at(key), "expected a non-negative integer");
        return put(key, v->get<std::uint64_t>());
    }
    bool flag(const std::string& key, bool def) {
        const json* v = raw_opt(key);
        if (v && !v->is_boolean()) throw ConfigError(at(key), "expected true or false");
        return put(key, v ? v->get<bool>() : def);
    }
    std::string str(const std::string& key) {
        const json& v = raw(key);
        if (!v.is_string()) throw ConfigError(at(key), "expected a string");
        return put(key, v.get<std::string>());
    }
    std::string str(const std::string& key, const std::string& def) {
        const json* v = raw_opt(key);
        if (v && !v->is_string()) throw ConfigError(at(key), "expected a string");
        return put(key, v ? v->get<std::string>() : def);
    }
    ExtReal ext(const std::string& key) {
        const ExtReal v = as_ext(raw(key), at(key));
        out[key] = detail::ext_json(v);
        return v;
    }
    ExtReal ext(const std::string& key, ExtReal def) {
        const json* j = raw_opt(key);
        const ExtReal v = j ? as_ext(*j, at(key)) : def;
        out[key] = detail::ext_json(v);
        return v;
    }
    std::vector<double> nums(const std::string& key) { return put(key, as_nums(raw(key), at(key))); }
    std::vector<double> nums(const std::string& key, std::vector<double> def) {
        const json* v = raw_opt(key);
        return put(key, v ? as_nums(*v, at(key)) : std::move(def));
    }
    std::vector<ExtReal> exts(const std::string& key) {
        const json& v = raw(key);
        if (!v.is_array() || v.empty()) throw ConfigError(at(key), "expected a non-empty array");
        std::vector<ExtReal> out_v;
        for (std::size_t i = 0; i < v.size(); ++i) out_v.push_back(as_ext(v[i], at(key) + "/" + std::to_string(i)));
        out[key] = detail::pvec_json(out_v);
        return out_v;
    }
    std::vector<int> ints(const std::string& key) {
        const json& v = raw(key);
        if (!v.is_array() || v.empty()) throw ConfigError(at(key), "expected a non-empty array");
        std::vector<int> out_v;
        for (std::size_t i = 0; i < v.size(); ++i) out_v.push_back(as_int(v[i], at(key) + "/" + std::to_string(i)));
        return put(key, out_v);
    }

    void done() const {
        for (const auto& item : j_.items())
            if (!seen_.count(item.key())) throw ConfigError(at(item.key()), "unknown key '" + item.key() + "'");
    }

    json out;

private:
    template <class T>
    T put(const std::string& key, T v) {
        out[key] = v;
        return v;
    }
    static double as_num(const json& v, const std::string& where) {
        if (!v.is_number()) throw ConfigError(where, "expected a number, got " + type_name(v));
        const double d = v.get<double>();
        if (!std::isfinite(d)) throw ConfigError(where, "expected a finite number");
        return d;
    }
    static int as_int(const json& v, const std::string& where) {
        if (!v.is_number_integer()) throw ConfigError(where, "expected an integer, got " + type_name(v));
        const auto i = v.get<std::int64_t>();
        if (i < -2'000'000'000 || i > 2'000'000'000) throw ConfigError(where, "integer out of range");
        return static_cast<int>(i);
    }
    static std::vector<double> as_nums(const json& v, const std::string& where) {
        if (!v.is_array()) throw ConfigError(where, "expected an array of numbers");
        std::vector<double> out_v;
        for (std::size_t i = 0; i < v.size(); ++i) out_v.push_back(as_num(v[i], where + "/" + std::to_string(i)));
        return out_v;
    }
    static ExtReal as_ext(const json& v, const std::string& where) {
        try {
            if (v.is_string()) {
                const auto s = v.get<std::string>();
                if (s != "inf" && s != "-inf") throw ConfigError(where, "extended reals are numbers, \"inf\" or \"-inf\"");
                return ExtReal::parse(s);
            }
            return ExtReal(as_num(v, where));
        } catch (const DomainError& e) {
            throw ConfigError(where, e.what());
        }
    }

    const json& j_;
    std::string where_;
    std::set<std::string> seen_;
};

/// Runs `fn`, turning library argument errors into ConfigError at `where`.
template <class F>
auto guarded(const std::string& where, F&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ConfigError&) {
        throw;
    } catch (const DomainError& e) {
        throw ConfigError(where, e.what());
    } catch (const Unsupported& e) {
        throw ConfigError(where, e.what());
    }
}

Potential quadratic_potential(int n) {
    Potential v;
    v.value = [](std::span<const double> x) {
        double s = 0.0;
        for (double c : x) s += c * c;
        return 0.5 * s;
    };
    v.gradient = [](std::span<const double> x) { return Point(x.begin(), x.end()); };
    v.hessian = [n](std::span<const double>) {
        SymMatrix h(n);
        for (int i = 0; i < n; ++i) h(i, i) = 1.0;
        return h;
    };
    return v;
}

struct Job {
    std::string id;
    std::string section;
    std::function<Report()> run;
};

struct Compiled {
    json doc;
    std::vector<Job> jobs;
    std::map<std::string, std::function<std::vector<CurvePoint>()>> curves;
    std::string output_dir;
};

class Builder {
public:
    explicit Builder(const json& root) : root_(root) {}

    json build(Compiled& impl, std::optional<std::uint64_t> seed_override) {
        Obj top(root_, "");
        const std::string schema = top.str("schema");
        if (schema != kScenarioSchema)
            throw ConfigError(top.at("schema"), "unsupported schema '" + schema + "', expected '" + kScenarioSchema + "'");
        seed_ = top.u64("seed", 1);
        if (seed_override) {
            seed_ = *seed_override;
            top.out["seed"] = seed_;
        }
        tolerance_factor_ = top.num("tolerance_factor", kToleranceFactor);
        if (!(tolerance_factor_ > 0.0)) throw ConfigError(top.at("tolerance_factor"), "must be positive");

        if (const json* b = top.raw_opt("bodies")) {
            if (!b->is_object()) throw ConfigError(top.at("bodies"), "expected an object");
            bodies_src_ = b;
        }
        if (const json* d = top.raw_opt("densities")) {
            if (!d->is_object()) throw ConfigError(top.at("densities"), "expected an object");
            densities_src_ = d;
        }
        // Resolve every named entry, so unused ones are still validated.
        if (bodies_src_)
            for (const auto& item : bodies_src_->items()) body(item.key(), "/bodies");
        if (densities_src_)
            for (const auto& item : densities_src_->items()) density(item.key(), "/densities");
        top.out["bodies"] = bodies_out_;
        top.out["densities"] = densities_out_;

        json checks = json::array();
        const json& cs = top.raw("checks");
        if (!cs.is_array()) throw ConfigError(top.at("checks"), "expected an array");
        std::set<std::string> ids;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const std::string where = "/checks/" + std::to_string(i);
            Obj c(cs[i], where);
            const std::string kind = c.str("kind");
            const std::string id = c.str("id", kind + "-" + std::to_string(i));
            if (!ids.insert(id).second) throw ConfigError(c.at("id"), "duplicate check id '" + id + "'");
            const std::string section = c.str("section", kind);
            Obj params(c.raw("params"), c.at("params"));
            Job job{id, section, build_check(kind, params, c.at("kind"))};
            params.done();
            c.out["params"] = params.out;
            c.done();
            impl.jobs.push_back(std::move(job));
            checks.push_back(c.out);
        }
        top.out["checks"] = checks;

        json curves = json::object();
        if (const json* cv = top.raw_opt("curves")) {
            Obj co(*cv, top.at("curves"));
            for (const auto& item : cv->items()) {
                (void)co.raw(item.key());
                Obj spec(item.value(), co.at(item.key()));
                impl.curves[item.key()] = build_curve(spec);
                spec.done();
                curves[item.key()] = spec.out;
            }
        }
        top.out["curves"] = curves;

        if (const json* o = top.raw_opt("output")) {
            Obj out(*o, top.at("output"));
            impl.output_dir = out.str("dir", "");
            out.done();
        }
        top.out["output"] = json{{"dir", impl.output_dir}};
        top.done();
        return top.out;
    }

private:
    // -- named entities ------------------------------------------------------

    Body body(const std::string& name, const std::string& ref_where) {
        if (auto it = bodies_.find(name); it != bodies_.end()) return it->second;
        if (!bodies_src_ || !bodies_src_->contains(name)) throw ConfigError(ref_where, "unknown body '" + name + "'");
        if (!visiting_.insert("body:" + name).second) throw ConfigError(ref_where, "cyclic body reference '" + name + "'");
        const std::string where = "/bodies/" + pointer_token(name);
        Obj o(bodies_src_->at(name), where);
        const std::string family = o.str("family");
        Body b = guarded(where, [&]() -> Body {
            if (family == "lq_ball") {
                const ExtReal q = o.ext("q");
                return Body::lq_ball(q, o.nums("radii"));
            }
            if (family == "box") return Body::box(o.nums("radii"));
            if (family == "h_polytope") {
                const json& hs = o.raw("halfspaces");
                if (!hs.is_array()) throw ConfigError(o.at("halfspaces"), "expected an array");
                std::vector<Body::Halfspace> list;
                json hs_out = json::array();
                for (std::size_t i = 0; i < hs.size(); ++i) {
                    Obj h(hs[i], o.at("halfspaces") + "/" + std::to_string(i));
                    list.push_back({h.nums("normal"), h.num("offset")});
                    h.done();
                    hs_out.push_back(h.out);
                }
                o.out["halfspaces"] = hs_out;
                return Body::h_polytope(std::move(list));
            }
            if (family == "dilate") {
                const std::string of = o.str("of");
                const Body base = body(of, o.at("of"));
                return dilate(base, o.num("t"));
            }
            throw ConfigError(o.at("family"), "unknown body family '" + family + "'");
        });
        o.done();
        visiting_.erase("body:" + name);
        bodies_out_[name] = o.out;
        bodies_.emplace(name, b);
        return b;
    }

    Density density(const std::string& name, const std::string& ref_where) {
        if (auto it = densities_.find(name); it != densities_.end()) return it->second;
        if (!densities_src_ || !densities_src_->contains(name))
            throw ConfigError(ref_where, "unknown density '" + name + "'");
        if (!visiting_.insert("density:" + name).second)
            throw ConfigError(ref_where, "cyclic density reference '" + name + "'");
        const std::string where = "/densities/" + pointer_token(name);
        Obj o(densities_src_->at(name), where);
        const std::string family = o.str("family");
        Density d = guarded(where, [&]() -> Density {
            if (family == "lebesgue") return Density::lebesgue(o.integer("dim"));
            if (family == "gaussian") return Density::gaussian(o.integer("dim"));
            if (family == "power_convex") {
                const int dim = o.integer("dim");
                const ExtReal alpha = o.ext("alpha");
                return Density::power_convex(dim, alpha, o.num("beta", 1.0));
            }
            if (family == "uniform_on_body") {
                const std::string b = o.str("body");
                return Density::uniform_on_body(body(b, o.at("body")));
            }
            if (family == "restricted") {
                const std::string base = o.str("density");
                const Density inner = density(base, o.at("density"));
                const std::string b = o.str("body");
                return inner.restricted_to(body(b, o.at("body")));
            }
            throw ConfigError(o.at("family"), "unknown density family '" + family + "'");
        });
        o.done();
        visiting_.erase("density:" + name);
        densities_out_[name] = o.out;
        densities_.emplace(name, d);
        return d;
    }

    Body body_ref(Obj& o, const std::string& key) {
        const std::string name = o.str(key);
        return body(name, o.at(key));
    }
    Density density_ref(Obj& o, const std::string& key) {
        const std::string name = o.str(key);
        return density(name, o.at(key));
    }

    static void require_dim(const Obj& o, const std::string& key, int got, int want) {
        if (got != want)
            throw ConfigError(o.at(key), "dimension " + std::to_string(got) + " does not match " + std::to_string(want));
    }

    // -- parameter groups ----------------------------------------------------

    VerifyConfig verify_config(Obj& params, int dim) {
        VerifyConfig cfg;
        const json empty = json::object();
        const json* src = params.raw_opt("config");
        Obj o(src ? *src : empty, params.at("config"));
        cfg.resolution = o.integer("resolution", default_resolution(dim));
        cfg.measure.resolution = o.integer("measure_resolution", cfg.resolution);
        cfg.measure.mc_samples = o.u64("mc_samples", cfg.measure.mc_samples);
        cfg.measure.seed = o.u64("measure_seed", cfg.measure.seed);
        cfg.firey_directions = o.integer("firey_directions", default_firey_directions(dim));
        cfg.tolerance_factor = o.num("tolerance_factor", tolerance_factor_);
        cfg.seed = o.u64("seed", seed_);
        if (cfg.resolution < 2) throw ConfigError(o.at("resolution"), "must be at least 2");
        if (cfg.measure.resolution < 2) throw ConfigError(o.at("measure_resolution"), "must be at least 2");
        if (cfg.firey_directions < 1) throw ConfigError(o.at("firey_directions"), "must be positive");
        if (!(cfg.tolerance_factor > 0.0)) throw ConfigError(o.at("tolerance_factor"), "must be positive");
        o.done();
        params.out["config"] = o.out;
        return cfg;
    }

    ConcavityRange range(Obj& params, ConcavityRange def) {
        const json empty = json::object();
        const json* src = params.raw_opt("range");
        Obj o(src ? *src : empty, params.at("range"));
        ConcavityRange r;
        r.lo = o.num("lo", def.lo);
        r.hi = o.num("hi", def.hi);
        r.triples = o.integer("triples", def.triples);
        if (r.hi < r.lo) throw ConfigError(o.where(), "hi must be >= lo");
        if (r.triples < 1) throw ConfigError(o.at("triples"), "must be positive");
        o.done();
        params.out["range"] = o.out;
        return r;
    }

    std::vector<double> lambdas(Obj& params) {
        auto ls = params.nums("lambdas", default_lambda_grid());
        if (ls.empty()) throw ConfigError(params.at("lambdas"), "must be non-empty");
        for (std::size_t i = 0; i < ls.size(); ++i)
            if (!(ls[i] >= 0.0 && ls[i] <= 1.0))
                throw ConfigError(params.at("lambdas") + "/" + std::to_string(i), "lambda must lie in [0,1]");
        return ls;
    }

    static Weight weight(Obj& params, const std::string& key, double def) {
        const double l = params.num(key, def);
        if (!(l >= 0.0 && l <= 1.0)) throw ConfigError(params.at(key), "lambda must lie in [0,1]");
        return Weight(l);
    }

    /// Sorted t grid from an array or {lo, hi, count}.
    static std::vector<double> t_grid(Obj& params, const std::string& key) {
        const json& v = params.raw(key);
        std::vector<double> ts;
        if (v.is_array()) {
            ts = params.nums(key);
        } else {
            Obj o(v, params.at(key));
            const double lo = o.num("lo");
            const double hi = o.num("hi");
            const int count = o.integer("count");
            o.done();
            params.out[key] = o.out;
            if (count < 1) throw ConfigError(o.at("count"), "must be positive");
            if (hi < lo) throw ConfigError(o.where(), "hi must be >= lo");
            for (int k = 0; k < count; ++k) ts.push_back(count == 1 ? lo : lo + (hi - lo) * k / (count - 1));
        }
        if (ts.empty()) throw ConfigError(params.at(key), "grid must be non-empty");
        if (!std::is_sorted(ts.begin(), ts.end())) throw ConfigError(params.at(key), "grid must be sorted ascending");
        return ts;
    }

    Potential potential(Obj& params, int& dim) {
        Obj o(params.raw("potential"), params.at("potential"));
        const std::string family = o.str("family");
        Potential v;
        if (family == "quadratic") {
            dim = o.integer("dim");
            if (dim < 1 || dim > 4) throw ConfigError(o.at("dim"), "dimension must be 1..4");
            v = quadratic_potential(dim);
        } else if (family == "density") {
            const Density d = density_ref(o, "density");
            if (!d.potential()) throw ConfigError(o.at("density"), "density has no potential");
            dim = d.dim();
            v = *d.potential();
        } else {
            throw ConfigError(o.at("family"), "unknown potential family '" + family + "'");
        }
        o.done();
        params.out["potential"] = o.out;
        return v;
    }

    // -- checks --------------------------------------------------------------

    std::function<Report()> build_check(const std::string& kind, Obj& p, const std::string& kind_where) {
        if (kind == "check_bmi") {
            const Body a = body_ref(p, "a"), b = body_ref(p, "b");
            const Density mu = density_ref(p, "density");
            require_dim(p, "b", b.dim(), a.dim());
            require_dim(p, "density", mu.dim(), a.dim());
            const PVector pv = p.exts("p");
            require_dim(p, "p", static_cast<int>(pv.size()), a.dim());
            const auto ls = lambdas(p);
            const auto cfg = verify_config(p, a.dim());
            return [=] { return check_bmi(a, b, mu, pv, ls, cfg); };
        }
        if (kind == "check_bmi_mset") {
            const json& names = p.raw("bodies");
            if (!names.is_array() || names.size() < 2) throw ConfigError(p.at("bodies"), "expected at least two body names");
            std::vector<Body> bs;
            for (std::size_t i = 0; i < names.size(); ++i) {
                const std::string w = p.at("bodies") + "/" + std::to_string(i);
                if (!names[i].is_string()) throw ConfigError(w, "expected a body name");
                bs.push_back(body(names[i].get<std::string>(), w));
                if (bs.back().dim() != bs.front().dim()) throw ConfigError(w, "dimension mismatch");
            }
            p.out["bodies"] = names;
            const auto ws = p.nums("weights");
            if (ws.size() != bs.size()) throw ConfigError(p.at("weights"), "one weight per body required");
            const Density mu = density_ref(p, "density");
            require_dim(p, "density", mu.dim(), bs.front().dim());
            const PVector pv = p.exts("p");
            require_dim(p, "p", static_cast<int>(pv.size()), bs.front().dim());
            const auto cfg = verify_config(p, bs.front().dim());
            return [=] { return check_bmi_mset(bs, ws, mu, pv, cfg); };
        }
        if (kind == "check_inclusion") {
            const Body a = body_ref(p, "a"), b = body_ref(p, "b");
            require_dim(p, "b", b.dim(), a.dim());
            const double pe = p.num("p");
            const Weight l = weight(p, "lambda", 0.5);
            const int samples = p.integer("samples", 10000);
            if (samples < 1) throw ConfigError(p.at("samples"), "must be positive");
            const auto cfg = verify_config(p, a.dim());
            return [=] { return check_inclusion(a, b, pe, l, static_cast<std::size_t>(samples), cfg); };
        }
        if (kind == "check_plus1_is_minkowski") {
            const Body a = body_ref(p, "a"), b = body_ref(p, "b");
            require_dim(p, "b", b.dim(), a.dim());
            const Weight l = weight(p, "lambda", 0.5);
            const auto cfg = verify_config(p, a.dim());
            return [=] { return check_plus1_is_minkowski(a, b, l, cfg); };
        }
        if (kind == "check_firey_corollary") {
            const Body a = body_ref(p, "a"), b = body_ref(p, "b");
            const Density mu = density_ref(p, "density");
            require_dim(p, "b", b.dim(), a.dim());
            require_dim(p, "density", mu.dim(), a.dim());
            const double pe = p.num("p");
            const auto ls = lambdas(p);
            const auto cfg = verify_config(p, a.dim());
            return [=] { return check_firey_corollary(a, b, mu, pe, ls, cfg); };
        }
        if (kind == "check_power_dilation_concavity" || kind == "check_dilation_concavity") {
            const Body a = body_ref(p, "body");
            const Density mu = density_ref(p, "density");
            require_dim(p, "density", mu.dim(), a.dim());
            const double pe = p.num("p");
            const auto rg = range(p, ConcavityRange{});
            const bool outside = p.flag("allow_outside_hypothesis", false);
            const auto cfg = verify_config(p, a.dim());
            if (kind == "check_dilation_concavity")
                return [=] { return check_dilation_concavity(a, mu, pe, rg, cfg, outside); };
            return [=] { return check_power_dilation_concavity(a, mu, pe, rg, cfg, outside); };
        }
        if (kind == "check_gaussian_improvement") {
            const Body a = body_ref(p, "a"), b = body_ref(p, "b");
            require_dim(p, "b", b.dim(), a.dim());
            const double gamma = p.num("gamma");
            if (!(gamma > 0.0)) throw ConfigError(p.at("gamma"), "must be positive");
            const auto ls = lambdas(p);
            const auto cfg = verify_config(p, a.dim());
            return [=] { return check_gaussian_improvement(a, b, gamma, ls, cfg); };
        }
        if (kind == "check_B_property") {
            const Density mu = density_ref(p, "density");
            const Body a = body_ref(p, "body");
            require_dim(p, "body", a.dim(), mu.dim());
            const auto rg = range(p, ConcavityRange{-1.0, 1.0, 40});
            const auto cfg = verify_config(p, a.dim());
            return [=] { return check_B_property(mu, a, rg, cfg); };
        }
        if (kind == "check_functional_B") {
            const Density f = density_ref(p, "f"), g = density_ref(p, "g");
            require_dim(p, "g", g.dim(), f.dim());
            const auto rg = range(p, ConcavityRange{-1.0, 1.0, 40});
            const auto cfg = verify_config(p, f.dim());
            return [=] { return check_functional_B(f, g, rg, cfg); };
        }
        if (kind == "check_reparameterization") {
            const Density mu = density_ref(p, "density");
            const Body a = body_ref(p, "body");
            require_dim(p, "body", a.dim(), mu.dim());
            const auto ts = t_grid(p, "t");
            const auto cfg = verify_config(p, a.dim());
            return [=] { return check_reparameterization(mu, a, ts, cfg); };
        }
        if (kind == "uhrin_functional_check") {
            const Density f = density_ref(p, "f"), g = density_ref(p, "g");
            require_dim(p, "g", g.dim(), f.dim());
            const ExtReal alpha = p.ext("alpha");
            const PVector pv = p.exts("p");
            require_dim(p, "p", static_cast<int>(pv.size()), f.dim());
            const Weight l = weight(p, "lambda", 0.5);
            const int n = f.dim();
            const int res = p.integer("resolution", n == 1 ? 512 : n == 2 ? 64 : 16);
            if (res < 2) throw ConfigError(p.at("resolution"), "must be at least 2");
            const auto cfg = verify_config(p, n);
            return [=] { return uhrin_functional_check(f, g, alpha, pv, l, res, cfg); };
        }
        if (kind == "lift_to_uniform") {
            int dim = 0;
            const Potential v = potential(p, dim);
            const auto orders = p.ints("orders");
            const auto widths = p.nums("half_widths");
            require_dim(p, "half_widths", static_cast<int>(widths.size()), dim);
            const double bound = p.num("final_bound", 0.01);
            const auto cfg = verify_config(p, dim);
            return [=] { return lift_to_uniform(v, orders, widths, bound, cfg).report; };
        }
        if (kind == "certify_region") return build_certify(p);
        if (kind == "scan_log_bm") {
            LogBmScanConfig s;
            s.harmonics = p.integer("harmonics", s.harmonics);
            s.directions = p.integer("directions", s.directions);
            s.restarts = p.integer("restarts", s.restarts);
            s.budget = p.integer("budget", s.budget);
            s.coefficient_scale = p.num("coefficient_scale", s.coefficient_scale);
            s.unconditional_only = p.flag("unconditional_only", s.unconditional_only);
            s.lambdas = p.nums("lambdas", s.lambdas);
            s.rotation_steps = p.integer("rotation_steps", s.rotation_steps);
            const auto cfg = verify_config(p, 2);
            return [=] { return scan_log_bm(s, cfg).report; };
        }
        throw ConfigError(kind_where, "unknown check kind '" + kind + "'");
    }

    std::function<Report()> build_certify(Obj& p) {
        int dim = 0;
        const Potential v = potential(p, dim);
        const double gamma = p.num("gamma");
        Obj ro(p.raw("region"), p.at("region"));
        const std::string rk = ro.str("kind");
        Region region;
        if (rk == "ball") {
            const double radius = ro.num("radius");
            if (!(radius > 0.0)) throw ConfigError(ro.at("radius"), "must be positive");
            region = Region::ball(dim, radius);
        } else if (rk == "box") {
            const auto hw = ro.nums("half_widths");
            require_dim(ro, "half_widths", static_cast<int>(hw.size()), dim);
            region = guarded(ro.where(), [&] { return Region::box(hw); });
        } else {
            throw ConfigError(ro.at("kind"), "unknown region kind '" + rk + "'");
        }
        ro.done();
        p.out["region"] = ro.out;
        const std::string expect = p.str("expect", "certified");
        if (expect != "certified" && expect != "violation")
            throw ConfigError(p.at("expect"), "expected \"certified\" or \"violation\"");
        const json empty = json::object();
        const json* src = p.raw_opt("scan");
        Obj so(src ? *src : empty, p.at("scan"));
        ScanConfig sc;
        sc.grid_per_axis = so.integer("grid_per_axis", sc.grid_per_axis);
        sc.random_points = so.integer("random_points", sc.random_points);
        sc.boundary_points = so.integer("boundary_points", sc.boundary_points);
        sc.seed = so.u64("seed", sc.seed);
        sc.tolerance = so.num("tolerance", sc.tolerance);
        so.done();
        p.out["scan"] = so.out;
        const std::string inputs = json{{"check", "certify_region"}, {"params", p.out}}.dump();
        const bool want_certified = expect == "certified";
        return [=] {
            const auto cert = certify_region(v, gamma, region, sc);
            Report r;
            r.check = "certify_region";
            r.inputs = inputs;
            ReportPoint pt;
            pt.label = "max_eigenvalue";
            pt.kind = PointKind::Inequality;
            pt.tolerance = sc.tolerance;
            if (want_certified) {
                pt.lhs = 0.0;
                pt.rhs = cert.max_eigenvalue;
                pt.verdict = cert.verdict != CertVerdict::Certified ? Verdict::Fail
                             : cert.boundary_contact                ? Verdict::Boundary
                                                                    : Verdict::Pass;
            } else {
                pt.lhs = cert.max_eigenvalue;
                pt.rhs = 0.0;
                pt.verdict = cert.verdict == CertVerdict::Violated ? Verdict::Pass : Verdict::Fail;
            }
            pt.margin = pt.lhs - pt.rhs;
            r.points.push_back(pt);
            std::string witness;
            for (double c : cert.witness) witness += (witness.empty() ? "" : ",") + format_double(c);
            r.notes.push_back(std::string("certificate ") + to_string(cert.verdict) + ", max eigenvalue " +
                              format_double(cert.max_eigenvalue) + " at (" + witness + ") over " +
                              std::to_string(cert.points_scanned) + " points" +
                              (cert.boundary_contact ? ", boundary contact" : ""));
            finalize(r);
            return r;
        };
    }

    // -- curves --------------------------------------------------------------

    std::function<std::vector<CurvePoint>()> build_curve(Obj& c) {
        const std::string kind = c.str("kind");
        if (kind == "measure") {
            const Body a = body_ref(c, "body");
            const Density mu = density_ref(c, "density");
            require_dim(c, "density", mu.dim(), a.dim());
            const std::string tr = c.str("transform", "t");
            CurveTransform t;
            if (tr == "t") t.kind = CurveKind::DilateT;
            else if (tr == "t_pow") t.kind = CurveKind::DilateTPow;
            else if (tr == "exp_t") t.kind = CurveKind::DilateExpT;
            else throw ConfigError(c.at("transform"), "expected \"t\", \"t_pow\" or \"exp_t\"");
            t.p = c.num("p", 1.0);
            if (t.kind == CurveKind::DilateTPow && !(t.p > 0.0)) throw ConfigError(c.at("p"), "must be positive");
            const auto ts = t_grid(c, "t");
            MeasureConfig m = measure_config(c, a.dim());
            return [=] { return measure_curve(a, mu, t, ts, m); };
        }
        if (kind == "functional_B") {
            const Density f = density_ref(c, "f"), g = density_ref(c, "g");
            require_dim(c, "g", g.dim(), f.dim());
            const auto ts = t_grid(c, "t");
            MeasureConfig m = measure_config(c, f.dim());
            return [=] { return functional_B_curve(f, g, ts, m).points; };
        }
        throw ConfigError(c.at("kind"), "unknown curve kind '" + kind + "'");
    }

    MeasureConfig measure_config(Obj& c, int dim) {
        MeasureConfig m;
        m.resolution = c.integer("resolution", default_resolution(dim));
        m.mc_samples = c.u64("mc_samples", m.mc_samples);
        m.seed = c.u64("seed", m.seed);
        if (m.resolution < 2) throw ConfigError(c.at("resolution"), "must be at least 2");
        return m;
    }

    const json& root_;
    const json* bodies_src_ = nullptr;
    const json* densities_src_ = nullptr;
    std::map<std::string, Body> bodies_;
    std::map<std::string, Density> densities_;
    json bodies_out_ = json::object();
    json densities_out_ = json::object();
    std::set<std::string> visiting_;
    std::uint64_t seed_ = 1;
    double tolerance_factor_ = kToleranceFactor;
};

Report failed_report(const Job& job, const std::string& what) {
    Report r;
    r.check = "error";
    r.id = job.id;
    r.section = job.section;
    r.inputs = json{{"id", job.id}}.dump();
    r.verdict = Verdict::Fail;
    r.notes.push_back("error: " + what);
    r.digest = fnv1a_hex(r.inputs);
    return r;
}

}  // namespace

struct Scenario::Impl : Compiled {};

Scenario Scenario::parse(const std::string& text, std::optional<std::uint64_t> seed) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("", std::string("invalid JSON: ") + e.what());
    }
    auto impl = std::make_shared<Impl>();
    Builder builder(root);
    impl->doc = builder.build(*impl, seed);
    return Scenario(std::move(impl));
}

Scenario Scenario::load(const std::string& path, std::optional<std::uint64_t> seed) {
    std::ifstream in(path);
    if (!in) throw ConfigError("", "cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), seed);
}

std::string Scenario::dump() const { return impl_->doc.dump(2) + "\n"; }

std::size_t Scenario::check_count() const { return impl_->jobs.size(); }

std::vector<std::string> Scenario::curve_names() const {
    std::vector<std::string> out;
    for (const auto& [name, fn] : impl_->curves) out.push_back(name);
    return out;
}

std::string Scenario::output_dir() const { return impl_->output_dir; }

RunResult Scenario::run(const RunOptions& opts) const {
    const auto& jobs = impl_->jobs;
    RunResult result;
    result.reports.resize(jobs.size());
    std::vector<char> errored(jobs.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                Report r = jobs[i].run();
                r.id = jobs[i].id;
                r.section = jobs[i].section;
                result.reports[i] = std::move(r);
            } catch (const std::exception& e) {
                result.reports[i] = failed_report(jobs[i], e.what());
                errored[i] = 1;
            }
        }
    };
    const int k = std::max(1, std::min<int>(opts.jobs, static_cast<int>(jobs.size())));
    if (k == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < k; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (char e : errored) result.runtime_error = result.runtime_error || e;
    return result;
}

std::vector<CurvePoint> Scenario::curve(const std::string& name) const {
    auto it = impl_->curves.find(name);
    if (it == impl_->curves.end()) throw ConfigError("/curves", "unknown curve '" + name + "'");
    return it->second();
}

std::string curve_to_csv(const std::vector<CurvePoint>& points) {
    std::string out = "t,value,abs_error\n";
    for (const auto& p : points)
        out += format_double(p.t) + "," + format_double(p.estimate.value) + "," + format_double(p.estimate.abs_error) + "\n";
    return out;
}

int run_exit_status(const RunResult& result, bool strict) {
    if (result.runtime_error) return 1;
    for (const auto& r : result.reports) {
        if (!r.gating) continue;
        if (r.verdict == Verdict::Fail || (strict && r.verdict == Verdict::Boundary)) return 1;
    }
    return 0;
}

}  // namespace lpbm
