/**************************************************************************
 * Copyright 2026 The qdk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qdk.hpp"

namespace qdk::cli {

using json = nlohmann::ordered_json;

/// Malformed command-line input, reported as BadArguments with exit code 2.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] inline void bad_usage(const std::string& msg) { throw usage_error(msg); }

enum class status { ok, error };

struct CommandResult {
    status st = status::ok;
    json payload = json::object();
    std::optional<std::string> error_kind;
    int exit_code = 0;
    std::string schema;

    /// The single JSON document written to stdout.
    std::string render() const {
        json doc;
        doc["schema"] = schema;
        doc["status"] = st == status::ok ? "ok" : "error";
        if (st == status::ok)
            doc["payload"] = payload;
        else {
            doc["error_kind"] = *error_kind;
            doc["message"] = payload.value("message", "");
        }
        return doc.dump() + "\n";
    }
};

inline std::string to_string(const bigint& v) { return v.str(); }
inline std::string to_string(const rational& v) {
    return boost::multiprecision::denominator(v) == 1 ? boost::multiprecision::numerator(v).str()
                                                       : boost::multiprecision::numerator(v).str() + "/" +
                                                             boost::multiprecision::denominator(v).str();
}

inline json to_json(const DesignReport& r) {
    json j;
    j["t"] = r.t;
    j["lambda_min"] = std::to_string(r.lambda_min);
    j["lambda_max"] = std::to_string(r.lambda_max);
    j["lambda"] = r.lambda ? json(std::to_string(*r.lambda)) : json(nullptr);
    j["is_design"] = r.is_design;
    j["num_t_subspaces"] = std::to_string(r.num_t_subspaces);
    json h = json::object();
    for (auto [count, freq] : r.histogram) h[std::to_string(count)] = std::to_string(freq);
    j["histogram"] = h;
    j["num_blocks"] = std::to_string(r.num_blocks);
    return j;
}

inline json to_json(const CodeParams& p) {
    return {{"n", p.n}, {"k", p.k}, {"d", p.d}, {"mds", p.mds}, {"singleton_bound", p.n - p.k + 1}};
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

inline std::vector<std::uint64_t> parse_uint_list(const std::string& s) {
    std::vector<std::uint64_t> out;
    if (s.empty()) return out;
    for (const auto& part : split(s, ',')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            bad_usage("expected a comma-separated list of integers, got '" + s + "'");
        out.push_back(std::stoull(part));
    }
    return out;
}

inline std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad_usage("cannot open '" + path + "'");
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        out.push_back(line);
    }
    return out;
}

/// "singer:p,m,n" | "dihedral:q,m" | "trivial:q,n"
inline std::vector<GroupElement> builtin_generators(const std::string& name) {
    auto colon = name.find(':');
    std::string kind = name.substr(0, colon);
    auto args = colon == std::string::npos ? std::vector<std::uint64_t>{} : parse_uint_list(name.substr(colon + 1));
    if (kind == "singer" && args.size() == 3) return {singer_matrix(args[0], args[1], args[2])};
    if (kind == "dihedral" && args.size() == 2) return dihedral_generators(args[0], args[1]);
    if (kind == "trivial" && args.size() == 2) return {identity_element(field_of_order(args[0]), args[1])};
    bad_usage("unknown group '" + name + "' (use singer:p,m,n, dihedral:q,m or trivial:q,n)");
}

struct GroupOptions {
    std::string builtin;
    std::string file;
    std::uint64_t q = 0;
    std::size_t sympower = 0;

    void attach(CLI::App* app) {
        app->add_option("--group", builtin, "builtin group: singer:p,m,n | dihedral:q,m | trivial:q,n");
        app->add_option("--group-file", file, "file with one generator matrix per line");
        app->add_option("--q", q, "field order for --group-file");
        app->add_option("--sympower", sympower, "lift 2x2 generators through sym_power_rep of this degree");
    }

    std::vector<GroupElement> generators() const {
        std::vector<GroupElement> gens;
        if (!builtin.empty() == !file.empty()) bad_usage("give exactly one of --group, --group-file");
        if (!builtin.empty())
            gens = builtin_generators(builtin);
        else {
            if (q == 0) bad_usage("--group-file needs --q");
            FieldSpec f = field_of_order(q);
            for (const auto& line : read_lines(file)) gens.push_back(parse_matrix(f, line));
            if (gens.empty()) bad_usage("group file has no matrices");
        }
        if (sympower > 0)
            for (auto& g : gens) g = sym_power_rep(g, sympower);
        return gens;
    }
};

struct BlockOptions {
    std::string blocks;
    std::string blocks_file;
    std::size_t n = 0, k = 0;
    std::uint64_t q = 0;

    void attach(CLI::App* app) {
        app->add_option("--blocks", blocks, "'all' for the complete Grassmannian");
        app->add_option("--blocks-file", blocks_file, "file with one subspace per line");
        app->add_option("--n", n, "ambient dimension")->required();
        app->add_option("--k", k, "block dimension")->required();
        app->add_option("--q", q, "field order")->required();
    }

    DesignCandidate candidate() const {
        FieldSpec f = field_of_order(q);
        std::vector<Subspace> list;
        if (blocks == "all" && blocks_file.empty())
            list = all_subspaces(f, n, k);
        else if (blocks.empty() && !blocks_file.empty())
            for (const auto& line : read_lines(blocks_file)) list.push_back(parse_subspace(f, n, line));
        else
            bad_usage("give --blocks all or --blocks-file PATH");
        return make_candidate(f, n, k, std::move(list));
    }
};

inline json subspace_list(const std::vector<Subspace>& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(s.str());
    return out;
}

}  // namespace detail

/// Parses argv (without the program name), runs one subcommand and returns
/// its result. Never throws.
inline CommandResult run(const std::vector<std::string>& argv) {
    CommandResult res;
    CLI::App app{"qdk: finite-field designs, subspaces and codes", "qdk"};
    app.require_subcommand(1);
    unsigned threads = 1;
    app.add_option("--threads", threads, "worker budget (does not change results)");

    std::function<json()> action;
    std::string schema;
    auto bind = [&](CLI::App* cmd, std::string name, std::function<json()> fn) {
        cmd->callback([&, name = std::move(name), fn = std::move(fn)] {
            schema = "qdk." + name + ".v1";
            action = fn;
        });
    };

    // field
    auto* field = app.add_subcommand("field", "finite fields GF(p^m)")->require_subcommand(1);
    std::uint64_t fp = 0, fm = 1, fsub = 1, ffrob = 1;
    std::string felem;
    auto* field_create_cmd = field->add_subcommand("create", "canonical modulus and primitive element");
    field_create_cmd->add_option("--p", fp)->required();
    field_create_cmd->add_option("--m", fm);
    bind(field_create_cmd, "field.create", [&] {
        FieldSpec f = field_create(fp, fm);
        Poly mod(field_create(fp, 1), std::vector<elem_t>(f->modulus().begin(), f->modulus().end()));
        return json{{"p", f->p()}, {"m", f->m()}, {"q", f->q()}, {"modulus", mod.str()},
                    {"primitive", f->render(f->primitive())},
                    {"primitive_order", std::to_string(element_order(primitive_element(f)))}};
    });
    auto* field_inspect = field->add_subcommand("inspect", "order, inverse, Frobenius and minimal polynomial");
    field_inspect->add_option("--p", fp)->required();
    field_inspect->add_option("--m", fm);
    field_inspect->add_option("--element", felem, "coordinates c0,c1,...")->required();
    field_inspect->add_option("--subfield", fsub, "degree of the subfield for the minimal polynomial");
    field_inspect->add_option("--frobenius", ffrob, "Frobenius power");
    bind(field_inspect, "field.inspect", [&] {
        FieldSpec f = field_create(fp, fm);
        FieldElement a{f, f->parse(felem)};
        json j{{"element", a.str()}};
        j["order"] = a.is_zero() ? json(nullptr) : json(std::to_string(element_order(a)));
        j["inverse"] = a.is_zero() ? json(nullptr) : json(fe_inv(a).str());
        j["frobenius"] = frobenius(a, ffrob).str();
        j["minimal_polynomial"] = minimal_polynomial(a, static_cast<std::uint32_t>(fsub)).str();
        return j;
    });

    // poly
    auto* poly = app.add_subcommand("poly", "polynomials over GF(q)")->require_subcommand(1);
    std::uint64_t pn = 0, pq = 0;
    auto* cosets = poly->add_subcommand("cosets", "cyclotomic cosets of Z_n under multiplication by q");
    cosets->add_option("--n", pn)->required();
    cosets->add_option("--q", pq)->required();
    bind(cosets, "poly.cosets", [&] {
        auto part = cyclotomic_cosets(pn, pq);
        return json{{"n", pn}, {"q", pq}, {"cosets", part.cosets}};
    });
    auto* factor = poly->add_subcommand("factor-xn1", "irreducible factors of x^n - 1");
    factor->add_option("--n", pn)->required();
    factor->add_option("--q", pq)->required();
    bind(factor, "poly.factor-xn1", [&] {
        json fs = json::array();
        for (const auto& g : factor_xn_minus_1(pn, field_of_order(pq))) fs.push_back(g.str());
        return json{{"n", pn}, {"q", pq}, {"factors", fs}};
    });
    auto* split = poly->add_subcommand("count-split", "split-polynomial formula against brute force");
    split->add_option("--n", pn)->required();
    split->add_option("--q", pq)->required();
    bind(split, "poly.count-split", [&] {
        rational formula = count_split_polys_formula(pn, static_cast<std::int64_t>(pq));
        return json{{"n", pn},
                    {"q", pq},
                    {"formula", to_string(formula)},
                    {"formula_is_integer", boost::multiprecision::denominator(formula) == 1},
                    {"binomial", to_string(binomial(static_cast<std::int64_t>(pq), static_cast<std::int64_t>(pn)))},
                    {"monic_distinct_roots", to_string(brute_count_split_polys(pn, pq, split_mode::monic_distinct_roots))},
                    {"affine_orbits", to_string(brute_count_split_polys(pn, pq, split_mode::affine_orbits))}};
    });

    // gaussian, grassmann
    std::int64_t gn = 0, gk = 0, gq = 0;
    auto* gauss = app.add_subcommand("gaussian", "Gaussian binomial [n,k]_q");
    gauss->add_option("--n", gn)->required();
    gauss->add_option("--k", gk)->required();
    gauss->add_option("--q", gq)->required();
    bind(gauss, "gaussian", [&] {
        prime_power(static_cast<std::uint64_t>(gq));
        return json{{"value", to_string(gaussian_binomial(gn, gk, gq))}};
    });
    auto* grass = app.add_subcommand("grassmann", "Grassmannian enumeration")->require_subcommand(1);
    auto* grass_enum = grass->add_subcommand("enumerate", "list every k-subspace of F_q^n in RREF");
    grass_enum->add_option("--n", gn)->required();
    grass_enum->add_option("--k", gk)->required();
    grass_enum->add_option("--q", gq)->required();
    bind(grass_enum, "grassmann.enumerate", [&] {
        if (gn < 0 || gk < 0) bad_usage("dimensions must be nonnegative");
        auto all = all_subspaces(field_of_order(static_cast<std::uint64_t>(gq)), static_cast<std::size_t>(gn),
                                 static_cast<std::size_t>(gk));
        return json{{"n", gn}, {"k", gk}, {"q", gq}, {"count", std::to_string(all.size())},
                    {"subspaces", detail::subspace_list(all)}};
    });

    // group
    auto* group = app.add_subcommand("group", "matrix groups acting on Grassmannians")->require_subcommand(1);
    detail::GroupOptions gopt;
    std::uint64_t sp = 0, sm = 1, sn = 0, sq = 0;
    std::size_t sdeg = 0, gk_dim = 0;
    std::string smatrix, ssub;
    auto* closure = group->add_subcommand("closure", "enumerate the generated group");
    gopt.attach(closure);
    bind(closure, "group.closure", [&] {
        auto g = group_closure(gopt.generators());
        json gens = json::array(), elems = json::array();
        for (const auto& x : g.generators) gens.push_back(x.str());
        for (const auto& x : *g.elements) elems.push_back(x.str());
        return json{{"n", g.n}, {"q", g.spec->q()}, {"order", g.order()}, {"generators", gens}, {"elements", elems}};
    });
    auto* singer = group->add_subcommand("singer", "Singer matrix of GF(q^n)/GF(q), q = p^m");
    singer->add_option("--p", sp)->required();
    singer->add_option("--m", sm);
    singer->add_option("--n", sn)->required();
    bind(singer, "group.singer", [&] {
        auto s = singer_matrix(sp, sm, sn);
        return json{{"matrix", s.str()}, {"order", std::to_string(element_order(s))}};
    });
    auto* sympower = group->add_subcommand("sympower", "symmetric-power (Veronese) lift of a 2x2 matrix");
    sympower->add_option("--q", sq)->required();
    sympower->add_option("--matrix", smatrix, "rows ';'-separated, entries space-separated")->required();
    sympower->add_option("--deg", sdeg)->required();
    bind(sympower, "group.sympower", [&] {
        auto g = parse_matrix(field_of_order(sq), smatrix);
        return json{{"deg", sdeg}, {"matrix", sym_power_rep(g, sdeg).str()}};
    });
    auto* orbit_cmd = group->add_subcommand("orbit", "orbit of a subspace");
    detail::GroupOptions gopt_orbit;
    gopt_orbit.attach(orbit_cmd);
    orbit_cmd->add_option("--subspace", ssub, "rows ';'-separated")->required();
    bind(orbit_cmd, "group.orbit", [&] {
        auto g = group_closure(gopt_orbit.generators());
        auto u = parse_subspace(g.spec, g.n, ssub);
        auto o = orbit(u, g);
        return json{{"subspace", u.str()}, {"group_order", g.order()}, {"orbit_size", o.size()},
                    {"orbit", detail::subspace_list(o)}};
    });
    auto* invariant = group->add_subcommand("invariant", "k-subspaces fixed by every generator");
    detail::GroupOptions gopt_inv;
    gopt_inv.attach(invariant);
    invariant->add_option("--k", gk_dim)->required();
    bind(invariant, "group.invariant", [&] {
        auto g = make_group(gopt_inv.generators());
        auto inv = invariant_subspaces(g, gk_dim);
        return json{{"n", g.n}, {"k", gk_dim}, {"count", inv.size()}, {"subspaces", detail::subspace_list(inv)}};
    });

    // design
    auto* design = app.add_subcommand("design", "q-ary t-designs")->require_subcommand(1);
    detail::BlockOptions bopt;
    std::size_t dt = 0, dr = 0, ds = 0, dm = 0, dk = 0;
    std::uint64_t dp = 0, dbase = 1;
    std::optional<std::size_t> dt_opt;
    auto* verify = design->add_subcommand("verify", "containment counts at strength t");
    bopt.attach(verify);
    verify->add_option("--t", dt)->required();
    bind(verify, "design.verify", [&] { return to_json(verify_design(bopt.candidate(), dt)); });
    auto* profile = design->add_subcommand("profile", "design reports for t = 0..k");
    detail::BlockOptions bopt_profile;
    bopt_profile.attach(profile);
    bind(profile, "design.profile", [&] {
        json list = json::array();
        for (const auto& r : lambda_profile(bopt_profile.candidate())) list.push_back(to_json(r));
        return json{{"profile", list}};
    });
    auto* splitting = design->add_subcommand("splitting", "alpha-splitting subspaces of GF(q^(rs))");
    splitting->add_option("--p", dp)->required();
    splitting->add_option("--m", dbase, "base field degree, q = p^m");
    splitting->add_option("--r", dr)->required();
    splitting->add_option("--s", ds)->required();
    splitting->add_option("--t", dt_opt, "also test the blocks as a t-design");
    bind(splitting, "design.splitting", [&] {
        auto setup = splitting_setup(dp, dbase, dr, ds);
        auto wits = splitting_subspaces(setup);
        auto cnt = count_splitting(setup);
        auto conj = splitting_subspaces(splitting_setup(dp, dbase, dr, ds, setup.spec->q())).size();
        json w = json::array();
        for (const auto& x : wits) w.push_back({{"w", x.w.str()}, {"translates", detail::subspace_list(x.translates)}});
        json j{{"q", setup.spec->q()},
               {"r", dr},
               {"s", ds},
               {"operator", setup.powers.size() > 1 ? setup.powers[1].str() : singer_matrix(dp, dbase, dr * ds).str()},
               {"S", std::to_string(cnt.S)},
               {"N", std::to_string(cnt.N)},
               {"gl_order", to_string(cnt.gl_order)},
               {"quotient_check", cnt.quotient_check},
               {"S_conjugate", std::to_string(conj)},
               {"witnesses", w}};
        j["report"] = dt_opt ? to_json(verify_design(splitting_candidate(setup), *dt_opt)) : json(nullptr);
        return j;
    });
    auto* pg = design->add_subcommand("pg-lines", "points and lines of PG(m-1, 2)");
    pg->add_option("--m", dm)->required();
    bind(pg, "design.pg-lines", [&] {
        auto r = pg_lines_design(dm);
        return json{{"m", dm}, {"v", r.v}, {"b", r.b}, {"pair_min", r.pair_min}, {"pair_max", r.pair_max},
                    {"is_steiner", r.is_steiner}};
    });
    auto* triangle = design->add_subcommand("triangle", "design test on a group's invariant subgrassmannian");
    detail::GroupOptions gopt_tri;
    gopt_tri.attach(triangle);
    triangle->add_option("--k", dk)->required();
    triangle->add_option("--t", dt)->required();
    bind(triangle, "design.triangle", [&] {
        auto g = group_closure(gopt_tri.generators());
        return json{{"n", g.n}, {"group_order", g.order()}, {"report", to_json(triangle_invariant_design(g, dk, dt))}};
    });

    // code
    auto* code = app.add_subcommand("code", "cyclic and Reed-Solomon codes")->require_subcommand(1);
    std::uint64_t cn = 0, cq = 0;
    std::size_t ck = 0, clen = 0, cdeg = 0, cr = 0;
    std::string croots, cmatrix;
    bool cmin = false;
    auto cyclic_fn = [&] {
        auto c = cyclic_code_from_roots(cn, cq, detail::parse_uint_list(croots));
        json j{{"n", c.n}, {"k", c.k}};
        if (cmin) {
            auto params = min_distance(code_to_linear(c));
            j["d"] = params.d;
            j["mds"] = params.mds;
            j["claimed_d"] = c.n - c.k + 1;
            j["claim_met"] = params.mds;
        } else {
            j["d"] = nullptr;
            j["mds"] = nullptr;
        }
        j["generator_poly"] = c.gen_poly.str();
        j["check_poly"] = c.check_poly().str();
        j["root_exponents"] = c.root_exponents;
        j["generator_matrix"] = code_to_linear(c).rows.str();
        return j;
    };
    auto add_cyclic_options = [&](CLI::App* cmd) {
        cmd->add_option("--n", cn)->required();
        cmd->add_option("--q", cq)->required();
        cmd->add_option("--roots", croots, "root exponents J, comma-separated")->required();
        cmd->add_flag("--min-distance", cmin, "compute d by exhaustive enumeration");
    };
    auto* cyclic = code->add_subcommand("cyclic", "cyclic code from a root set");
    add_cyclic_options(cyclic);
    bind(cyclic, "code.cyclic", cyclic_fn);
    auto* cyclic_top = app.add_subcommand("cyclic", "alias of 'code cyclic'");
    add_cyclic_options(cyclic_top);
    bind(cyclic_top, "code.cyclic", cyclic_fn);
    auto* rs = code->add_subcommand("rs", "Reed-Solomon code on the normal rational curve");
    rs->add_option("--q", cq)->required();
    rs->add_option("--k", ck)->required();
    rs->add_option("--len", clen)->required();
    rs->add_flag("--min-distance", cmin);
    bind(rs, "code.rs", [&] {
        auto c = rs_code(cq, ck, clen);
        json j{{"n", c.n()}, {"k", c.k()}, {"generator_matrix", c.rows.str()}};
        if (cmin) {
            auto params = min_distance(c);
            j["d"] = params.d;
            j["mds"] = params.mds;
        }
        return j;
    });
    auto* md = code->add_subcommand("min-distance", "exhaustive minimum distance of a generator matrix");
    md->add_option("--q", cq)->required();
    md->add_option("--n", cn)->required();
    md->add_option("--matrix", cmatrix, "rows ';'-separated")->required();
    bind(md, "code.min-distance", [&] {
        LinearCode c{parse_subspace(field_of_order(cq), cn, cmatrix)};
        return to_json(min_distance(c));
    });
    auto* arc = code->add_subcommand("arc", "(k;r)-arc test on the normal rational curve");
    arc->add_option("--deg", cdeg)->required();
    arc->add_option("--q", cq)->required();
    arc->add_option("--r", cr)->required();
    bind(arc, "code.arc", [&] {
        auto pts = nrc_points(cdeg, cq);
        return json{{"deg", cdeg}, {"q", cq}, {"r", cr}, {"points", detail::subspace_list(pts)},
                    {"is_arc", arc_check(pts, cr)}};
    });
    auto* ccount = code->add_subcommand("count-cyclic", "cyclic-code count: divisor oracle and the (q)_k/(q^2-q) values");
    ccount->add_option("--n", cn)->required();
    ccount->add_option("--q", cq)->required();
    bind(ccount, "code.count-cyclic", [&] {
        auto c = count_cyclic_codes(cn, cq);
        json fv = json::array();
        for (const auto& v : c.formula_values) fv.push_back(to_string(v));
        return json{{"n", cn}, {"q", cq}, {"oracle", std::to_string(c.oracle)}, {"num_cosets", c.num_cosets},
                    {"formula_values", fv}};
    });

    auto fail = [&](int code_, std::string kind, std::string message) {
        res.st = status::error;
        res.exit_code = code_;
        res.error_kind = std::move(kind);
        res.schema = "qdk.error.v1";
        res.payload = json{{"message", std::move(message)}};
        return res;
    };

    // Unknown subcommand names are reported separately from bad flags.
    {
        CLI::App* node = &app;
        for (std::size_t i = 0; i < argv.size(); ++i) {
            const std::string& tok = argv[i];
            if (tok == "--help" || tok == "-h") break;
            if (tok.rfind("-", 0) == 0) {
                if (tok.find('=') == std::string::npos) ++i;  // option value
                continue;
            }
            auto children = node->get_subcommands([](CLI::App*) { return true; });
            if (children.empty()) break;
            auto it = std::find_if(children.begin(), children.end(), [&](CLI::App* c) { return c->get_name() == tok; });
            if (it == children.end()) return fail(2, "UnknownCommand", "unknown command '" + tok + "'");
            node = *it;
        }
    }

    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        res.schema = "qdk.help.v1";
        res.payload = json{{"help", app.help()}};
        return res;
    } catch (const CLI::RequiredError& e) {
        bool no_command = argv.empty() || argv.front().rfind("--", 0) == 0;
        return fail(2, no_command ? "UnknownCommand" : "BadArguments", e.what());
    } catch (const CLI::ExtrasError& e) {
        return fail(2, app.get_subcommands().empty() ? "UnknownCommand" : "BadArguments", e.what());
    } catch (const CLI::Error& e) {
        return fail(2, "BadArguments", e.what());
    } catch (const qdk::error& e) {
        return fail(2, "BadArguments", e.what());
    }
    if (!action) return fail(2, "UnknownCommand", "no subcommand given");

    try {
        set_thread_budget(threads);
        res.payload = action();
        res.schema = schema;
        res.exit_code = 0;
        return res;
    } catch (const qdk::error& e) {
        return fail(1, std::string(qdk::to_string(e.kind())), e.what());
    } catch (const usage_error& e) {
        return fail(2, "BadArguments", e.what());
    } catch (const std::exception& e) {
        return fail(1, "Internal", e.what());
    }
}

}  // namespace qdk::cli
