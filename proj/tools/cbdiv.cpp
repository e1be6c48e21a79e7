/*
  cbdiv: exact computations for conformal blocks divisors on the moduli
  of stable pointed rational curves.

  Subcommands: rank, coinv, degree, fcurve, class, levels, nonvanishing,
  decompose, scale, hassett-compare, reproduce.  Output is JSON (default)
  or plain text.  Exit codes: 0 success, 1 failed verification checks,
  2 invalid input, 3 internal consistency failure.

  Large integers and all rationals are serialized as decimal strings to
  keep downstream JSON consumers exact.
*/

#include "cbdiv/criteria.hpp"
#include "cbdiv/hassett.hpp"
#include "cbdiv/parse.hpp"
#include "cbdiv/reproduce.hpp"
#include "cbdiv/verlinde.hpp"
#include "cbdiv/table_cache.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

namespace {

using nlohmann::json;
using namespace cbdiv;

json json_int(const Int& v) {
    if (v >= Int(std::numeric_limits<std::int64_t>::min()) &&
        v <= Int(std::numeric_limits<std::int64_t>::max()))
        return static_cast<std::int64_t>(v);
    return v.str();
}

json json_rat(const Rat& v) { return v.str(); }

std::string sizes_key(const FCurve& curve) {
    auto s = curve.block_sizes();
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (i) out += ',';
        out += std::to_string(s[static_cast<std::size_t>(i)]);
    }
    return out;
}

json curve_key(const FCurve& curve, bool reduced) {
    return reduced ? sizes_key(curve) : curve.str();
}

json certificate_json(const Certificate& cert) {
    json out;
    switch (cert.verdict) {
        case Verdict::Zero: out["verdict"] = "zero"; break;
        case Verdict::NonZero: out["verdict"] = "nonzero"; break;
        case Verdict::Unknown: out["verdict"] = "unknown"; break;
    }
    if (cert.rule) out["rule"] = rule_name(*cert.rule);
    if (cert.critical) out["critical_level"] = json_int(*cert.critical);
    if (cert.theta) out["theta_level"] = json_rat(*cert.theta);
    if (cert.delta) out["delta"] = json_int(*cert.delta);
    if (!cert.row_choices.empty()) {
        json rows = json::array();
        for (auto [a, b] : cert.row_choices) rows.push_back(json::array({a, b}));
        out["rows"] = rows;
    }
    auto tuple_json = [](const WeightTuple& t) {
        json arr = json::array();
        for (const auto& w : t.weights) arr.push_back(w.str());
        return arr;
    };
    if (cert.aux_sl2) out["aux_sl2"] = tuple_json(*cert.aux_sl2);
    if (cert.aux_rest) out["aux_rest"] = tuple_json(*cert.aux_rest);
    if (cert.aux_sl2_rank) out["aux_sl2_rank"] = json_int(*cert.aux_sl2_rank);
    if (cert.aux_rest_rank) out["aux_rest_rank"] = json_int(*cert.aux_rest_rank);
    if (cert.scale_factor) out["factor"] = *cert.scale_factor;
    if (cert.rank) out["rank"] = json_int(*cert.rank);
    return out;
}

void emit(const json& out, bool as_json) {
    if (as_json) {
        std::cout << out.dump(2) << "\n";
        return;
    }
    // plain text: flat key/value lines
    std::function<void(const std::string&, const json&)> walk = [&](const std::string& prefix,
                                                                    const json& node) {
        if (node.is_object()) {
            for (auto it = node.begin(); it != node.end(); ++it)
                walk(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value());
        } else if (node.is_array()) {
            std::cout << prefix << ":";
            for (const auto& item : node) std::cout << " " << item.dump();
            std::cout << "\n";
        } else {
            std::cout << prefix << " = " << (node.is_string() ? node.get<std::string>() : node.dump())
                      << "\n";
        }
    };
    walk("", out);
}

struct CommonArgs {
    std::string algebra;
    int level = 0;
    std::string weights;
    std::string format = "json";
    int threads = 0;

    BundleSpec spec() const {
        int k = parse_algebra(algebra);
        if (level < 1) throw validation_error("a positive --level is required");
        BundleSpec s = make_spec(k, level, parse_weight_tuple(weights, k).weights);
        attach_disk_cache(fusion_table(s.algebra));
        return s;
    }
    bool json_out() const { return format != "text"; }
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_level = true) {
    cmd->add_option("--algebra", args.algebra, "algebra, e.g. sl4")->required();
    if (with_level) cmd->add_option("--level", args.level, "level")->required();
    cmd->add_option("--weights", args.weights, "weight tuple, e.g. \"[1,1,0,0]^6\" or \"w2^6\"")
        ->required();
    cmd->add_option("--format", args.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--threads", args.threads, "worker threads (0 = all cores)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact conformal blocks divisor calculator"};
    app.require_subcommand(1);

    CommonArgs rank_args;
    std::string backend = "kac-walton";
    auto* rank_cmd = app.add_subcommand("rank", "rank of a conformal blocks bundle");
    add_common(rank_cmd, rank_args);
    rank_cmd->add_option("--backend", backend, "kac-walton, verlinde, quantum, or all")
        ->check(CLI::IsMember({"kac-walton", "verlinde", "quantum", "all"}));

    CommonArgs coinv_args;
    auto* coinv_cmd = app.add_subcommand("coinv", "dimension of the classical coinvariants");
    add_common(coinv_cmd, coinv_args, false);

    CommonArgs degree_args;
    auto* degree_cmd = app.add_subcommand("degree", "degree of a four-point bundle");
    add_common(degree_cmd, degree_args);

    CommonArgs fcurve_args;
    std::string blocks;
    auto* fcurve_cmd = app.add_subcommand("fcurve", "intersection with one F-curve");
    add_common(fcurve_cmd, fcurve_args);
    fcurve_cmd->add_option("--blocks", blocks, "four blocks, e.g. \"1|2|3|4,5,6\"")->required();

    CommonArgs class_args;
    bool class_full = false;
    auto* class_cmd = app.add_subcommand("class", "full intersection vector and boundary class");
    add_common(class_cmd, class_args);
    class_cmd->add_flag("--full", class_full, "list every F-curve instead of size classes");

    CommonArgs levels_args;
    auto* levels_cmd = app.add_subcommand("levels", "critical and theta levels of a tuple");
    add_common(levels_cmd, levels_args, false);

    CommonArgs nonvan_args;
    bool search_aux = false, direct = false;
    long budget = 100000;
    auto* nonvan_cmd = app.add_subcommand("nonvanishing", "vanishing/nonvanishing certificate");
    add_common(nonvan_cmd, nonvan_args);
    nonvan_cmd->add_flag("--search-aux", search_aux, "search over auxiliary row choices");
    nonvan_cmd->add_option("--budget", budget, "row-choice search budget");
    nonvan_cmd->add_flag("--direct", direct, "fall back to the direct F-curve probe");

    std::string dec_algebra, dec_mu, dec_nu, dec_format = "json";
    int dec_mu_level = 0, dec_nu_level = 0, dec_threads = 0;
    auto* dec_cmd = app.add_subcommand("decompose", "additive decomposition check");
    dec_cmd->add_option("--algebra", dec_algebra)->required();
    dec_cmd->add_option("--mu", dec_mu, "first summand weights")->required();
    dec_cmd->add_option("--mu-level", dec_mu_level)->required();
    dec_cmd->add_option("--nu", dec_nu, "second summand weights")->required();
    dec_cmd->add_option("--nu-level", dec_nu_level)->required();
    dec_cmd->add_option("--format", dec_format)->check(CLI::IsMember({"json", "text"}));
    dec_cmd->add_option("--threads", dec_threads);

    CommonArgs scale_args;
    int scale_factor = 1;
    auto* scale_cmd = app.add_subcommand("scale", "scaling identity for a rank-one bundle");
    add_common(scale_cmd, scale_args);
    scale_cmd->add_option("--factor", scale_factor, "scale factor N")->required();

    CommonArgs hass_args;
    std::string hass_weights;
    auto* hass_cmd = app.add_subcommand("hassett-compare",
                                        "contracted curves of the divisor vs a weighted reduction");
    add_common(hass_cmd, hass_args);
    hass_cmd->add_option("--hassett", hass_weights, "weights, e.g. \"3/7^6\"")->required();

    std::string rep_filter, rep_format = "text";
    auto* rep_cmd = app.add_subcommand("reproduce", "run the verification suite");
    rep_cmd->add_option("--filter", rep_filter, "only checks whose name contains this");
    rep_cmd->add_option("--format", rep_format)->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*rank_cmd) {
            BundleSpec spec = rank_args.spec();
            json out;
            if (backend == "all") {
                Int a = fusion_rank(spec), b = rank_verlinde(spec), c = rank_quantum(spec);
                if (a != b || a != c)
                    throw consistency_error("rank backends disagree: " + a.str() + ", " + b.str() +
                                            ", " + c.str());
                out["rank"] = json_int(a);
                out["backends"] = {{"kac-walton", json_int(a)},
                                   {"verlinde", json_int(b)},
                                   {"quantum", json_int(c)}};
            } else {
                Int v = backend == "verlinde"  ? rank_verlinde(spec)
                        : backend == "quantum" ? rank_quantum(spec)
                                               : fusion_rank(spec);
                out["rank"] = json_int(v);
                out["backend"] = backend;
            }
            emit(out, rank_args.json_out());
        } else if (*coinv_cmd) {
            int k = parse_algebra(coinv_args.algebra);
            WeightTuple tuple = parse_weight_tuple(coinv_args.weights, k);
            emit({{"coinvariant_dim", json_int(coinvariant_dim(tuple))}}, coinv_args.json_out());
        } else if (*degree_cmd) {
            BundleSpec spec = degree_args.spec();
            emit({{"degree", json_int(degree_on_m04(spec))}}, degree_args.json_out());
        } else if (*fcurve_cmd) {
            BundleSpec spec = fcurve_args.spec();
            FCurve curve = parse_fcurve(blocks, spec.n());
            emit({{"blocks", curve.str()},
                  {"intersection", json_int(fcurve_intersection(spec, curve))}},
                 fcurve_args.json_out());
        } else if (*class_cmd) {
            BundleSpec spec = class_args.spec();
            DivisorClass vec = intersection_vector(spec, !class_full, class_args.threads);
            json fc = json::object();
            for (const auto& [curve, value] : vec.entries)
                fc[curve_key(curve, vec.reduced).get<std::string>()] = json_int(value);
            json out{{"n", spec.n()}, {"reduced", vec.reduced}, {"fcurves", fc},
                     {"zero", vec.is_zero()}};
            if (all_equal_weights(spec.weights)) {
                json sb = json::object();
                for (const auto& [j, b] : symmetric_class(spec, class_args.threads))
                    sb[std::to_string(j)] = json_rat(b);
                out["symmetric_B"] = sb;
            }
            emit(out, class_args.json_out());
        } else if (*levels_cmd) {
            int k = parse_algebra(levels_args.algebra);
            WeightTuple tuple = parse_weight_tuple(levels_args.weights, k);
            auto crit = critical_level(k, tuple);
            json out{{"theta", json_rat(theta_level(tuple))}};
            out["critical"] = crit ? json_int(*crit) : json(nullptr);
            emit(out, levels_args.json_out());
        } else if (*nonvan_cmd) {
            BundleSpec spec = nonvan_args.spec();
            CertificateOptions opts;
            opts.search_aux = search_aux;
            opts.search_budget = budget;
            opts.allow_direct = direct;
            opts.threads = nonvan_args.threads;
            emit(certificate_json(nonvanishing_certificate(spec, opts)), nonvan_args.json_out());
        } else if (*dec_cmd) {
            int k = parse_algebra(dec_algebra);
            BundleSpec mu = make_spec(k, dec_mu_level, parse_weight_tuple(dec_mu, k).weights);
            BundleSpec nu = make_spec(k, dec_nu_level, parse_weight_tuple(dec_nu, k).weights);
            attach_disk_cache(fusion_table(mu.algebra));
            attach_disk_cache(fusion_table(nu.algebra));
            Certificate cert = additive_check(mu, nu, dec_threads);
            json out = certificate_json(cert);
            out["hypotheses_hold"] = cert.rule.has_value();
            emit(out, dec_format != "text");
        } else if (*scale_cmd) {
            BundleSpec spec = scale_args.spec();
            emit(certificate_json(scaling_check(spec, scale_factor, scale_args.threads)),
                 scale_args.json_out());
        } else if (*hass_cmd) {
            BundleSpec spec = hass_args.spec();
            HassettWeights hw(parse_rational_list(hass_weights));
            auto cmp = compare_contractions(spec, hw, hass_args.threads);
            bool reduced = all_equal_weights(spec.weights) && hw.symmetric();
            auto names = [&](const std::vector<FCurve>& curves) {
                json arr = json::array();
                for (const auto& c : curves) arr.push_back(curve_key(c, reduced));
                return arr;
            };
            emit({{"both", names(cmp.both)},
                  {"divisor_only", names(cmp.divisor_only)},
                  {"hassett_only", names(cmp.hassett_only)},
                  {"identical", cmp.identical()}},
                 hass_args.json_out());
        } else if (*rep_cmd) {
            if (rep_format == "json") {
                json arr = json::array();
                int failures = 0;
                for (const auto& check : verification_checks()) {
                    if (!rep_filter.empty() && check.name.find(rep_filter) == std::string::npos)
                        continue;
                    CheckResult r;
                    try {
                        r = check.run();
                    } catch (const std::exception& e) {
                        r.pass = false;
                        r.detail = std::string("exception: ") + e.what();
                    }
                    arr.push_back({{"name", check.name}, {"pass", r.pass}, {"detail", r.detail}});
                    if (!r.pass) ++failures;
                }
                std::cout << json{{"results", arr}, {"failures", failures}}.dump(2) << "\n";
                return failures == 0 ? 0 : 1;
            }
            int failures = run_verification(std::cout, rep_filter, false);
            return failures == 0 ? 0 : 1;
        }
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const consistency_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const precision_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
