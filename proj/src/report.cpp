#include "moorex/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "moorex/geronimus.hpp"
#include "moorex/moore.hpp"
#include "moorex/spectral.hpp"
#include "report_detail.hpp"

namespace moorex {

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

void render_node(const Json& j, std::string& out, int indent);

std::string scalar_text(const Json& j) {
    if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
    if (j.is_number_float()) return format_double(j.get<double>());
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    if (j.is_number_unsigned()) return std::to_string(j.get<unsigned long long>());
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "~";
    return j.dump();
}

void render_object(const Json& j, std::string& out, int indent) {
    const std::string pad(2 * indent, ' ');
    for (const auto& [key, value] : j.items()) {
        if (value.is_object() || value.is_array()) {
            if (value.empty()) {
                out += pad + key + ": " + (value.is_object() ? "{}" : "[]") + "\n";
            } else {
                out += pad + key + ":\n";
                render_node(value, out, indent + 1);
            }
        } else {
            out += pad + key + ": " + scalar_text(value) + "\n";
        }
    }
}

void render_array(const Json& j, std::string& out, int indent) {
    const std::string pad(2 * indent, ' ');
    for (const auto& item : j) {
        if (item.is_object() && !item.empty()) {
            std::string nested;
            render_object(item, nested, indent + 1);
            // First line carries the dash.
            nested[2 * indent] = '-';
            out += nested;
        } else if (item.is_array() && !item.empty()) {
            out += pad + "-\n";
            render_node(item, out, indent + 1);
        } else {
            out += pad + "- " + scalar_text(item) + "\n";
        }
    }
}

void render_node(const Json& j, std::string& out, int indent) {
    if (j.is_object()) {
        render_object(j, out, indent);
    } else if (j.is_array()) {
        render_array(j, out, indent);
    } else {
        out += std::string(2 * indent, ' ') + scalar_text(j) + "\n";
    }
}

}  // namespace

std::string render_text(const Json& j) {
    std::string out;
    render_node(j, out, 0);
    return out;
}

std::string render_report(const Json& j, const std::string& format) {
    if (format == "text") return render_text(j);
    if (format == "structured") return j.dump(2) + "\n";
    throw std::invalid_argument("unknown format '" + format +
                                "' (expected text or structured)");
}

namespace detail {

Json json_big(const BigInt& v) {
    static const BigInt lim = BigInt(1) << 53;
    if (v >= -lim && v <= lim) return Json(v.convert_to<long long>());
    return Json(v.str());
}

void put_rational(Json& j, const std::string& key, const Rational& r) {
    j[key] = to_double(r);
    j[key + "_exact"] = to_string(r);
}

Json bound_entry_json(const BoundEntry& e) {
    Json b;
    b["id"] = e.id;
    b["target"] = e.target;
    b["kind"] = e.kind;
    b["applicability"] = e.applicability;
    b["applicable"] = e.applicable;
    if (!e.reason.empty()) b["reason"] = e.reason;
    if (e.has_value) {
        b["value"] = e.value;
        if (e.exact) b["value_exact"] = to_string(e.exact_value);
    }
    return b;
}

// Lower bounds compare against the measured rational exactly when both sides
// are exact; square-root bounds get a 1e-9 slack for floating-point noise.
Json check_lower_bound(const BoundEntry& e, const Rational& measured) {
    Json c;
    c["measured"] = to_double(measured);
    c["measured_exact"] = to_string(measured);
    bool ok;
    if (e.exact) {
        ok = measured >= e.exact_value;
        c["margin"] = to_double(measured - e.exact_value);
    } else {
        ok = to_double(measured) >= e.value - 1e-9;
        c["margin"] = to_double(measured) - e.value;
    }
    c["status"] = ok ? "pass" : "fail";
    return c;
}

Json check_upper_bound(const BoundEntry& e, double measured) {
    Json c;
    c["measured"] = measured;
    c["margin"] = e.value - measured;
    c["status"] = measured <= e.value + 1e-9 ? "pass" : "fail";
    return c;
}

}  // namespace detail

using detail::json_big;
using detail::put_rational;

Json analyze_report(const Graph& g, const AnalyzeOptions& opts) {
    Json j;
    std::vector<std::string> warnings;
    const int n = g.vertex_count();

    j["graph"]["n"] = n;
    j["graph"]["m"] = g.edge_count();
    j["graph"]["directed"] = g.is_directed();

    const auto prof = degree_profile(g);
    {
        Json p;
        p["min_degree"] = prof.min_out;
        p["max_degree"] = prof.max_out;
        if (g.is_directed()) {
            p["min_in_degree"] = prof.min_in;
            p["max_in_degree"] = prof.max_in;
        }
        p["regular"] = prof.is_regular;
        if (prof.degree) p["degree"] = *prof.degree;
        j["degree_profile"] = std::move(p);
    }

    const auto diam = diameter(g);
    j["diameter"]["strongly_connected"] = diam.strongly_connected;
    if (diam.diameter) {
        j["diameter"]["value"] = *diam.diameter;
    } else {
        j["diameter"]["value"] = "infinite";
        warnings.push_back("infinite diameter: Moore profile and bounds inapplicable");
    }

    // Working degree for the Moore profile and the bound calculators.
    int d = 0;
    std::string d_source;
    if (opts.force_d) {
        d = *opts.force_d;
        d_source = "forced";
        warnings.push_back("degree forced to " + std::to_string(d));
    } else if (prof.is_regular) {
        d = *prof.degree;
        d_source = "measured";
    } else {
        d = std::max(prof.max_out, prof.max_in);
        d_source = "idealized_max_degree";
        warnings.push_back("regularity idealized: bounds use d = max degree = " +
                           std::to_string(d));
    }

    const int min_d = g.is_directed() ? 1 : 2;
    std::optional<MooreProfile> mp;
    if (diam.diameter && *diam.diameter >= 1 && d >= min_d) {
        mp = moore_profile(d, *diam.diameter, g.is_directed(), BigInt(n));
        Json m;
        m["d"] = d;
        m["d_source"] = d_source;
        m["k"] = *diam.diameter;
        m["regime"] = g.is_directed() ? "directed" : "undirected";
        m["mu"] = json_big(mp->mu);
        m["n"] = n;
        m["additive_gap"] = json_big(*mp->additive_gap);
        put_rational(m, "alpha", *mp->alpha);
        put_rational(m, "epsilon", *mp->epsilon);
        j["moore"] = std::move(m);

        const auto regime = regime_report(*mp);
        Json r;
        r["additive_gap"] = json_big(regime.additive_gap);
        r["d_pow_half_k"] = regime.d_pow_half_k;
        put_rational(r, "epsilon", regime.epsilon);
        r["eps_scale"] = regime.eps_scale;
        r["note"] = regime.note;
        j["regime"] = std::move(r);

        if (*mp->additive_gap < 0) {
            warnings.push_back("n exceeds the Moore bound for the assumed degree");
        }
    } else {
        std::string why = !diam.diameter ? "infinite diameter"
                          : (*diam.diameter < 1 ? "diameter 0" : "degree below regime");
        j["moore"]["skipped"] = why;
    }

    std::optional<SpectralReport> sp;
    if (!g.is_directed()) {
        if (n <= 2000) {
            sp = spectrum(g);
            Json s;
            if (sp->lambda_g) {
                s["lambda_g"] = *sp->lambda_g;
                s["spectral_gap"] = *sp->spectral_gap;
            } else {
                s["lambda_g"] = "undefined";
            }
            s["solver_residual"] = sp->solver_residual;
            const double contract = 1e-9 * (prof.max_out + 1);
            s["residual_ok"] = sp->solver_residual < contract;
            if (sp->solver_residual >= contract) {
                warnings.push_back("eigensolver residual exceeds contract");
            }
            Json groups = Json::array();
            for (const auto& [val, mult] : group_eigenvalues(sp->eigenvalues)) {
                Json grp;
                grp["value"] = val;
                grp["multiplicity"] = mult;
                groups.push_back(std::move(grp));
            }
            s["eigenvalue_groups"] = std::move(groups);
            j["spectral"] = std::move(s);
        } else {
            j["spectral"]["skipped"] = "n exceeds the dense eigensolver regime (2000)";
        }
    } else {
        j["spectral"]["skipped"] = "spectral analysis is undirected-only";
    }

    std::optional<ExpansionMeasurement> em;
    if (n >= 2 && n <= opts.exact_cap && n <= 62) {
        if (opts.exact_cap > kDefaultSubsetCap) {
            warnings.push_back("subset cap raised above the default; enumeration cost grows as 2^n");
        }
        em = exact_expansion(g, opts.exact_cap);
        Json e;
        put_rational(e, "h_e", em->h_e);
        e["h_e_witness"] = em->h_e_witness;
        put_rational(e, "phi_V", em->phi_v);
        e["phi_V_witness"] = em->phi_v_witness;
        e["method"] = "exhaustive";
        e["subset_cap"] = em->subset_cap;
        j["expansion"] = std::move(e);
    } else {
        j["expansion"]["skipped"] =
            n < 2 ? "n < 2: no admissible subset"
                  : "n exceeds --exact-cap " + std::to_string(opts.exact_cap);
    }

    if (mp) {
        std::optional<double> lambda2;
        if (sp && n >= 2) lambda2 = sp->eigenvalues[1];
        Json entries = Json::array();
        for (const auto& e :
             bound_table(d, mp->k, Rational(BigInt(n)), g.is_directed(), lambda2)) {
            Json be = detail::bound_entry_json(e);
            if (e.applicable && e.has_value) {
                if (e.target == "h_e" && em) {
                    be["check"] = detail::check_lower_bound(e, em->h_e);
                } else if (e.target == "phi_V" && em) {
                    be["check"] = detail::check_lower_bound(e, em->phi_v);
                } else if (e.target == "lambda" && sp && sp->lambda_g) {
                    be["check"] = detail::check_upper_bound(e, *sp->lambda_g);
                } else {
                    be["check"]["status"] = "not-checked";
                }
            }
            entries.push_back(std::move(be));
        }
        j["bounds"]["entries"] = std::move(entries);
        j["bounds"]["idealized"] = d_source != "measured";
    } else {
        j["bounds"]["skipped"] = "no Moore profile";
    }

    if (!g.is_directed() && prof.is_regular && d >= 2 && diam.diameter &&
        *diam.diameter >= 1 && sp) {
        const auto rep = eigenvalue_bound_check(g, sp->eigenvalues, opts.tol);
        Json ev;
        ev["rhs"] = rep.rhs;
        ev["tol"] = rep.tol;
        ev["all_pass"] = rep.all_pass;
        Json entries = Json::array();
        for (const auto& e : rep.entries) {
            Json ee;
            ee["lambda"] = e.lambda;
            ee["lhs"] = e.lhs;
            ee["slack"] = e.slack;
            ee["pass"] = e.pass;
            if (!e.note.empty()) ee["note"] = e.note;
            entries.push_back(std::move(ee));
        }
        ev["entries"] = std::move(entries);
        j["eigenvalue_bound"] = std::move(ev);
    } else {
        j["eigenvalue_bound"]["skipped"] =
            "requires an undirected regular graph with finite diameter";
    }

    j["warnings"] = warnings;
    return j;
}

Json bounds_report(int d, int k, const BigInt& n, bool directed) {
    if (d < 1 || k < 1 || n < 1) {
        throw std::invalid_argument("bounds require d >= 1, k >= 1, n >= 1");
    }
    Json j;
    j["inputs"]["d"] = d;
    j["inputs"]["k"] = k;
    j["inputs"]["n"] = json_big(n);
    j["inputs"]["regime"] = directed ? "directed" : "undirected";
    const BigInt mu = directed
                          ? directed_moore_bound(d, k)
                          : (d >= 2 ? moore_bound(d, k) : BigInt(0));
    if (d >= 2 || directed) {
        j["inputs"]["mu"] = json_big(mu);
        if (mu > 0) put_rational(j["inputs"], "alpha", Rational(n, mu));
    }
    Json entries = Json::array();
    for (const auto& e : bound_table(d, k, Rational(n), directed)) {
        entries.push_back(detail::bound_entry_json(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

}  // namespace moorex
