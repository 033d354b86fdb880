#pragma once

#include <cstddef>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frob/bernstein.hpp"
#include "frob/errors.hpp"
#include "frob/fermionic.hpp"
#include "frob/frobenius_euler.hpp"
#include "frob/harness/claims.hpp"
#include "frob/harness/grid.hpp"
#include "frob/harness/report.hpp"
#include "frob/poly_parser.hpp"
#include "frob/rational.hpp"

namespace frob::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kComputation = 2, kRefuted = 3 };

/// Bad command-line input: maps to exit code 1.
class UsageError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline Rational rational_arg(const std::string& flag, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const Error& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

inline Poly poly_arg(const std::string& text) {
    try {
        return parse_poly(text);
    } catch (const Error& e) {
        throw UsageError(std::string("--poly: ") + e.what());
    }
}

inline std::vector<long> tuple_arg(const std::string& flag, const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long v = std::stol(item, &used);
            if (used != item.size() || v < 0) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError(flag + ": bad integer list '" + text + "'");
        }
    }
    if (out.empty()) throw UsageError(flag + ": empty list");
    return out;
}

inline harness::Grid load_grid(const std::string& spec) {
    try {
        harness::Grid grid;
        if (spec == "default") {
            grid = harness::default_grid();
        } else {
            std::ifstream in(spec);
            if (!in) throw UsageError("cannot read grid file '" + spec + "'");
            const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
            grid = harness::Grid::parse(text);
        }
        grid.validate();
        return grid;
    } catch (const UsageError&) {
        throw;
    } catch (const Error& e) {
        throw UsageError("grid '" + spec + "': " + e.what());
    }
}

inline std::vector<harness::Claim> select_claims(const std::string& list) {
    auto catalog = harness::claim_catalog();
    if (list == "all") return catalog;
    std::set<std::string> wanted;
    std::stringstream ss(list);
    std::string id;
    while (std::getline(ss, id, ',')) {
        if (!id.empty()) wanted.insert(id);
    }
    std::vector<harness::Claim> out;
    for (auto& c : catalog) {
        if (wanted.erase(c.id) > 0) out.push_back(std::move(c));
    }
    if (!wanted.empty()) throw UsageError("unknown claim id '" + *wanted.begin() + "'");
    if (out.empty()) throw UsageError("no claims selected");
    return out;
}

}  // namespace detail

/// Runs the command line; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Frobenius-Euler, Bernstein and fermionic p-adic integral toolkit", "frob"};
    app.require_subcommand(1);

    // fe-numbers
    std::string fe_u;
    std::size_t max_n = 0;
    std::string fe_format = "plain";
    bool cross_check = false;
    auto* fe_numbers = app.add_subcommand("fe-numbers", "Frobenius-Euler numbers H_0(u) .. H_N(u)");
    fe_numbers->add_option("--u", fe_u, "parameter u (p/q)")->required();
    fe_numbers->add_option("--max-n", max_n, "largest index")->required();
    fe_numbers->add_option("--format", fe_format)->check(CLI::IsMember({"plain", "json", "csv"}));
    fe_numbers->add_flag("--cross-check", cross_check, "recompute from the generating function and compare");

    // fe-poly
    std::string poly_u;
    std::size_t poly_n = 0;
    std::string poly_format = "plain";
    auto* fe_poly = app.add_subcommand("fe-poly", "coefficients of H_n(u, x)");
    fe_poly->add_option("--u", poly_u)->required();
    fe_poly->add_option("--n", poly_n)->required();
    fe_poly->add_option("--format", poly_format)->check(CLI::IsMember({"plain", "json"}));

    // bernstein
    unsigned long b_k = 0, b_n = 0;
    std::optional<std::string> b_eval;
    auto* bern = app.add_subcommand("bernstein", "Bernstein basis polynomial B_{k,n}");
    bern->add_option("--k", b_k)->required();
    bern->add_option("--n", b_n)->required();
    bern->add_option("--eval", b_eval, "evaluate at this rational");

    // integrate
    unsigned long i_p = 0;
    std::string i_u, i_poly;
    unsigned long i_precision = 8;
    bool i_exact = false;
    auto* integrate = app.add_subcommand("integrate", "fermionic p-adic integral of u^x * poly(x)");
    integrate->add_option("--p", i_p, "odd prime")->required();
    integrate->add_option("--u", i_u)->required();
    integrate->add_option("--poly", i_poly, "polynomial expression in x")->required();
    integrate->add_option("--precision", i_precision, "residue precision M (mod p^M)");
    integrate->add_flag("--exact", i_exact, "exact rational value from Frobenius-Euler numbers");

    // verify
    std::string v_claims = "all";
    std::optional<std::string> v_claim;
    std::string v_grid = "default";
    std::optional<std::string> v_report;
    std::string v_format = "json";
    bool fail_on_refuted = false;
    std::optional<long> r_n, r_k, r_s, r_p, r_precision, r_level;
    std::optional<std::string> r_u, r_x, r_ni;
    auto* verify = app.add_subcommand("verify", "sweep identities over a parameter grid");
    verify->add_option("--claims", v_claims, "comma-separated claim ids or 'all'");
    verify->add_option("--claim", v_claim, "replay a single claim instance given by the parameter flags");
    verify->add_option("--grid", v_grid, "grid file or 'default'");
    verify->add_option("--report", v_report, "write the report here instead of standard output");
    verify->add_option("--format", v_format)->check(CLI::IsMember({"json", "markdown"}));
    verify->add_flag("--fail-on-refuted", fail_on_refuted, "exit 3 when any instance is refuted");
    verify->add_option("--n", r_n);
    verify->add_option("--k", r_k);
    verify->add_option("--s", r_s);
    verify->add_option("--p", r_p);
    verify->add_option("--precision", r_precision);
    verify->add_option("--level", r_level);
    verify->add_option("--u", r_u);
    verify->add_option("--x", r_x);
    verify->add_option("--ni", r_ni, "comma-separated degrees n_1,...,n_s");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (fe_numbers->parsed()) {
            const Rational u = detail::rational_arg("--u", fe_u);
            FEContext ctx(u);
            std::vector<Rational> values;
            for (std::size_t n = 0; n <= max_n; ++n) values.push_back(ctx.number(n));
            if (cross_check) {
                const auto series = numbers_from_generating_function(u, max_n + 8);
                for (std::size_t n = 0; n <= max_n; ++n) {
                    if (series[n] != values[n]) {
                        err << "error: cross-check mismatch at n=" << n << ": recurrence " << values[n] << ", series "
                            << series[n] << "\n";
                        return kComputation;
                    }
                }
            }
            if (fe_format == "csv") {
                for (std::size_t n = 0; n <= max_n; ++n) out << n << "," << values[n] << "\n";
            } else if (fe_format == "json") {
                nlohmann::ordered_json j;
                j["u"] = u.to_string();
                j["values"] = nlohmann::ordered_json::array();
                for (const auto& v : values) j["values"].push_back(v.to_string());
                if (cross_check) j["cross_check"] = "agree";
                out << j.dump() << "\n";
            } else {
                for (std::size_t n = 0; n <= max_n; ++n) out << "H_" << n << "(" << u << ") = " << values[n] << "\n";
                if (cross_check) out << "cross-check: generating function agrees\n";
            }
            return kOk;
        }

        if (fe_poly->parsed()) {
            const Rational u = detail::rational_arg("--u", poly_u);
            FEContext ctx(u);
            const Poly p = ctx.polynomial(poly_n);
            if (poly_format == "json") {
                nlohmann::ordered_json j;
                j["u"] = u.to_string();
                j["n"] = poly_n;
                j["coefficients"] = nlohmann::ordered_json::array();
                for (const auto& c : p.coefficients()) j["coefficients"].push_back(c.to_string());
                out << j.dump() << "\n";
            } else {
                out << p << "\n";
            }
            return kOk;
        }

        if (bern->parsed()) {
            const BernsteinIndex idx{b_k, b_n};
            if (b_eval) {
                out << bernstein_eval(idx, detail::rational_arg("--eval", *b_eval)) << "\n";
            } else {
                out << bernstein_poly(idx) << "\n";
            }
            return kOk;
        }

        if (integrate->parsed()) {
            const IntegrandSpec spec{detail::rational_arg("--u", i_u), detail::poly_arg(i_poly)};
            if (i_exact) {
                out << integral_exact_via_fe(spec) << "\n";
            } else {
                out << fermionic_integral(spec, i_p, i_precision) << "\n";
            }
            return kOk;
        }

        if (verify->parsed()) {
            harness::Report report;
            if (v_claim) {
                const auto claims = detail::select_claims(*v_claim);
                const auto& claim = claims.front();
                std::vector<std::pair<std::string, harness::ParamValue>> params;
                for (const auto& name : claim.parameters) {
                    auto need = [&](const auto& opt) {
                        if (!opt) throw UsageError("claim " + claim.id + " needs --" + name);
                        return *opt;
                    };
                    if (name == "u" || name == "x") {
                        params.emplace_back(name, detail::rational_arg("--" + name, need(name == "u" ? r_u : r_x)));
                    } else if (name == "ni") {
                        params.emplace_back(name, detail::tuple_arg("--ni", need(r_ni)));
                    } else {
                        const std::optional<long>& v = name == "n"           ? r_n
                                                        : name == "k"         ? r_k
                                                        : name == "s"         ? r_s
                                                        : name == "p"         ? r_p
                                                        : name == "precision" ? r_precision
                                                                              : r_level;
                        if (need(v) < 0) throw UsageError("--" + name + " must be non-negative");
                        params.emplace_back(name, need(v));
                    }
                }
                harness::Instance inst(std::move(params));
                if (inst.has("s") && static_cast<std::size_t>(inst.integer("s")) != inst.tuple("ni").size()) {
                    throw UsageError("--s must equal the number of --ni entries");
                }
                nlohmann::ordered_json grid = nlohmann::ordered_json::object();
                for (const auto& [k, v] : inst.params()) grid[k] = harness::detail::to_json(v);
                report.grid = grid;
                report.results.push_back(harness::run_claim(claim, inst));
                harness::finalize(report, {claim.id});
            } else {
                const auto claims = detail::select_claims(v_claims);
                const harness::Grid grid = detail::load_grid(v_grid);
                report = harness::sweep(claims, grid);
            }
            const std::string text = harness::render(report, v_format);
            if (v_report) {
                std::ofstream file(*v_report, std::ios::binary);
                if (!file) throw UsageError("cannot write report to '" + *v_report + "'");
                file << text;
                if (!file) throw UsageError("failed writing report to '" + *v_report + "'");
            } else {
                out << text;
            }
            if (fail_on_refuted) {
                for (const auto& r : report.results) {
                    if (r.status == harness::Status::Refuted) return kRefuted;
                }
            }
            return kOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kComputation;
    }
    return kUsage;
}

}  // namespace frob::cli
