#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "frob/bernstein.hpp"
#include "frob/binomial.hpp"
#include "frob/errors.hpp"
#include "frob/fermionic.hpp"
#include "frob/frobenius_euler.hpp"
#include "frob/harness/grid.hpp"
#include "frob/padic.hpp"
#include "frob/poly.hpp"
#include "frob/rational.hpp"

namespace frob::harness {

/// One parameter value: an integer, a rational, or an integer tuple (n_1..n_s).
using ParamValue = std::variant<long, Rational, std::vector<long>>;

/// A point in a claim's parameter domain. Parameters keep the claim's
/// declared order, so instances of one claim compare lexicographically.
class Instance {
public:
    Instance() = default;
    explicit Instance(std::vector<std::pair<std::string, ParamValue>> params) : params_(std::move(params)) {}

    const std::vector<std::pair<std::string, ParamValue>>& params() const { return params_; }

    bool has(const std::string& name) const { return find(name) != nullptr; }

    long integer(const std::string& name) const { return std::get<long>(at(name)); }
    const Rational& rational(const std::string& name) const { return std::get<Rational>(at(name)); }
    const std::vector<long>& tuple(const std::string& name) const { return std::get<std::vector<long>>(at(name)); }

    friend bool operator==(const Instance& a, const Instance& b) { return a.params_ == b.params_; }
    friend bool operator<(const Instance& a, const Instance& b) {
        const std::size_t n = std::min(a.params_.size(), b.params_.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (a.params_[i].second < b.params_[i].second) return true;
            if (b.params_[i].second < a.params_[i].second) return false;
        }
        return a.params_.size() < b.params_.size();
    }

private:
    const ParamValue* find(const std::string& name) const {
        for (const auto& [key, value] : params_) {
            if (key == name) return &value;
        }
        return nullptr;
    }
    const ParamValue& at(const std::string& name) const {
        const ParamValue* v = find(name);
        if (v == nullptr) throw InvalidParameter("missing parameter '" + name + "'");
        return *v;
    }

    std::vector<std::pair<std::string, ParamValue>> params_;
};

/// Side of a claim: an exact rational, or a residue for the p-adic claim.
using Value = std::variant<Rational, PadicInt>;

inline std::string to_string(const Value& v) {
    return std::visit([](const auto& x) { return x.to_string(); }, v);
}

/// Per-sweep state shared by evaluators: one memoized FEContext per parameter.
class Workspace {
public:
    FEContext& fe(const Rational& u) {
        auto it = contexts_.find(u);
        if (it == contexts_.end()) it = contexts_.emplace(u, FEContext(u)).first;
        return it->second;
    }

    /// H_n(w) and H_n(w, x), parameter w taken literally.
    const Rational& H(const Rational& w, long n) { return fe(w).number(static_cast<std::size_t>(n)); }
    Rational H(const Rational& w, long n, const Rational& x) { return fe(w).evaluate(static_cast<std::size_t>(n), x); }

    /// Exact integral of u^xi * poly(xi) through the monomial values.
    Rational integral(const Rational& u, const Poly& poly) {
        return integral_exact_via_fe(IntegrandSpec{u, poly}, fe(-reciprocal(u)));
    }

private:
    std::map<Rational, FEContext> contexts_;
};

using Evaluator = std::function<Value(const Instance&, Workspace&)>;
using Enumerator = std::function<std::vector<Instance>(const Grid&)>;
using Annotator = std::function<std::optional<std::string>(const Instance&)>;

struct Claim {
    std::string id;
    std::string description;
    std::vector<std::string> parameters;
    Enumerator enumerate;
    /// Parameter exclusion; a reason here makes the instance SKIPPED.
    Annotator exclusion;
    /// Which displayed branch of a two-branch statement applies, if any.
    Annotator branch;
    Evaluator lhs;
    Evaluator rhs;
};

namespace detail {

using Axis = std::pair<std::string, std::vector<ParamValue>>;

inline std::vector<ParamValue> as_values(const std::vector<long>& v) { return {v.begin(), v.end()}; }
inline std::vector<ParamValue> as_values(const std::vector<Rational>& v) { return {v.begin(), v.end()}; }

/// Cartesian product of the axes, keeping instances that satisfy `keep`.
inline std::vector<Instance> product(const std::vector<Axis>& axes,
                                     const std::function<bool(const Instance&)>& keep = {}) {
    std::vector<Instance> out;
    for (const auto& axis : axes) {
        if (axis.second.empty()) return out;
    }
    std::vector<std::size_t> idx(axes.size(), 0);
    while (true) {
        std::vector<std::pair<std::string, ParamValue>> params;
        params.reserve(axes.size());
        for (std::size_t a = 0; a < axes.size(); ++a) params.emplace_back(axes[a].first, axes[a].second[idx[a]]);
        Instance inst(std::move(params));
        if (!keep || keep(inst)) out.push_back(std::move(inst));
        std::size_t a = axes.size();
        while (a > 0) {
            --a;
            if (++idx[a] < axes[a].second.size()) break;
            idx[a] = 0;
            if (a == 0) return out;
        }
        if (axes.empty()) return out;
    }
}

/// All s-tuples over `values` (ordered = every tuple; otherwise nondecreasing only).
inline std::vector<ParamValue> tuples(const std::vector<long>& values, long s, bool ordered) {
    std::vector<ParamValue> out;
    if (values.empty() || s <= 0) return out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(s), 0);
    while (true) {
        std::vector<long> t;
        for (std::size_t i : idx) t.push_back(values[i]);
        out.emplace_back(std::move(t));
        std::size_t a = idx.size();
        bool done = true;
        while (a > 0) {
            --a;
            if (++idx[a] < values.size()) {
                if (!ordered) {
                    for (std::size_t b = a + 1; b < idx.size(); ++b) idx[b] = idx[a];
                }
                done = false;
                break;
            }
            idx[a] = 0;
        }
        if (done) return out;
    }
}

inline std::optional<std::string> excluded_inverse(const Instance& in) {
    const Rational& u = in.rational("u");
    if (u.is_zero() || u == Rational(-1)) return "u in {0, -1} makes -1/u undefined or equal to 1";
    return std::nullopt;
}

inline std::optional<std::string> excluded_one(const Instance& in) {
    if (in.rational("u") == Rational(1)) return "u = 1 is outside the Frobenius-Euler domain";
    return std::nullopt;
}

inline Rational binom(long n, long k) {
    if (n < 0 || k < 0) return 0;
    return Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
}

inline Rational v_of(const Rational& u) { return -reciprocal(u); }

/// 2/(u+1) + 2/(u^2+u) + 2/(u^3+u) H_m(-1/u), the one-minus-xi integral in the direct parameter.
inline Rational direct_one_minus_integral(Workspace& ws, const Rational& u, long m) {
    const Rational two(2);
    return two / (u + 1) + two / (u * u + u) + two / (u * u * u + u) * ws.H(v_of(u), m);
}

/// sum_{l=0}^{top} C(top,l) (-1)^l H_{base+l}(-1/u)
inline Rational alternating_fe_sum(Workspace& ws, const Rational& u, long base, long top) {
    Rational acc;
    const Rational v = v_of(u);
    for (long l = 0; l <= top; ++l) acc += binom(top, l) * sign_power(static_cast<unsigned long>(l)) * ws.H(v, base + l);
    return acc;
}

/// Two-branch right side shared by the product closed forms: k = 0 gives term(total),
/// otherwise scale * sum_{l=0}^{jk} C(jk,l)(-1)^{jk+l} term(total - l).
inline Rational branched(long k, long jk, long total, const Rational& scale, const std::function<Rational(long)>& term) {
    if (k == 0) return term(total);
    Rational acc;
    for (long l = 0; l <= jk; ++l) acc += binom(jk, l) * sign_power(static_cast<unsigned long>(jk + l)) * term(total - l);
    return scale * acc;
}

inline Poly product_integrand(const std::vector<long>& ns, long k) {
    std::vector<BernsteinIndex> idx;
    for (long n : ns) idx.push_back({static_cast<unsigned long>(k), static_cast<unsigned long>(n)});
    return bernstein_product(idx);
}

inline Rational product_of_binomials(const std::vector<long>& ns, long k) {
    Rational acc = 1;
    for (long n : ns) acc *= binom(n, k);
    return acc;
}

inline long sum_of(const std::vector<long>& ns) { return std::accumulate(ns.begin(), ns.end(), 0L); }

inline std::optional<std::string> k_branch(const Instance& in) {
    return in.integer("k") == 0 ? std::string("k=0") : std::string("k>0");
}

inline std::vector<Instance> enumerate_products(const Grid& g, bool fixed_pair) {
    std::vector<Instance> out;
    std::vector<long> sizes = fixed_pair ? std::vector<long>{2} : g.ints("s");
    for (long s : sizes) {
        if (s < 2) continue;
        std::vector<Axis> axes;
        if (!fixed_pair) axes.push_back({"s", {ParamValue(s)}});
        axes.push_back({"ni", tuples(g.ints("ni"), s, fixed_pair)});
        axes.push_back({"k", as_values(g.ints("k"))});
        axes.push_back({"u", as_values(g.rats("u"))});
        auto chunk = product(axes, [](const Instance& in) {
            const auto& ns = in.tuple("ni");
            const long k = in.integer("k");
            for (long n : ns) {
                if (k > n) return false;
            }
            return sum_of(ns) > static_cast<long>(ns.size()) * k;
        });
        out.insert(out.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
    }
    return out;
}

}  // namespace detail

/// Every identity checked by the harness, in id order.
inline std::vector<Claim> claim_catalog() {
    using detail::as_values;
    using detail::binom;
    using detail::v_of;
    std::vector<Claim> claims;

    auto n_u = [](bool from_one) {
        return [from_one](const Grid& g) {
            return detail::product({{"n", as_values(g.ints("n"))}, {"u", as_values(g.rats("u"))}},
                                   [from_one](const Instance& in) { return !from_one || in.integer("n") >= 1; });
        };
    };
    auto n_u_x = [](const Grid& g) {
        return detail::product(
            {{"n", as_values(g.ints("n"))}, {"u", as_values(g.rats("u"))}, {"x", as_values(g.rats("x"))}});
    };
    auto one_minus_lhs = [](const Instance& in, Workspace& ws) -> Value {
        const long n = in.integer("n");
        return ws.integral(in.rational("u"), binomial_power(1, -1, static_cast<unsigned long>(n)));
    };
    auto fold_lhs = [](const Instance& in, Workspace& ws) -> Value {
        return ws.integral(in.rational("u"), detail::product_integrand(in.tuple("ni"), in.integer("k")));
    };
    // sum_{l=0}^{sum n_i - sk} C(sum(n_i - k), l) (-1)^l H_{sk+l}(-1/u)
    auto fold_sum = [](const Instance& in, Workspace& ws) {
        const auto& ns = in.tuple("ni");
        const long sk = static_cast<long>(ns.size()) * in.integer("k");
        return detail::alternating_fe_sum(ws, in.rational("u"), sk, detail::sum_of(ns) - sk);
    };
    auto fold_direct_rhs = [](const Instance& in, Workspace& ws) -> Value {
        const auto& ns = in.tuple("ni");
        const long k = in.integer("k");
        const Rational& u = in.rational("u");
        return detail::branched(k, static_cast<long>(ns.size()) * k, detail::sum_of(ns),
                                detail::product_of_binomials(ns, k),
                                [&](long m) { return detail::direct_one_minus_integral(ws, u, m); });
    };
    auto fold_expansion_rhs = [fold_sum](const Instance& in, Workspace& ws) -> Value {
        const Rational& u = in.rational("u");
        return Rational(2) / (u + 1) * detail::product_of_binomials(in.tuple("ni"), in.integer("k")) * fold_sum(in, ws);
    };
    // 1 + u^{-1} + u^{-2} H_m(-1/u)
    auto reduced_form = [](Workspace& ws, const Rational& u, long m) {
        return Rational(1) + reciprocal(u) + reciprocal(u * u) * ws.H(v_of(u), m);
    };

    claims.push_back(Claim{
        "C-BSYM",
        "Bernstein symmetry B_{k,n}(x) = B_{n-k,n}(1-x)",
        {"n", "k", "x"},
        [](const Grid& g) {
            return detail::product(
                {{"n", as_values(g.ints("n"))}, {"k", as_values(g.ints("k"))}, {"x", as_values(g.rats("x"))}},
                [](const Instance& in) { return in.integer("k") <= in.integer("n"); });
        },
        {},
        {},
        [](const Instance& in, Workspace&) -> Value {
            const auto n = static_cast<unsigned long>(in.integer("n"));
            const auto k = static_cast<unsigned long>(in.integer("k"));
            return bernstein_eval({k, n}, in.rational("x"));
        },
        [](const Instance& in, Workspace&) -> Value {
            const auto n = static_cast<unsigned long>(in.integer("n"));
            const auto k = static_cast<unsigned long>(in.integer("k"));
            return bernstein_eval({n - k, n}, Rational(1) - in.rational("x"));
        },
    });

    claims.push_back(Claim{
        "C-SHIFT",
        "Shift identity at finite level: S_N(f_1) + S_N(f) = f(0) + f(p^N) for f = u^xi xi^n",
        {"n", "u", "p", "level"},
        [](const Grid& g) {
            return detail::product({{"n", as_values(g.ints("n"))},
                                    {"u", as_values(g.rats("u"))},
                                    {"p", as_values(g.ints("p"))},
                                    {"level", as_values(g.ints("level"))}});
        },
        [](const Instance& in) -> std::optional<std::string> {
            if (in.rational("u").is_zero()) return "u = 0";
            if (!is_odd_prime(static_cast<unsigned long>(in.integer("p")))) return "p is not an odd prime";
            return std::nullopt;
        },
        {},
        [](const Instance& in, Workspace&) -> Value {
            const IntegrandSpec f{in.rational("u"), Poly::monomial(1, static_cast<std::size_t>(in.integer("n")))};
            const IntegrandSpec f1{f.u, f.u * compose_affine(f.poly, 1, 1)};
            const auto p = static_cast<unsigned long>(in.integer("p"));
            const auto level = static_cast<unsigned long>(in.integer("level"));
            return fermionic_partial_sum(f1, p, level) + fermionic_partial_sum(f, p, level);
        },
        [](const Instance& in, Workspace&) -> Value {
            const IntegrandSpec f{in.rational("u"), Poly::monomial(1, static_cast<std::size_t>(in.integer("n")))};
            const auto p = static_cast<unsigned long>(in.integer("p"));
            const Rational top(prime_power(p, static_cast<unsigned long>(in.integer("level"))));
            return f(Rational(0)) + f(top);
        },
    });

    claims.push_back(Claim{
        "C1",
        "Umbral recurrence: (H(u)+1)^n - u H_n(u) = 1-u if n = 0, else 0",
        {"n", "u"},
        n_u(false),
        detail::excluded_one,
        {},
        [](const Instance& in, Workspace& ws) -> Value {
            const long n = in.integer("n");
            const Rational& u = in.rational("u");
            Rational acc;
            for (long k = 0; k <= n; ++k) acc += binom(n, k) * ws.H(u, k);
            return acc - u * ws.H(u, n);
        },
        [](const Instance& in, Workspace&) -> Value {
            return in.integer("n") == 0 ? Rational(1) - in.rational("u") : Rational(0);
        },
    });

    claims.push_back(Claim{
        "C10a",
        "Two-factor expansion: integral of B_{k,n1} B_{k,n2} u^xi = 2/(u+1) C(n1,k) C(n2,k) "
        "sum_l C(n1+n2-2k,l)(-1)^l H_{2k+l}(-1/u)",
        {"ni", "k", "u"},
        [](const Grid& g) { return detail::enumerate_products(g, true); },
        detail::excluded_inverse,
        {},
        fold_lhs,
        fold_expansion_rhs,
    });

    claims.push_back(Claim{
        "C10b",
        "Two-factor alternating sum: sum_l C(n1+n2-2k,l)(-1)^l H_{2k+l}(-1/u) against the two-branch 1+u^{-1}+u^{-2}H form",
        {"ni", "k", "u"},
        [](const Grid& g) { return detail::enumerate_products(g, true); },
        detail::excluded_inverse,
        detail::k_branch,
        [fold_sum](const Instance& in, Workspace& ws) -> Value { return fold_sum(in, ws); },
        [reduced_form](const Instance& in, Workspace& ws) -> Value {
            const auto& ns = in.tuple("ni");
            const long k = in.integer("k");
            const Rational& u = in.rational("u");
            return detail::branched(k, 2 * k, detail::sum_of(ns), 1, [&](long m) { return reduced_form(ws, u, m); });
        },
    });

    claims.push_back(Claim{
        "C11",
        "s-fold closed form: integral of u^xi prod_i B_{k,n_i}(xi) against the two-branch form "
        "with direct parameter -1/u (a single u^xi weight)",
        {"s", "ni", "k", "u"},
        [](const Grid& g) { return detail::enumerate_products(g, false); },
        detail::excluded_inverse,
        detail::k_branch,
        fold_lhs,
        fold_direct_rhs,
    });

    claims.push_back(Claim{
        "C12a",
        "s-fold expansion: s-fold integral = 2/(u+1) prod C(n_i,k) sum_l C(sum(n_d-k),l)(-1)^l H_{sk+l}(-1/u)",
        {"s", "ni", "k", "u"},
        [](const Grid& g) { return detail::enumerate_products(g, false); },
        detail::excluded_inverse,
        {},
        fold_lhs,
        fold_expansion_rhs,
    });

    claims.push_back(Claim{
        "C12b",
        "s-fold alternating sum: u^2 sum_l C(sum(n_d-k),l)(-1)^l H_{sk+l}(-1/u) against the two-branch u^2+u+H form",
        {"s", "ni", "k", "u"},
        [](const Grid& g) { return detail::enumerate_products(g, false); },
        detail::excluded_inverse,
        detail::k_branch,
        [fold_sum](const Instance& in, Workspace& ws) -> Value {
            const Rational& u = in.rational("u");
            return u * u * fold_sum(in, ws);
        },
        [](const Instance& in, Workspace& ws) -> Value {
            const auto& ns = in.tuple("ni");
            const long k = in.integer("k");
            const Rational& u = in.rational("u");
            const long sk = static_cast<long>(ns.size()) * k;
            return detail::branched(k, sk, detail::sum_of(ns), 1,
                                    [&](long m) { return u * u + u + ws.H(v_of(u), m); });
        },
    });

    claims.push_back(Claim{
        "C2",
        "Polynomial moment, p-adically: fermionic integral of u^xi (x+xi)^n = 2/(u+1) H_n(-1/u, x) mod p^M",
        {"n", "x", "u", "p", "precision"},
        [](const Grid& g) {
            return detail::product({{"n", as_values(g.ints("n"))},
                                    {"x", as_values(g.rats("x"))},
                                    {"u", as_values(g.rats("padic_u"))},
                                    {"p", as_values(g.ints("p"))},
                                    {"precision", as_values(g.ints("precision"))}});
        },
        [](const Instance& in) -> std::optional<std::string> {
            if (auto r = detail::excluded_inverse(in)) return r;
            const auto p = static_cast<unsigned long>(in.integer("p"));
            if (!is_odd_prime(p)) return "p is not an odd prime";
            const Rational& u = in.rational("u");
            if (padic_valuation(u, p) != 0) return "u is not a p-adic unit";
            const Rational d = u - Rational(1);
            if (!d.is_zero() && padic_valuation(d, p) < 1) return "|u - 1|_p < 1 fails";
            if (in.rational("x").denominator() % p == 0) return "x is not p-integral";
            return std::nullopt;
        },
        {},
        [](const Instance& in, Workspace&) -> Value {
            const IntegrandSpec spec{in.rational("u"),
                                     binomial_power(in.rational("x"), 1, static_cast<unsigned long>(in.integer("n")))};
            return fermionic_integral(spec, static_cast<unsigned long>(in.integer("p")),
                                      static_cast<unsigned long>(in.integer("precision")));
        },
        [](const Instance& in, Workspace& ws) -> Value {
            const Rational& u = in.rational("u");
            const Rational exact = Rational(2) / (u + 1) * ws.H(v_of(u), in.integer("n"), in.rational("x"));
            return padic_from_rational(exact, static_cast<unsigned long>(in.integer("p")),
                                       static_cast<unsigned long>(in.integer("precision")));
        },
    });

    claims.push_back(Claim{
        "C3",
        "Umbral form of the polynomial: sum sum_k C(n,k) H_k(u) x^{n-k} equals n! [t^n] (1-u)/(e^t-u) e^{xt}",
        {"n", "u", "x"},
        n_u_x,
        detail::excluded_one,
        {},
        [](const Instance& in, Workspace& ws) -> Value {
            return ws.H(in.rational("u"), in.integer("n"), in.rational("x"));
        },
        [](const Instance& in, Workspace&) -> Value {
            const auto n = static_cast<std::size_t>(in.integer("n"));
            return polynomial_values_from_generating_function(in.rational("u"), in.rational("x"), n + 8)[n];
        },
    });

    claims.push_back(Claim{
        "C4",
        "Reflection, direct parameter: H_n(-1/u, 1-x) = (-1)^n H_n(-1/u, x)",
        {"n", "u", "x"},
        n_u_x,
        detail::excluded_inverse,
        {},
        [](const Instance& in, Workspace& ws) -> Value {
            return ws.H(v_of(in.rational("u")), in.integer("n"), Rational(1) - in.rational("x"));
        },
        [](const Instance& in, Workspace& ws) -> Value {
            const long n = in.integer("n");
            return sign_power(static_cast<unsigned long>(n)) * ws.H(v_of(in.rational("u")), n, in.rational("x"));
        },
    });

    claims.push_back(Claim{
        "C4-fixed",
        "Reflection with inverted parameter: H_n(-1/u, 1-x) = (-1)^n H_n(-u, x)",
        {"n", "u", "x"},
        n_u_x,
        detail::excluded_inverse,
        {},
        [](const Instance& in, Workspace& ws) -> Value {
            return ws.H(v_of(in.rational("u")), in.integer("n"), Rational(1) - in.rational("x"));
        },
        [](const Instance& in, Workspace& ws) -> Value {
            const long n = in.integer("n");
            return sign_power(static_cast<unsigned long>(n)) * ws.H(-in.rational("u"), n, in.rational("x"));
        },
    });

    claims.push_back(Claim{
        "C5",
        "Value at two: u^2 H_n(-1/u, 2) = u^2 + u + H_n(-1/u), n >= 1",
        {"n", "u"},
        n_u(true),
        detail::excluded_inverse,
        {},
        [](const Instance& in, Workspace& ws) -> Value {
            const Rational& u = in.rational("u");
            return u * u * ws.H(v_of(u), in.integer("n"), 2);
        },
        [](const Instance& in, Workspace& ws) -> Value {
            const Rational& u = in.rational("u");
            return u * u + u + ws.H(v_of(u), in.integer("n"));
        },
    });

    claims.push_back(Claim{
        "C6",
        "Reflected moment, direct parameter: integral of u^xi (1-xi)^n = 2/(u+1) H_n(-1/u, 2)",
        {"n", "u"},
        n_u(false),
        detail::excluded_inverse,
        {},
        one_minus_lhs,
        [](const Instance& in, Workspace& ws) -> Value {
            const Rational& u = in.rational("u");
            return Rational(2) / (u + 1) * ws.H(v_of(u), in.integer("n"), 2);
        },
    });

    claims.push_back(Claim{
        "C6-fixed",
        "Reflected moment, inverted parameter: integral of u^xi (1-xi)^n = 2/(u+1) H_n(-u, 2)",
        {"n", "u"},
        n_u(false),
        detail::excluded_inverse,
        {},
        one_minus_lhs,
        [](const Instance& in, Workspace& ws) -> Value {
            const Rational& u = in.rational("u");
            return Rational(2) / (u + 1) * ws.H(-u, in.integer("n"), 2);
        },
    });

    claims.push_back(Claim{
        "C7",
        "Reflected moment via value at two, direct parameter: integral of u^xi (1-xi)^n = 2/(u+1) + 2/(u^2+u) + 2/(u^3+u) H_n(-1/u), n >= 1",
        {"n", "u"},
        n_u(true),
        detail::excluded_inverse,
        {},
        one_minus_lhs,
        [](const Instance& in, Workspace& ws) -> Value {
            return detail::direct_one_minus_integral(ws, in.rational("u"), in.integer("n"));
        },
    });

    claims.push_back(Claim{
        "C7-fixed",
        "Reflected moment via value at two, inverted parameter: integral of u^xi (1-xi)^n = "
        "2/(u+1) (1 + u + u^2 H_n(-u)), n >= 1",
        {"n", "u"},
        n_u(true),
        detail::excluded_inverse,
        {},
        one_minus_lhs,
        [](const Instance& in, Workspace& ws) -> Value {
            const Rational& u = in.rational("u");
            return Rational(2) / (u + 1) * (Rational(1) + u + u * u * ws.H(-u, in.integer("n")));
        },
    });

    claims.push_back(Claim{
        "C8a",
        "Bernstein expansion: integral of B_{k,n}(xi) u^xi = 2/(u+1) C(n,k) sum_l C(n-k,l)(-1)^l H_{l+k}(-1/u)",
        {"n", "k", "u"},
        [](const Grid& g) {
            return detail::product(
                {{"n", as_values(g.ints("n"))}, {"k", as_values(g.ints("k"))}, {"u", as_values(g.rats("u"))}},
                [](const Instance& in) { return in.integer("k") <= in.integer("n"); });
        },
        detail::excluded_inverse,
        {},
        [](const Instance& in, Workspace& ws) -> Value {
            const auto n = static_cast<unsigned long>(in.integer("n"));
            const auto k = static_cast<unsigned long>(in.integer("k"));
            return ws.integral(in.rational("u"), bernstein_poly({k, n}));
        },
        [](const Instance& in, Workspace& ws) -> Value {
            const long n = in.integer("n");
            const long k = in.integer("k");
            const Rational& u = in.rational("u");
            return Rational(2) / (u + 1) * binom(n, k) * detail::alternating_fe_sum(ws, u, k, n - k);
        },
    });

    claims.push_back(Claim{
        "C8b",
        "Bernstein alternating sum: sum_l C(n-k,l)(-1)^l H_{l+k}(-1/u) against the two-branch 1+u^{-1}+u^{-2}H form, n > k",
        {"n", "k", "u"},
        [](const Grid& g) {
            return detail::product(
                {{"n", as_values(g.ints("n"))}, {"k", as_values(g.ints("k"))}, {"u", as_values(g.rats("u"))}},
                [](const Instance& in) { return in.integer("k") < in.integer("n"); });
        },
        detail::excluded_inverse,
        detail::k_branch,
        [](const Instance& in, Workspace& ws) -> Value {
            const long n = in.integer("n");
            const long k = in.integer("k");
            return detail::alternating_fe_sum(ws, in.rational("u"), k, n - k);
        },
        [reduced_form](const Instance& in, Workspace& ws) -> Value {
            const long n = in.integer("n");
            const long k = in.integer("k");
            const Rational& u = in.rational("u");
            return detail::branched(k, k, n, 1, [&](long m) { return reduced_form(ws, u, m); });
        },
    });

    claims.push_back(Claim{
        "C9",
        "Two-factor closed form: integral of B_{k,n1} B_{k,n2} u^xi against the two-branch form",
        {"ni", "k", "u"},
        [](const Grid& g) { return detail::enumerate_products(g, true); },
        detail::excluded_inverse,
        detail::k_branch,
        fold_lhs,
        fold_direct_rhs,
    });

    return claims;
}

}  // namespace frob::harness
