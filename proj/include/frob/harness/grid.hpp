#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "frob/errors.hpp"
#include "frob/rational.hpp"

namespace frob::harness {

/// Upper bounds a grid must respect before a sweep will run it.
struct GridCaps {
    long max_index = 32;          // n, k and every n_i
    long max_factors = 4;         // s
    long max_rational_part = 64;  // |numerator| and denominator of u and x
    long max_precision = 16;
    long max_level = 8;
    long max_prime = 97;
};

/// Parameter grid: a named list of values per parameter. Integer parameters
/// are n, k, s, ni, p, precision and level; rational ones are u, x and
/// padic_u (the u values used for the p-adic claim).
///
/// Text form, one parameter per line, '#' starts a comment:
///
///     n = 0..8
///     u = 2, 3, -1/2
struct Grid {
    std::map<std::string, std::vector<long>> integers;
    std::map<std::string, std::vector<Rational>> rationals;

    static bool is_integer_key(std::string_view key) {
        static const std::set<std::string, std::less<>> keys{"n", "k", "s", "ni", "p", "precision", "level"};
        return keys.contains(key);
    }
    static bool is_rational_key(std::string_view key) {
        static const std::set<std::string, std::less<>> keys{"u", "x", "padic_u"};
        return keys.contains(key);
    }

    const std::vector<long>& ints(const std::string& key) const {
        static const std::vector<long> empty;
        const auto it = integers.find(key);
        return it == integers.end() ? empty : it->second;
    }
    const std::vector<Rational>& rats(const std::string& key) const {
        static const std::vector<Rational> empty;
        const auto it = rationals.find(key);
        return it == rationals.end() ? empty : it->second;
    }

    bool empty() const { return integers.empty() && rationals.empty(); }

    void validate(const GridCaps& caps = {}) const {
        auto check = [](bool ok, const std::string& what) {
            if (!ok) throw InvalidParameter("grid out of bounds: " + what);
        };
        for (const auto& [key, values] : integers) {
            for (long v : values) {
                check(v >= 0, key + " must be non-negative");
                if (key == "n" || key == "k" || key == "ni") check(v <= caps.max_index, key + " exceeds cap");
                if (key == "s") check(v <= caps.max_factors, "s exceeds cap");
                if (key == "precision") check(v >= 1 && v <= caps.max_precision, "precision outside [1, cap]");
                if (key == "level") check(v >= 1 && v <= caps.max_level, "level outside [1, cap]");
                if (key == "p") check(v <= caps.max_prime, "p exceeds cap");
            }
        }
        const BigInt bound(caps.max_rational_part);
        for (const auto& [key, values] : rationals) {
            for (const auto& r : values) {
                check(abs(r.numerator()) <= bound && r.denominator() <= bound,
                      key + " value " + r.to_string() + " exceeds cap");
            }
        }
    }

    /// Parses the text form. Values are sorted and deduplicated.
    static Grid parse(std::string_view text) {
        Grid grid;
        std::size_t line_start = 0;
        while (line_start <= text.size()) {
            std::size_t line_end = text.find('\n', line_start);
            if (line_end == std::string_view::npos) line_end = text.size();
            parse_line(grid, text.substr(line_start, line_end - line_start), line_start);
            line_start = line_end + 1;
        }
        return grid;
    }

private:
    static std::size_t skip_blank(std::string_view s, std::size_t i) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        return i;
    }

    static void parse_line(Grid& grid, std::string_view line, std::size_t base) {
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::size_t i = skip_blank(line, 0);
        if (i == line.size()) return;
        const std::size_t key_start = i;
        while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_')) ++i;
        const std::string key(line.substr(key_start, i - key_start));
        if (key.empty()) throw SyntaxError(base + i, {"parameter name"});
        const bool integral = is_integer_key(key);
        if (!integral && !is_rational_key(key)) throw SyntaxError(base + key_start, {"known parameter name"}, "unknown parameter '" + key + "'");
        i = skip_blank(line, i);
        if (i >= line.size() || line[i] != '=') throw SyntaxError(base + i, {"'='"});
        i = skip_blank(line, i + 1);

        std::vector<long> ints;
        std::vector<Rational> rats;
        while (true) {
            std::size_t end = i;
            while (end < line.size() && line[end] != ',') ++end;
            std::size_t last = end;
            while (last > i && (line[last - 1] == ' ' || line[last - 1] == '\t' || line[last - 1] == '\r')) --last;
            const std::string_view item = line.substr(i, last - i);
            if (item.empty()) throw SyntaxError(base + i, {"value"});
            if (const auto dots = item.find(".."); dots != std::string_view::npos) {
                if (!integral) throw SyntaxError(base + i + dots, {"','"}, "ranges are only allowed for integer parameters");
                const long lo = parse_long(item.substr(0, dots), base + i);
                const long hi = parse_long(item.substr(dots + 2), base + i + dots + 2);
                if (hi < lo) throw SyntaxError(base + i, {}, "empty range");
                for (long v = lo; v <= hi; ++v) ints.push_back(v);
            } else if (integral) {
                ints.push_back(parse_long(item, base + i));
            } else {
                try {
                    rats.push_back(Rational::parse(item));
                } catch (const SyntaxError& e) {
                    throw SyntaxError(base + i + e.offset(), e.expected(), "bad rational '" + std::string(item) + "'");
                }
            }
            if (end >= line.size()) break;
            i = skip_blank(line, end + 1);
        }
        if (integral) {
            auto& dst = grid.integers[key];
            dst.insert(dst.end(), ints.begin(), ints.end());
            std::sort(dst.begin(), dst.end());
            dst.erase(std::unique(dst.begin(), dst.end()), dst.end());
        } else {
            auto& dst = grid.rationals[key];
            dst.insert(dst.end(), rats.begin(), rats.end());
            std::sort(dst.begin(), dst.end());
            dst.erase(std::unique(dst.begin(), dst.end()), dst.end());
        }
    }

    static long parse_long(std::string_view s, std::size_t offset) {
        std::size_t i = skip_blank(s, 0);
        std::size_t end = s.size();
        while (end > i && (s[end - 1] == ' ' || s[end - 1] == '\t')) --end;
        if (i == end) throw SyntaxError(offset + i, {"integer"});
        long v = 0;
        for (std::size_t j = i; j < end; ++j) {
            if (s[j] < '0' || s[j] > '9') throw SyntaxError(offset + j, {"digit"});
            v = v * 10 + (s[j] - '0');
            if (v > 1'000'000) throw SyntaxError(offset + j, {}, "integer too large");
        }
        return v;
    }
};

/// The grid swept by `verify` when none is given.
inline Grid default_grid() {
    return Grid::parse(
        "n = 0..8\n"
        "k = 0..8\n"
        "s = 2, 3\n"
        "ni = 0..8\n"
        "u = 2, 3, 5, -1/2, 5/3\n"
        "x = 0, 1, 2, -1, 1/2\n"
        "p = 3\n"
        "padic_u = 4, 7\n"
        "precision = 8\n"
        "level = 1, 2\n");
}

}  // namespace frob::harness
