#include "dimkit/fractal_spec.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "dimkit/errors.hpp"

namespace dimkit {

CarpetStats carpet_derived(const CarpetSpec& spec) {
    std::map<int, int> per_column;
    for (const auto& [col, row] : spec.cells) {
        (void)row;
        ++per_column[col];
    }
    CarpetStats st;
    st.M = static_cast<int>(per_column.size());
    for (const auto& [col, count] : per_column) {
        (void)col;
        st.C.push_back(count);
    }
    st.C_max = *std::max_element(st.C.begin(), st.C.end());
    st.N = static_cast<int>(spec.cells.size());
    st.uniform_fibres =
        std::all_of(st.C.begin(), st.C.end(), [&](int c) { return c == st.C_max; });
    return st;
}

namespace {

void validate_countable(const CountableSpec& s) {
    if (!(s.p > 0.0)) throw_domain("countable: p must be > 0");
}

void validate_carpet(const CarpetSpec& s) {
    if (s.m < 2 || s.n <= s.m) throw_domain("carpet: need n > m >= 2");
    if (s.cells.size() < 2) throw_domain("carpet: need at least 2 cells");
    std::set<std::pair<int, int>> seen;
    for (const auto& cell : s.cells) {
        if (cell.first < 0 || cell.first >= s.m || cell.second < 0 || cell.second >= s.n)
            throw_domain("carpet: cell outside the m x n grid");
        if (!seen.insert(cell).second) throw_domain("carpet: duplicate cell");
    }
}

void validate_selfsimilar(const SelfSimilarSpec& s) {
    if (s.maps.empty()) throw_domain("selfsimilar: need at least one map");
    for (const auto& m : s.maps) {
        if (!(m.c > 0.0) || !(m.c < 1.0)) throw_domain("selfsimilar: c must be in (0,1)");
        if (m.t < 0.0 || m.t > 1.0 - m.c)
            throw_domain("selfsimilar: map must send [0,1] into itself");
    }
}

void validate_spiral(const SpiralSpec& s) {
    if (!(s.p >= 1.0)) throw_domain("spiral: p must be >= 1");
}

void validate_percolation(const PercolationSpec& s) {
    if (s.dim < 1) throw_domain("percolation: dimension must be >= 1");
    if (s.m < 2) throw_domain("percolation: subdivision m must be >= 2");
    const double survival_threshold = std::pow(static_cast<double>(s.m), -s.dim);
    if (!(s.p > survival_threshold) || !(s.p < 1.0))
        throw_domain("percolation: need p in (m^-d, 1) for positive survival probability");
}

std::map<std::string, std::string> parse_kv(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw_config("spec line is not key=value: " + line);
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        auto strip = [](std::string& s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            s = (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
        };
        strip(key);
        strip(val);
        if (kv.count(key)) throw_config("duplicate key: " + key);
        kv[key] = val;
    }
    return kv;
}

const std::string& require(const std::map<std::string, std::string>& kv,
                           const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw_config("missing key: " + key);
    return it->second;
}

double to_double(const std::string& s, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw_config("trailing characters in " + key + ": " + s);
        return v;
    } catch (const Error&) {
        throw;
    } catch (...) {
        throw_config("cannot parse number for " + key + ": " + s);
    }
}

long long to_int(const std::string& s, const std::string& key) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw_config("trailing characters in " + key + ": " + s);
        return v;
    } catch (const Error&) {
        throw;
    } catch (...) {
        throw_config("cannot parse integer for " + key + ": " + s);
    }
}

// Parses "(a,b);(c,d);..." into number pairs.
std::vector<std::pair<double, double>> parse_pairs(const std::string& s,
                                                   const std::string& key) {
    std::vector<std::pair<double, double>> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] == ';') { ++pos; continue; }
        if (s[pos] != '(') throw_config("expected '(' in " + key + ": " + s);
        const auto comma = s.find(',', pos);
        const auto close = s.find(')', pos);
        if (comma == std::string::npos || close == std::string::npos || comma > close)
            throw_config("malformed pair in " + key + ": " + s);
        out.emplace_back(to_double(s.substr(pos + 1, comma - pos - 1), key),
                         to_double(s.substr(comma + 1, close - comma - 1), key));
        pos = close + 1;
    }
    if (out.empty()) throw_config("empty pair list for " + key);
    return out;
}

}  // namespace

void validate(const FractalSpec& spec) {
    std::visit([](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CountableSpec>) validate_countable(s);
        else if constexpr (std::is_same_v<T, CarpetSpec>) validate_carpet(s);
        else if constexpr (std::is_same_v<T, SelfSimilarSpec>) validate_selfsimilar(s);
        else if constexpr (std::is_same_v<T, SpiralSpec>) validate_spiral(s);
        else validate_percolation(s);
    }, spec);
}

FractalSpec parse_spec(const std::string& text) {
    const auto kv = parse_kv(text);
    const std::string& variant = require(kv, "variant");
    FractalSpec spec;
    if (variant == "countable") {
        spec = CountableSpec{to_double(require(kv, "p"), "p")};
    } else if (variant == "carpet") {
        CarpetSpec s;
        s.m = static_cast<int>(to_int(require(kv, "m"), "m"));
        s.n = static_cast<int>(to_int(require(kv, "n"), "n"));
        for (auto [a, b] : parse_pairs(require(kv, "cells"), "cells"))
            s.cells.emplace_back(static_cast<int>(a), static_cast<int>(b));
        spec = std::move(s);
    } else if (variant == "selfsimilar") {
        SelfSimilarSpec s;
        for (auto [c, t] : parse_pairs(require(kv, "maps"), "maps"))
            s.maps.push_back({c, t});
        spec = std::move(s);
    } else if (variant == "spiral") {
        spec = SpiralSpec{to_double(require(kv, "p"), "p")};
    } else if (variant == "percolation") {
        PercolationSpec s;
        s.dim = static_cast<int>(to_int(require(kv, "d"), "d"));
        s.m = static_cast<int>(to_int(require(kv, "m"), "m"));
        s.p = to_double(require(kv, "p"), "p");
        s.seed = static_cast<uint64_t>(to_int(require(kv, "seed"), "seed"));
        spec = s;
    } else {
        throw_config("unknown variant: " + variant);
    }
    validate(spec);
    return spec;
}

std::string format_spec(const FractalSpec& spec) {
    std::ostringstream out;
    out.precision(17);
    std::visit([&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CountableSpec>) {
            out << "variant=countable\np=" << s.p << "\n";
        } else if constexpr (std::is_same_v<T, CarpetSpec>) {
            out << "variant=carpet\nm=" << s.m << "\nn=" << s.n << "\ncells=";
            for (std::size_t i = 0; i < s.cells.size(); ++i) {
                if (i) out << ";";
                out << "(" << s.cells[i].first << "," << s.cells[i].second << ")";
            }
            out << "\n";
        } else if constexpr (std::is_same_v<T, SelfSimilarSpec>) {
            out << "variant=selfsimilar\nmaps=";
            for (std::size_t i = 0; i < s.maps.size(); ++i) {
                if (i) out << ";";
                out << "(" << s.maps[i].c << "," << s.maps[i].t << ")";
            }
            out << "\n";
        } else if constexpr (std::is_same_v<T, SpiralSpec>) {
            out << "variant=spiral\np=" << s.p << "\n";
        } else {
            out << "variant=percolation\nd=" << s.dim << "\nm=" << s.m << "\np=" << s.p
                << "\nseed=" << s.seed << "\n";
        }
    }, spec);
    return out.str();
}

std::string family_name(const FractalSpec& spec) {
    std::ostringstream out;
    out.precision(6);
    std::visit([&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CountableSpec>) out << "countable(p=" << s.p << ")";
        else if constexpr (std::is_same_v<T, CarpetSpec>)
            out << "carpet(m=" << s.m << ",n=" << s.n << ",N=" << s.cells.size() << ")";
        else if constexpr (std::is_same_v<T, SelfSimilarSpec>)
            out << "selfsimilar(k=" << s.maps.size() << ")";
        else if constexpr (std::is_same_v<T, SpiralSpec>) out << "spiral(p=" << s.p << ")";
        else out << "percolation(d=" << s.dim << ",m=" << s.m << ",p=" << s.p << ")";
    }, spec);
    return out.str();
}

}  // namespace dimkit
