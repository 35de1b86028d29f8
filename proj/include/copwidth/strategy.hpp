#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "copwidth/errors.hpp"

namespace copwidth {

enum class GameKind { Bcw, Search, Hunt, ZeroVis };

/// Robber speed in the bcw game; kRadiusInf stands for unbounded paths.
inline constexpr int kRadiusInf = -1;

inline std::string to_string(GameKind k) {
    switch (k) {
        case GameKind::Bcw: return "bcw";
        case GameKind::Search: return "search";
        case GameKind::Hunt: return "hunt";
        case GameKind::ZeroVis: return "zerovis";
    }
    return "?";
}

inline GameKind game_kind_from_string(const std::string& s) {
    if (s == "bcw") return GameKind::Bcw;
    if (s == "search") return GameKind::Search;
    if (s == "hunt") return GameKind::Hunt;
    if (s == "zerovis") return GameKind::ZeroVis;
    throw ParseError("unknown game kind '" + s + "'");
}

inline std::string radius_to_string(int r) { return r == kRadiusInf ? "inf" : std::to_string(r); }

inline int radius_from_string(const std::string& s) {
    if (s == "inf") return kRadiusInf;
    try {
        size_t pos = 0;
        int r = std::stoi(s, &pos);
        if (pos != s.size()) throw ParseError("bad radius '" + s + "'");
        return r;
    } catch (const std::exception&) {
        throw ParseError("bad radius '" + s + "'");
    }
}

/// A cop strategy: the declared game, robber radius (bcw only), the cop
/// budget k, and one vertex set per round.
struct CopStrategy {
    GameKind kind = GameKind::Bcw;
    int radius = 1;
    int budget = 0;
    std::vector<std::vector<int>> rounds;

    int length() const { return int(rounds.size()); }
    int max_round_size() const {
        size_t m = 0;
        for (const auto& r : rounds) m = std::max(m, r.size());
        return int(m);
    }
};

// Text format: line 1 'game=<kind> r=<int|inf> k=<int>', then one line per
// round with space-separated vertex ids (a blank line is the empty set).
inline CopStrategy read_strategy(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("strategy: missing header");
    CopStrategy s;
    std::istringstream hdr(line);
    std::string tok;
    bool got_game = false, got_r = false, got_k = false;
    while (hdr >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("strategy: bad header token '" + tok + "'");
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "game") {
            s.kind = game_kind_from_string(val);
            got_game = true;
        } else if (key == "r") {
            s.radius = radius_from_string(val);
            got_r = true;
        } else if (key == "k") {
            s.budget = std::stoi(val);
            got_k = true;
        } else {
            throw ParseError("strategy: unknown header key '" + key + "'");
        }
    }
    if (!got_game || !got_r || !got_k) throw ParseError("strategy: header must contain game=, r=, k=");
    // every remaining line is a round; a blank line is the empty set
    while (std::getline(in, line)) {
        std::vector<int> round;
        std::istringstream ls(line);
        long long v;
        while (ls >> v) round.push_back(int(v));
        if (!ls.eof()) throw ParseError("strategy: bad round line '" + line + "'");
        std::sort(round.begin(), round.end());
        round.erase(std::unique(round.begin(), round.end()), round.end());
        s.rounds.push_back(std::move(round));
    }
    return s;
}

inline void write_strategy(std::ostream& out, const CopStrategy& s) {
    out << "game=" << to_string(s.kind) << " r=" << radius_to_string(s.radius) << " k=" << s.budget << "\n";
    for (const auto& r : s.rounds) {
        for (size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << r[i];
        out << "\n";
    }
}

inline CopStrategy load_strategy(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open strategy file: " + path);
    return read_strategy(in);
}

inline void save_strategy(const std::string& path, const CopStrategy& s) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write strategy file: " + path);
    write_strategy(out, s);
}

}  // namespace copwidth
