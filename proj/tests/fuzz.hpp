#pragma once

// Input generator for parser robustness checks: random bytes, random token
// soup, and byte-level mutations of well-formed files.

#include <random>
#include <string>
#include <vector>

namespace fuzz {

inline const std::vector<std::string>& seeds() {
    static const std::vector<std::string> files{
        "set a b c\nrule a -> b\nrule b -> c\nseed a\ngoal c\n",
        "# cover\nset top l r\naxiom top <- l r\nseed l r\ngoal top\n",
        "set x\nrule -> x\n",
        "set p q\nset r\nrule p q -> r # both\naxiom p <-\nseed\n",
        "set \xce\xb1 \xce\xb2\nrule \xce\xb1 -> \xce\xb2\n",
    };
    return files;
}

inline std::string random_input(std::mt19937_64& rng) {
    static const std::vector<std::string> tokens{
        "set", "rule", "axiom", "seed", "goal", "a", "b", "c", "x'", "y_1", "->", "<-", "-", "<", ">",
        "#", " ", " ", "\t", "\n", "\n", "\r\n", "\xff", "\x00", "=", "{", "}", ",", "rule#0",
    };
    std::string out;
    switch (rng() % 4) {
    case 3: {
        // well-formed lines over a small carrier, lightly perturbed
        static const std::vector<std::string> names{"a", "b", "c", "x'", "y_1"};
        out = "set a b c x' y_1\n";
        for (std::size_t i = 0, n = rng() % 8; i < n; ++i) {
            auto pick = [&] { return names[rng() % names.size()]; };
            switch (rng() % 4) {
            case 0: out += "rule " + pick() + " -> " + pick() + "\n"; break;
            case 1: out += "axiom " + pick() + " <- " + pick() + " " + pick() + "\n"; break;
            case 2: out += "# " + pick() + "\n"; break;
            default: out += "rule -> " + pick() + "\n"; break;
            }
        }
        if (rng() % 2) out += "seed " + names[rng() % names.size()] + "\n";
        if (rng() % 2) out += "goal " + names[rng() % names.size()] + "\n";
        if (rng() % 3 == 0 && !out.empty()) out[rng() % out.size()] = static_cast<char>(rng() % 128);
        break;
    }
    case 0: {
        auto n = rng() % 80;
        for (std::size_t i = 0; i < n; ++i) out.push_back(static_cast<char>(rng() % 256));
        break;
    }
    case 1: {
        auto n = rng() % 40;
        for (std::size_t i = 0; i < n; ++i) {
            const auto& t = tokens[rng() % tokens.size()];
            out += t.empty() ? std::string(1, '\0') : t;
            if (rng() % 2) out += ' ';
        }
        break;
    }
    default: {
        out = seeds()[rng() % seeds().size()];
        auto edits = 1 + rng() % 4;
        for (std::size_t e = 0; e < edits && !out.empty(); ++e) {
            auto pos = rng() % out.size();
            switch (rng() % 3) {
            case 0: out.erase(pos, 1 + rng() % 3); break;
            case 1: out.insert(pos, 1, static_cast<char>(rng() % 256)); break;
            default: out[pos] = static_cast<char>(rng() % 256); break;
            }
        }
        break;
    }
    }
    return out;
}

} // namespace fuzz
