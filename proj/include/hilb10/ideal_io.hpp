#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ideal.hpp"

namespace hilb10 {

// ---------------------------------------------------------------------------
// Ideal file format (UTF-8, line-oriented):
//   field q            rationals
//   field fp <p>       prime field
//   vars v1 v2 ...     variable names, in order
//   gen <polynomial>   one generator per line
// '#' starts a comment; blank lines are ignored.
// ---------------------------------------------------------------------------

inline Ideal parseIdealText(std::istream& in, const std::string& sourceName = "<input>") {
    Field field = Field::rationals();
    bool sawField = false;
    RingPtr ring;
    std::vector<std::string> genTexts;
    std::string line;
    int lineNo = 0;
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError(sourceName + ":" + std::to_string(lineNo) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineNo;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword)) continue;
        if (keyword == "field") {
            if (sawField) throw fail("duplicate field declaration");
            std::string name;
            if (!(ls >> name)) throw fail("expected 'q' or 'fp <p>' after 'field'");
            if (name == "q") {
                field = Field::rationals();
            } else if (name == "fp") {
                long p = 0;
                if (!(ls >> p) || p < 2) throw fail("expected a prime after 'field fp'");
                try {
                    field = Field::primeField(static_cast<unsigned>(p));
                } catch (const InvalidArgumentError& e) {
                    throw fail(e.what());
                }
            } else {
                throw fail("unknown field '" + name + "'");
            }
            sawField = true;
        } else if (keyword == "vars") {
            if (ring) throw fail("duplicate vars declaration");
            if (!sawField) throw fail("'vars' must come after 'field'");
            std::vector<std::string> names;
            std::string v;
            while (ls >> v) names.push_back(v);
            if (names.empty()) throw fail("'vars' needs at least one variable");
            try {
                ring = RingContext::make(names, field);
            } catch (const InvalidArgumentError& e) {
                throw fail(e.what());
            }
        } else if (keyword == "gen") {
            if (!ring) throw fail("'gen' must come after 'vars'");
            std::string rest;
            std::getline(ls, rest);
            genTexts.push_back(rest);
        } else {
            throw fail("unknown keyword '" + keyword + "'");
        }
    }
    if (!ring) throw ParseError(sourceName + ": missing 'vars' declaration");
    Ideal I(ring);
    for (std::size_t i = 0; i < genTexts.size(); ++i) {
        try {
            I.addGenerator(parsePolynomial(genTexts[i], ring));
        } catch (const ParseError& e) {
            throw ParseError(sourceName + ": generator " + std::to_string(i + 1) + ": " +
                             e.what());
        }
    }
    return I;
}

inline Ideal loadIdealFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parseIdealText(in, path);
}

} // namespace hilb10
