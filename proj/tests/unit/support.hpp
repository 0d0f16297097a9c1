#pragma once

#include "vldl/project.hpp"
#include "vldl/word.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace support {

using namespace vldl;

inline std::vector<std::string> split(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    for (std::string s; in >> s;) out.push_back(s);
    return out;
}

// Lasso from space separated letter ids.
inline LassoWord lasso(const PushdownAlphabet& alphabet, const std::string& prefix, const std::string& period) {
    return parse_lasso(alphabet, split(prefix), split(period));
}

// Call c, return r, local l; c carries p, l carries q.
inline PushdownAlphabet crl() {
    return PushdownAlphabet({"p", "q"}, {{"c", {"p"}, LetterClass::call},
                                         {"r", {}, LetterClass::ret},
                                         {"l", {"q"}, LetterClass::local}});
}

inline Project sample(const std::string& name) { return load_project(std::string(SAMPLES_DIR) + "/" + name); }

} // namespace support
