#include "vldl/vps.hpp"

#include <algorithm>

namespace vldl {

namespace {

template <typename T>
void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

std::optional<StateId> Vps::find_state(std::string_view name) const {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == name) return static_cast<StateId>(i);
    return std::nullopt;
}

std::optional<SymbolId> Vps::find_symbol(std::string_view name) const {
    for (std::size_t i = 0; i < symbols.size(); ++i)
        if (symbols[i] == name) return static_cast<SymbolId>(i);
    return std::nullopt;
}

StateId Vps::add_state(std::string name) {
    states.push_back(std::move(name));
    return static_cast<StateId>(states.size() - 1);
}

SymbolId Vps::add_symbol(std::string name) {
    symbols.push_back(std::move(name));
    return static_cast<SymbolId>(symbols.size() - 1);
}

void Vps::normalize() {
    sort_unique(calls);
    sort_unique(returns);
    sort_unique(locals);
}

std::vector<Configuration> config_successors(const Vps& vps, const Configuration& c, LetterId letter) {
    std::vector<Configuration> out;
    const SymbolId top = c.stack.front();
    switch (vps.alphabet.kind(letter)) {
    case LetterClass::call:
        for (const auto& r : vps.calls) {
            if (r.from != c.state || r.letter != letter) continue;
            Configuration next{r.to, c.stack};
            next.stack.insert(next.stack.begin(), r.push);
            out.push_back(std::move(next));
        }
        break;
    case LetterClass::ret:
        for (const auto& r : vps.returns) {
            if (r.from != c.state || r.letter != letter || r.pop != top) continue;
            Configuration next{r.to, c.stack};
            if (top != bottom_symbol) next.stack.erase(next.stack.begin());
            out.push_back(std::move(next));
        }
        break;
    case LetterClass::local:
        for (const auto& r : vps.locals)
            if (r.from == c.state && r.letter == letter) out.push_back(Configuration{r.to, c.stack});
        break;
    }
    sort_unique(out);
    return out;
}

} // namespace vldl
