#pragma once

#include "vldl/aja.hpp"
#include "vldl/automata.hpp"

#include <string>
#include <vector>

namespace vldl {

struct Diagnostic {
    std::string message;
    bool operator==(const Diagnostic&) const = default;
};

std::vector<Diagnostic> validate(const Vps& vps);
std::vector<Diagnostic> validate(const Tvpa& a);
std::vector<Diagnostic> validate(const Bvpa& a);
std::vector<Diagnostic> validate(const Dpsa& a);
std::vector<Diagnostic> validate(const OneAja& a);

std::string to_dot(const Vps& vps, const std::string& name = "vps");
std::string to_dot(const Tvpa& a, const std::string& name = "tvpa");
std::string to_dot(const Bvpa& a, const std::string& name = "bvpa");
std::string to_dot(const Dpsa& a, const std::string& name = "dpsa");
std::string to_dot(const OneAja& a, const std::string& name = "aja");

} // namespace vldl
