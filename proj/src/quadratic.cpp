#include "quadring/quadratic.hpp"

namespace quadring {

std::string engine_name(Engine e) {
    switch (e) {
        case Engine::iterative: return "iterative";
        case Engine::binomial: return "binomial";
        case Engine::doubling: return "doubling";
    }
    return "?";
}

Engine parse_engine(std::string_view name) {
    if (name == "iterative") return Engine::iterative;
    if (name == "binomial") return Engine::binomial;
    if (name == "doubling") return Engine::doubling;
    throw std::invalid_argument("unknown engine \"" + std::string(name) +
                                "\" (expected iterative, binomial, or doubling)");
}

BiPoly lucas_u_symbolic(std::uint64_t m) {
    QuadParams<BiPoly> generic{BiPoly::var_t(), BiPoly::var_d()};
    return lucas_u_iterative(generic, m);
}

}  // namespace quadring
