#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <dcolour/errors.hpp>

namespace dcolour {

using Vertex = std::uint64_t;

// Colours are 1-based: in a 2-colouring, 1 = red and 2 = blue; in a
// (k+1)-colouring, 1..k are the restricted colours and k+1 the unrestricted one.
using Colour = int;

inline constexpr Colour colour_red = 1;
inline constexpr Colour colour_blue = 2;

class ColouringRule;

// Every pair gets one red direction: the endpoint whose bit t-1 is clear
// (t the lowest differing bit, one-based) is the red source.
struct DensityZeroRule {
};

struct ExtremalRule {
    int r;
};

struct ProductExtremalRule {
    std::vector<int> moduli;
};

struct ExplicitRule {
    Vertex horizon;
    int colour_count;
    // (m-1) * horizon + (n-1); diagonal entries unused.
    std::vector<std::uint8_t> table;
};

struct PerturbedRule {
    std::shared_ptr<const ColouringRule> base;
    std::map<std::pair<Vertex, Vertex>, Colour> overrides;
};

struct SeededRandomRule {
    int colour_count;
    std::uint64_t seed;
    // One weight per colour; empty means uniform.
    std::vector<double> weights;
};

class ColouringRule {
public:
    using Variant = std::variant<DensityZeroRule, ExtremalRule, ProductExtremalRule,
        ExplicitRule, PerturbedRule, SeededRandomRule>;

    explicit ColouringRule(Variant v);

    static ColouringRule density_zero();
    static ColouringRule extremal(int r);
    static ColouringRule product_extremal(std::vector<int> moduli);
    static ColouringRule explicit_table(Vertex horizon, int colour_count, std::vector<std::uint8_t> table);
    static ColouringRule perturbed(ColouringRule base, std::map<std::pair<Vertex, Vertex>, Colour> overrides);
    static ColouringRule seeded_random(int colour_count, std::uint64_t seed, std::vector<double> weights = {});

    Colour colour_of(Vertex m, Vertex n) const;
    int colour_count() const;

    const Variant & variant() const { return variant_; }

private:
    Variant variant_;
};

int residue_class(Vertex v, int r);
std::vector<int> class_tuple(Vertex v, const std::vector<int> & moduli);

// CLI rule syntax: density-zero | extremal:R | product:R1,R2,... | random:K:SEED
ColouringRule parse_rule_spec(const std::string & spec);

std::uint64_t splitmix64(std::uint64_t x);

}
