#include <dcolour/rule.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace dcolour {

namespace {
    void check_pair(Vertex m, Vertex n)
    {
        if (m == 0 || n == 0)
            throw InvalidPairError("vertices must be positive");
        if (m == n)
            throw InvalidPairError("loop (" + std::to_string(m) + "," + std::to_string(m) + ") has no colour");
    }

    Colour density_zero_colour(Vertex m, Vertex n)
    {
        // t = min{s : m != n mod 2^s}; both endpoints agree below bit t-1 and
        // differ at bit t-1. Exactly one endpoint has that bit clear; it is
        // the red source.
        auto low = std::countr_zero(m ^ n);
        bool m_is_source = ((m >> low) & 1) == 0;
        return m_is_source ? colour_red : colour_blue;
    }

    Colour extremal_colour(int r, Vertex m, Vertex n)
    {
        auto cm = residue_class(m, r), cn = residue_class(n, r);
        if (cm == cn)
            return colour_blue;
        return cm < cn ? colour_blue : colour_red;
    }

    Colour product_extremal_colour(const std::vector<int> & moduli, Vertex m, Vertex n)
    {
        int k = static_cast<int>(moduli.size());
        for (int t = 0; t < k; ++t) {
            auto im = residue_class(m, moduli[t]), in_ = residue_class(n, moduli[t]);
            if (im != in_)
                return im < in_ ? k + 1 : t + 1;
        }
        return k + 1;
    }

    Colour seeded_random_colour(const SeededRandomRule & rule, Vertex m, Vertex n)
    {
        auto h = splitmix64(splitmix64(splitmix64(rule.seed) ^ m) ^ (n * 0x9e3779b97f4a7c15ULL));
        double u = static_cast<double>(h >> 11) * 0x1.0p-53;
        if (rule.weights.empty())
            return 1 + static_cast<Colour>(std::min<std::uint64_t>(rule.colour_count - 1,
                           h % static_cast<std::uint64_t>(rule.colour_count)));
        double total = std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0);
        double acc = 0.0;
        for (int c = 0; c < rule.colour_count; ++c) {
            acc += rule.weights[c] / total;
            if (u < acc)
                return c + 1;
        }
        return rule.colour_count;
    }
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

ColouringRule::ColouringRule(Variant v) :
    variant_(std::move(v))
{
}

ColouringRule ColouringRule::density_zero()
{
    return ColouringRule{DensityZeroRule{}};
}

ColouringRule ColouringRule::extremal(int r)
{
    if (r < 2)
        throw Error(Status::usage, "extremal modulus must be at least 2");
    return ColouringRule{ExtremalRule{r}};
}

ColouringRule ColouringRule::product_extremal(std::vector<int> moduli)
{
    if (moduli.empty())
        throw Error(Status::usage, "product colouring needs at least one modulus");
    for (auto r : moduli)
        if (r < 2)
            throw Error(Status::usage, "product moduli must be at least 2");
    return ColouringRule{ProductExtremalRule{std::move(moduli)}};
}

ColouringRule ColouringRule::explicit_table(Vertex horizon, int colour_count, std::vector<std::uint8_t> table)
{
    if (horizon < 1 || colour_count < 2 || table.size() != horizon * horizon)
        throw Error(Status::usage, "malformed explicit table");
    return ColouringRule{ExplicitRule{horizon, colour_count, std::move(table)}};
}

ColouringRule ColouringRule::perturbed(ColouringRule base, std::map<std::pair<Vertex, Vertex>, Colour> overrides)
{
    auto count = base.colour_count();
    for (auto & [edge, colour] : overrides) {
        check_pair(edge.first, edge.second);
        if (colour < 1 || colour > count)
            throw Error(Status::usage, "override colour out of range");
    }
    return ColouringRule{PerturbedRule{
        std::make_shared<const ColouringRule>(std::move(base)), std::move(overrides)}};
}

ColouringRule ColouringRule::seeded_random(int colour_count, std::uint64_t seed, std::vector<double> weights)
{
    if (colour_count < 2)
        throw Error(Status::usage, "need at least 2 colours");
    if (! weights.empty() && weights.size() != static_cast<std::size_t>(colour_count))
        throw Error(Status::usage, "weight vector length must equal colour count");
    return ColouringRule{SeededRandomRule{colour_count, seed, std::move(weights)}};
}

Colour ColouringRule::colour_of(Vertex m, Vertex n) const
{
    check_pair(m, n);
    return std::visit([&](const auto & rule) -> Colour {
        using T = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<T, DensityZeroRule>)
            return density_zero_colour(m, n);
        else if constexpr (std::is_same_v<T, ExtremalRule>)
            return extremal_colour(rule.r, m, n);
        else if constexpr (std::is_same_v<T, ProductExtremalRule>)
            return product_extremal_colour(rule.moduli, m, n);
        else if constexpr (std::is_same_v<T, ExplicitRule>) {
            if (m > rule.horizon || n > rule.horizon)
                throw OutOfDomainError("pair (" + std::to_string(m) + "," + std::to_string(n) +
                    ") outside explicit horizon " + std::to_string(rule.horizon));
            return static_cast<Colour>(rule.table[(m - 1) * rule.horizon + (n - 1)]);
        }
        else if constexpr (std::is_same_v<T, PerturbedRule>) {
            auto it = rule.overrides.find({m, n});
            if (it != rule.overrides.end())
                return it->second;
            return rule.base->colour_of(m, n);
        }
        else
            return seeded_random_colour(rule, m, n);
    },
        variant_);
}

int ColouringRule::colour_count() const
{
    return std::visit([](const auto & rule) -> int {
        using T = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<T, DensityZeroRule>)
            return 2;
        else if constexpr (std::is_same_v<T, ExtremalRule>)
            return 2;
        else if constexpr (std::is_same_v<T, ProductExtremalRule>)
            return static_cast<int>(rule.moduli.size()) + 1;
        else if constexpr (std::is_same_v<T, ExplicitRule>)
            return rule.colour_count;
        else if constexpr (std::is_same_v<T, PerturbedRule>)
            return rule.base->colour_count();
        else
            return rule.colour_count;
    },
        variant_);
}

int residue_class(Vertex v, int r)
{
    if (r < 1)
        throw Error(Status::usage, "modulus must be positive");
    return static_cast<int>(v % static_cast<Vertex>(r));
}

std::vector<int> class_tuple(Vertex v, const std::vector<int> & moduli)
{
    std::vector<int> result;
    result.reserve(moduli.size());
    for (auto r : moduli)
        result.push_back(residue_class(v, r));
    return result;
}

ColouringRule parse_rule_spec(const std::string & spec)
{
    auto colon = spec.find(':');
    auto head = spec.substr(0, colon);
    auto rest = colon == std::string::npos ? std::string{} : spec.substr(colon + 1);

    if (head == "density-zero") {
        if (! rest.empty())
            throw Error(Status::usage, "density-zero takes no parameters");
        return ColouringRule::density_zero();
    }
    else if (head == "extremal") {
        try {
            return ColouringRule::extremal(std::stoi(rest));
        }
        catch (const std::logic_error &) {
            throw Error(Status::usage, "bad extremal rule spec '" + spec + "'");
        }
    }
    else if (head == "product") {
        std::vector<int> moduli;
        std::stringstream ss{rest};
        std::string item;
        try {
            while (std::getline(ss, item, ','))
                moduli.push_back(std::stoi(item));
        }
        catch (const std::logic_error &) {
            throw Error(Status::usage, "bad product rule spec '" + spec + "'");
        }
        return ColouringRule::product_extremal(std::move(moduli));
    }
    else if (head == "random") {
        auto second = rest.find(':');
        if (second == std::string::npos)
            throw Error(Status::usage, "random rule needs colour count and seed");
        try {
            int k = std::stoi(rest.substr(0, second));
            auto seed = std::stoull(rest.substr(second + 1));
            return ColouringRule::seeded_random(k, seed);
        }
        catch (const std::logic_error &) {
            throw Error(Status::usage, "bad random rule spec '" + spec + "'");
        }
    }
    throw Error(Status::usage, "unknown rule '" + spec + "'");
}

}
