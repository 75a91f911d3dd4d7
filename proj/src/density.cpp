#include <dcolour/density.hpp>

#include <algorithm>
#include <set>

namespace dcolour {

Rational::Rational(Int num, Int den) :
    num_(std::move(num)),
    den_(std::move(den))
{
    if (den_ == 0)
        throw Error(Status::usage, "zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = gcd(Int{abs(num_)}, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Rational::str() const
{
    return num_.str() + "/" + den_.str();
}

DensityProfile profile(const std::vector<Vertex> & set, Vertex n)
{
    if (n < 1)
        throw Error(Status::usage, "horizon must be at least 1");
    std::set<Vertex> members(set.begin(), set.end());
    DensityProfile p{n, {}};
    p.counts.reserve(n);
    Vertex count = 0;
    for (Vertex m = 1; m <= n; ++m) {
        if (members.count(m))
            ++count;
        p.counts.push_back(count);
    }
    return p;
}

Rational upper_density_estimate(const DensityProfile & p, Vertex window_start)
{
    if (window_start < 1 || window_start > p.horizon)
        throw Error(Status::usage, "window start outside [1, n]");
    Rational best{0, 1};
    for (Vertex m = window_start; m <= p.horizon; ++m) {
        Rational ratio{p.counts[m - 1], m};
        if (best < ratio)
            best = ratio;
    }
    return best;
}

Rational exact_periodic_density(const std::vector<int> & residues, int modulus)
{
    if (modulus < 1)
        throw Error(Status::usage, "modulus must be positive");
    std::set<int> distinct;
    for (auto r : residues) {
        if (r < 0 || r >= modulus)
            throw Error(Status::usage, "residue " + std::to_string(r) + " out of [0, " + std::to_string(modulus - 1) + "]");
        distinct.insert(r);
    }
    return Rational{static_cast<long>(distinct.size()), modulus};
}

Rational path_density(const DirectedPath & path, Vertex n)
{
    if (n < 1)
        throw Error(Status::usage, "horizon must be at least 1");
    Vertex count = 0;
    for (auto v : path.vertices) {
        if (v > n)
            throw OutOfDomainError("path vertex " + std::to_string(v) + " exceeds the horizon");
        ++count;
    }
    return Rational{count, n};
}

std::string profile_csv(const DensityProfile & p)
{
    std::string out = "m,count,ratio_num,ratio_den\n";
    for (Vertex m = 1; m <= p.horizon; ++m) {
        Rational ratio{p.counts[m - 1], m};
        out += std::to_string(m) + "," + std::to_string(p.counts[m - 1]) + "," +
            ratio.num().str() + "," + ratio.den().str() + "\n";
    }
    return out;
}

}
