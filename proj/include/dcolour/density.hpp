#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <dcolour/paths.hpp>

namespace dcolour {

// Exact rational; all density values avoid floating point entirely.
class Rational {
public:
    using Int = boost::multiprecision::cpp_int;

    Rational() : num_(0), den_(1) {}
    Rational(Int num, Int den);

    const Int & num() const { return num_; }
    const Int & den() const { return den_; }

    bool operator==(const Rational & other) const = default;
    bool operator<(const Rational & other) const { return num_ * other.den_ < other.num_ * den_; }

    std::string str() const;

private:
    Int num_, den_;
};

struct DensityProfile {
    Vertex horizon;
    std::vector<Vertex> counts;     // counts[m-1] = |A intersect [1..m]|
};

DensityProfile profile(const std::vector<Vertex> & set, Vertex n);

// Finite limsup surrogate: max of counts[m]/m over m in [window_start, n].
Rational upper_density_estimate(const DensityProfile & p, Vertex window_start);

Rational exact_periodic_density(const std::vector<int> & residues, int modulus);

Rational path_density(const DirectedPath & path, Vertex n);

// Lines "m,count,ratio_num,ratio_den".
std::string profile_csv(const DensityProfile & p);

}
