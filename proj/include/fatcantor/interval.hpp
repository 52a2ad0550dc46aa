#pragma once

#include "fatcantor/rational.hpp"

#include <stdexcept>

namespace fc {

// Closed interval [lo, hi] with rational endpoints, lo <= hi.
struct ClosedInterval {
    Rational lo;
    Rational hi;

    ClosedInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi)
            throw std::invalid_argument("ClosedInterval: lo > hi (" + lo.str() + " > " + hi.str() + ")");
    }

    Rational width() const { return hi - lo; }

    ClosedInterval translated(const Rational& t) const { return {lo + t, hi + t}; }

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }

    bool operator==(const ClosedInterval& o) const { return lo == o.lo && hi == o.hi; }

    std::string str() const { return "[" + lo.str() + "," + hi.str() + "]"; }
};

// Open interval (lo, hi); used for gaps, the components of [0,1] \ A_k.
struct OpenInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }

    bool operator==(const OpenInterval& o) const { return lo == o.lo && hi == o.hi; }

    std::string str() const { return "(" + lo.str() + "," + hi.str() + ")"; }
};

}  // namespace fc
