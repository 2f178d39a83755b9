#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "chamber/complex.hpp"
#include "chamber/numbers.hpp"

namespace chamber {

// A finite poset on opaque labels.  The strict order is kept as an explicit
// closure bitmatrix (a few thousand elements at most in this project), which
// makes comparisons, intervals and Mobius sums cheap.  Instances are
// read-only after construction.
class Poset {
public:
    Poset() = default;

    // Builds the poset generated by the given strict relations; the
    // transitive closure is computed, and a cycle (antisymmetry violation)
    // throws std::invalid_argument.
    static Poset from_less_pairs(std::vector<std::string> labels,
                                 const std::vector<std::pair<int, int>>& less);
    static Poset from_covers(std::vector<std::string> labels,
                             const std::vector<std::pair<int, int>>& covers) {
        return from_less_pairs(std::move(labels), covers);
    }

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int x) const { return labels_.at(static_cast<size_t>(x)); }
    int index_of(const std::string& label) const;  // -1 if absent

    bool less(int x, int y) const { return closure_[static_cast<size_t>(x)][static_cast<size_t>(y)]; }
    bool leq(int x, int y) const { return x == y || less(x, y); }

    // x covered-by y pairs; regenerating the closure from these gives back
    // the poset.
    std::vector<std::pair<int, int>> covers() const;
    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;

    // Induced subposets on {z : x <= z <= y} and {z : x < z < y}.
    // Throw unless x <= y.
    Poset interval(int x, int y) const;
    Poset open_interval(int x, int y) const;

    // Vertices are the poset elements, faces its chains; facets are the
    // maximal chains.
    Complex order_complex() const;

    // Mobius function via the interval recursion, computed bottom-up over
    // the interval (each value reused, no exponential recursion).  Throws
    // unless x <= y.
    std::int64_t mobius(int x, int y) const;
    // mu(x, y) for every y >= x in one pass.
    std::map<int, std::int64_t> mobius_from(int x) const;

private:
    std::vector<std::string> labels_;
    std::vector<boost::dynamic_bitset<>> closure_;  // closure_[x][y] <=> x < y

    Poset induced(const std::vector<int>& keep) const;
};

// Predicted values of -mu(empty, [+-n]) for n = 0..max_n from the real
// exponential generating function e^{-x} sech(2x), by exact rational series
// arithmetic.  Entry 0 is the (formal) constant term 1.
std::vector<Int> mobius_sequence_series(int max_n);

}  // namespace chamber
