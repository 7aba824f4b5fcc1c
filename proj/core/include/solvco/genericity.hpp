#ifndef SOLVCO_GENERICITY_HPP
#define SOLVCO_GENERICITY_HPP

#include <set>
#include <string>

#include "solvco/scalar.hpp"

namespace solvco {

// Collects the polynomial non-vanishing conditions assumed by rank
// computations over parameterized scalars (the pivot numerators).
// Install a scope where a report wants the assumptions surfaced;
// recording is a no-op without an active scope.
class GenericityLog {
public:
    const std::set<std::string>& assumptions() const { return assumptions_; }
    void add(const std::string& condition) { assumptions_.insert(condition); }

private:
    std::set<std::string> assumptions_;
};

class GenericityScope {
public:
    explicit GenericityScope(GenericityLog& log);
    ~GenericityScope();
    GenericityScope(const GenericityScope&) = delete;
    GenericityScope& operator=(const GenericityScope&) = delete;

    // Records a pivot numerator when it actually constrains parameters.
    static void record_pivot(const ScalarValue& pivot);

private:
    GenericityLog* previous_;
};

} // namespace solvco

#endif
