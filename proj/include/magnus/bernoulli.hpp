#ifndef MAGNUS_BERNOULLI_HPP
#define MAGNUS_BERNOULLI_HPP

#include <mutex>
#include <vector>

#include <magnus/rational.hpp>

namespace magnus
{

// Memoized Bernoulli numbers in the "plus" convention (B_1 = +1/2),
// built from sum_{j=0}^{m} C(m+1, j) B_j = 0. Safe for concurrent use.
class BernoulliTable
{
public:
    Rational get(unsigned r);

    static BernoulliTable &global();

private:
    void extend_to(unsigned r);

    std::mutex mutex_;
    std::vector<Rational> minus_; // B_r with B_1 = -1/2
};

Rational bernoulli(unsigned r);

} // namespace magnus

#endif
