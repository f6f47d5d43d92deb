#include <magnus/bernoulli.hpp>

namespace magnus
{

void BernoulliTable::extend_to(unsigned r)
{
    if (minus_.empty()) {
        minus_.emplace_back(1);
    }
    for (unsigned m = static_cast<unsigned>(minus_.size()); m <= r; ++m) {
        Rational sum;
        for (unsigned j = 0; j < m; ++j) {
            if (!minus_[j].is_zero()) {
                sum += Rational(binomial(m + 1, j)) * minus_[j];
            }
        }
        minus_.push_back(-sum / Rational(static_cast<std::int64_t>(m) + 1));
    }
}

Rational BernoulliTable::get(unsigned r)
{
    std::lock_guard lock(mutex_);
    extend_to(r);
    if (r == 1) {
        return -minus_[1];
    }
    return minus_[r];
}

BernoulliTable &BernoulliTable::global()
{
    static BernoulliTable table;
    return table;
}

Rational bernoulli(unsigned r)
{
    return BernoulliTable::global().get(r);
}

} // namespace magnus
