#include "myb/tensor3.hpp"

#include <stdexcept>

namespace myb {

SparseTensor3::SparseTensor3(long long dim) : dim_(dim) {
    if (dim < 0)
        throw std::invalid_argument("SparseTensor3: negative dimension");
}

void SparseTensor3::check_index(long long i, long long j, long long k) const {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_ || k < 0 || k >= dim_)
        throw std::out_of_range("SparseTensor3: index outside [0, dim)");
}

void SparseTensor3::set(long long i, long long j, long long k, const Rational& c) {
    check_index(i, j, k);
    if (c == 0)
        entries_.erase({i, j, k});
    else
        entries_[{i, j, k}] = c;
}

void SparseTensor3::add(long long i, long long j, long long k, const Rational& c) {
    check_index(i, j, k);
    auto it = entries_.find({i, j, k});
    if (it == entries_.end()) {
        if (c != 0)
            entries_[{i, j, k}] = c;
        return;
    }
    it->second += c;
    if (it->second == 0)
        entries_.erase(it);
}

const Rational& SparseTensor3::get(long long i, long long j, long long k) const {
    static const Rational zero(0);
    check_index(i, j, k);
    auto it = entries_.find({i, j, k});
    return it == entries_.end() ? zero : it->second;
}

}  // namespace myb
