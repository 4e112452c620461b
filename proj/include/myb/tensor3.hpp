#ifndef MYB_TENSOR3_HPP
#define MYB_TENSOR3_HPP

#include "myb/rational.hpp"

#include <array>
#include <map>

namespace myb {

// Sparse order-3 tensor of structure constants c_ij^k.  Zero entries are
// never stored, so equality is canonical map equality.
class SparseTensor3 {
public:
    using Key = std::array<long long, 3>;
    using Map = std::map<Key, Rational>;

    SparseTensor3() : dim_(0) {}
    explicit SparseTensor3(long long dim);

    long long dim() const { return dim_; }

    void set(long long i, long long j, long long k, const Rational& c);
    void add(long long i, long long j, long long k, const Rational& c);
    const Rational& get(long long i, long long j, long long k) const;

    const Map& entries() const { return entries_; }

    bool operator==(const SparseTensor3& o) const {
        return dim_ == o.dim_ && entries_ == o.entries_;
    }
    bool operator!=(const SparseTensor3& o) const { return !(*this == o); }

private:
    void check_index(long long i, long long j, long long k) const;

    long long dim_;
    Map entries_;
};

}  // namespace myb

#endif
