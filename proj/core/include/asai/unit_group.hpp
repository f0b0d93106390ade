#pragma once

#include <memory>
#include <vector>

#include "asai/padic.hpp"

namespace asai {

// The finite group (O_K / pi^n)^x presented as mu_{q-1} x (1 + pi)/(1 + pi^n)
// with a fixed generator list and a discrete-log table over residue keys.
class UnitGroup {
public:
    // Shared, memoized instance. Construction is deterministic, so the cache is
    // invisible to callers apart from speed.
    static std::shared_ptr<const UnitGroup> get(const LocalField& K, int n);

    UnitGroup(const LocalField& K, int n);

    const LocalField& field() const { return K_; }
    int level() const { return n_; }
    i64 size() const { return size_; }
    const std::vector<i64>& generators() const { return gens_; }
    const std::vector<i64>& orders() const { return orders_; }

    i64 one() const { return one_; }
    i64 mul(i64 x, i64 y) const;
    i64 pow(i64 x, i64 e) const;
    bool is_unit(i64 key) const;
    // Exponents of key with respect to generators().
    std::vector<i64> dlog(i64 key) const;
    i64 key_of(const EElem& unit) const { return K_.residue_key(unit, n_); }
    i64 reduce_to(i64 key, int m) const;
    std::vector<i64> elements() const;

private:
    LocalField K_;
    int n_;
    int A_ = 0, B_ = 0;
    i64 pA_ = 1, pB_ = 1, d_ = 1;
    i64 one_ = 1;
    i64 size_ = 1;
    std::vector<i64> gens_;
    std::vector<i64> orders_;
    std::vector<i64> strides_;
    std::vector<std::int32_t> index_;  // residue key -> packed exponent vector, -1 for non-units

    i64 order_of(i64 x) const;
};

}  // namespace asai
