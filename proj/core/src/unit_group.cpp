#include "asai/unit_group.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace asai {

namespace {
constexpr i64 kMaxKeys = 40'000'000;
}

std::shared_ptr<const UnitGroup> UnitGroup::get(const LocalField& K, int n) {
    using Key = std::tuple<i64, int, int, int>;
    static std::mutex mu;
    static std::map<Key, std::shared_ptr<const UnitGroup>> cache;
    Key k{K.p(), static_cast<int>(K.ext()), K.precision(), n};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
    }
    auto g = std::make_shared<const UnitGroup>(K, n);
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(k, g);
    return it->second;
}

UnitGroup::UnitGroup(const LocalField& K, int n) : K_(K), n_(n) {
    if (n < 0) throw DomainError("unit group level must be non-negative");
    if (n > K.precision()) throw PrecisionError("unit group level exceeds working precision");
    auto [A, B] = K.residue_shape(n);
    A_ = A;
    B_ = B;
    pA_ = ipow(K.p(), A);
    pB_ = ipow(K.p(), B);
    d_ = K.is_E() ? K.d() : 0;
    const i64 nkeys = pA_ * pB_;
    if (nkeys > kMaxKeys) throw PrecisionError("unit group too large to tabulate");
    one_ = n == 0 ? 0 : 1 % pA_;
    if (n == 0) {
        index_.assign(1, 0);
        size_ = 1;
        return;
    }

    const i64 q = K.q();
    // Teichmueller generator: a generator of the residue field, raised to q^(n-1).
    i64 tau = -1;
    {
        std::vector<i64> cand;
        for (i64 k = 0; k < nkeys; ++k)
            if (k % pA_ < K.p() && k / pA_ < ipow(K.p(), K.residue_shape(1).second) && is_unit(k)) cand.push_back(k);
        for (i64 c : cand) {
            i64 x = c, ord = 1;
            while (reduce_to(x, 1) != reduce_to(one_, 1)) {
                x = mul(x, c);
                ++ord;
            }
            if (ord == q - 1) {
                tau = pow(c, ipow(q, n - 1));
                break;
            }
        }
    }
    if (q - 1 > 1) {
        gens_.push_back(tau);
        orders_.push_back(q - 1);
    }

    // principal units: greedy basis of a finite abelian p-group
    std::vector<i64> H;
    for (i64 k = 0; k < nkeys; ++k)
        if (reduce_to(k, 1) == reduce_to(one_, 1)) H.push_back(k);
    std::vector<char> inS(static_cast<size_t>(nkeys), 0);
    std::vector<i64> S{one_};
    inS[static_cast<size_t>(one_)] = 1;
    const i64 p = K.p();
    while (static_cast<i64>(S.size()) < static_cast<i64>(H.size())) {
        i64 best = -1, bestq = 1;
        for (i64 h : H) {
            i64 qo = 1, x = h;
            while (!inS[static_cast<size_t>(x)]) {
                x = pow(x, p);
                qo *= p;
            }
            if (qo > bestq && order_of(h) == qo) {
                bestq = qo;
                best = h;
            }
        }
        if (best < 0) throw std::logic_error("UnitGroup: greedy basis failed");
        std::vector<i64> S2;
        S2.reserve(S.size() * static_cast<size_t>(bestq));
        i64 hp = one_;
        for (i64 e = 0; e < bestq; ++e) {
            for (i64 s : S) S2.push_back(mul(s, hp));
            hp = mul(hp, best);
        }
        S = std::move(S2);
        for (i64 s : S) inS[static_cast<size_t>(s)] = 1;
        gens_.push_back(best);
        orders_.push_back(bestq);
    }

    strides_.assign(gens_.size(), 1);
    size_ = 1;
    for (size_t j = 0; j < gens_.size(); ++j) {
        strides_[j] = size_;
        size_ *= orders_[j];
    }
    index_.assign(static_cast<size_t>(nkeys), -1);
    std::vector<std::pair<i64, i64>> elems{{one_, 0}};
    for (size_t j = 0; j < gens_.size(); ++j) {
        std::vector<std::pair<i64, i64>> next;
        next.reserve(elems.size() * static_cast<size_t>(orders_[j]));
        i64 gp = one_;
        for (i64 e = 0; e < orders_[j]; ++e) {
            for (auto [k, idx] : elems) next.emplace_back(mul(k, gp), idx + e * strides_[j]);
            gp = mul(gp, gens_[j]);
        }
        elems = std::move(next);
    }
    for (auto [k, idx] : elems) {
        if (index_[static_cast<size_t>(k)] != -1) throw std::logic_error("UnitGroup: generators not independent");
        index_[static_cast<size_t>(k)] = static_cast<std::int32_t>(idx);
    }
}

i64 UnitGroup::mul(i64 x, i64 y) const {
    if (n_ == 0) return 0;
    i64 a1 = x % pA_, b1 = x / pA_, a2 = y % pA_, b2 = y / pA_;
    i64 a = (mulmod(a1, a2, pA_) + mulmod(mulmod(d_ % pA_, b1, pA_), b2, pA_)) % pA_;
    i64 b = pB_ == 1 ? 0 : (mulmod(a1, b2, pB_) + mulmod(a2, b1, pB_)) % pB_;
    return a + pA_ * b;
}

i64 UnitGroup::pow(i64 x, i64 e) const {
    i64 r = one_;
    while (e > 0) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

// order of an element of the pro-p part
i64 UnitGroup::order_of(i64 x) const {
    const i64 p = K_.p();
    i64 o = 1, y = x;
    while (y != one_) {
        y = pow(y, p);
        o *= p;
    }
    return o;
}

bool UnitGroup::is_unit(i64 key) const { return K_.key_is_unit(key, n_); }

std::vector<i64> UnitGroup::dlog(i64 key) const {
    if (key < 0 || key >= static_cast<i64>(index_.size())) throw DomainError("dlog: key out of range");
    std::int32_t idx = index_[static_cast<size_t>(key)];
    if (idx < 0) throw DomainError("dlog: not a unit");
    std::vector<i64> out(gens_.size());
    for (size_t j = 0; j < gens_.size(); ++j) out[j] = (idx / strides_[j]) % orders_[j];
    return out;
}

i64 UnitGroup::reduce_to(i64 key, int m) const {
    if (m > n_) throw DomainError("reduce_to: target level above group level");
    auto [A, B] = K_.residue_shape(m);
    i64 pa = ipow(K_.p(), A), pb = ipow(K_.p(), B);
    i64 a = key % pA_, b = key / pA_;
    return (a % pa) + pa * (b % pb);
}

std::vector<i64> UnitGroup::elements() const {
    std::vector<i64> out;
    out.reserve(static_cast<size_t>(size_));
    for (i64 k = 0; k < static_cast<i64>(index_.size()); ++k)
        if (index_[static_cast<size_t>(k)] >= 0) out.push_back(k);
    return out;
}

}  // namespace asai
