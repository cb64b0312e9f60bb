#pragma once

// Integer partitions and bipartitions in exponent notation, together with
// the arithmetic weights of the closed-form sums: Moebius function,
// divisors, multinomials and conjugacy class sizes in S_n and in the
// hyperoctahedral group.

#include <compare>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chvar/rational.hpp"

namespace chvar {

// A partition of n in exponent notation [1^{k_1} 2^{k_2} ... ]: the map
// holds part size -> multiplicity, zero multiplicities omitted.
class Partition {
public:
    Partition() = default; // empty partition of 0

    explicit Partition(const std::map<int, int>& parts) {
        for (const auto& [size, mult] : parts) {
            if (size < 1) throw std::domain_error("partition part size must be >= 1");
            if (mult < 0) throw std::domain_error("negative part multiplicity");
            if (mult == 0) continue;
            mult_[size] = mult;
            total_ += size * mult;
        }
    }

    // Partition({{1, 2}, {3, 1}}) is [1^2 3^1]; repeated sizes accumulate.
    Partition(std::initializer_list<std::pair<int, int>> parts) {
        std::map<int, int> collected;
        for (const auto& [size, mult] : parts) collected[size] += mult;
        *this = Partition(collected);
    }

    int total() const { return total_; }

    // number of parts |[k]|
    int length() const {
        int len = 0;
        for (const auto& [size, mult] : mult_) len += mult;
        return len;
    }

    int mult(int size) const {
        auto it = mult_.find(size);
        return it == mult_.end() ? 0 : it->second;
    }

    const std::map<int, int>& parts() const { return mult_; }

    bool empty() const { return mult_.empty(); }

    // "1^2 2^1"; empty string for the empty partition
    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [size, mult] : mult_) {
            if (!first) os << ' ';
            os << size << '^' << mult;
            first = false;
        }
        return os.str();
    }

    // Whitespace-separated "j^k" tokens; a bare "j" means j^1. Repeated
    // sizes accumulate.
    static Partition parse(const std::string& text) {
        std::map<int, int> parts;
        std::istringstream is(text);
        std::string token;
        while (is >> token) {
            size_t caret = token.find('^');
            int size = 0, mult = 1;
            try {
                size_t used = 0;
                size = std::stoi(token.substr(0, caret), &used);
                if (used != (caret == std::string::npos ? token.size() : caret))
                    throw std::invalid_argument(token);
                if (caret != std::string::npos) {
                    mult = std::stoi(token.substr(caret + 1), &used);
                    if (used != token.size() - caret - 1)
                        throw std::invalid_argument(token);
                }
            } catch (const std::exception&) {
                throw std::domain_error("malformed partition token '" + token + "'");
            }
            if (size < 1 || mult < 1)
                throw std::domain_error("partition token '" + token +
                                        "' must have positive size and multiplicity");
            parts[size] += mult;
        }
        return Partition(parts);
    }

    auto operator<=>(const Partition&) const = default;

private:
    int total_ = 0;
    std::map<int, int> mult_;
};

struct Bipartition {
    Partition a;
    Partition b;

    int total() const { return a.total() + b.total(); }

    auto operator<=>(const Bipartition&) const = default;
};

namespace detail {
inline void partitions_rec(int remaining, int max_part, std::map<int, int>& current,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        ++current[part];
        partitions_rec(remaining - part, part, current, out);
        if (--current[part] == 0) current.erase(part);
    }
}
} // namespace detail

// All partitions of n, each once. Order: decreasing lexicographic on the
// non-increasing part sequences, so [n] first and [1^n] last.
// partitions(0) = {empty partition}.
inline std::vector<Partition> partitions(int n) {
    if (n < 0) throw std::domain_error("partitions of a negative integer");
    std::vector<Partition> out;
    std::map<int, int> current;
    detail::partitions_rec(n, n == 0 ? 1 : n, current, out);
    return out;
}

// All ([a],[b]) with [a] a partition of k, [b] of n-k, for k = 0..n, in that
// order; within each k both factors follow the partitions() order.
inline std::vector<Bipartition> bipartitions(int n) {
    if (n < 0) throw std::domain_error("bipartitions of a negative integer");
    std::vector<Bipartition> out;
    for (int k = 0; k <= n; ++k) {
        for (const auto& a : partitions(k))
            for (const auto& b : partitions(n - k)) out.push_back(Bipartition{a, b});
    }
    return out;
}

inline int moebius(int n) {
    if (n < 1) throw std::domain_error("moebius requires n >= 1");
    int prime_count = 0;
    for (int p = 2; static_cast<long>(p) * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0; // square factor
            ++prime_count;
        }
    }
    if (n > 1) ++prime_count;
    return prime_count % 2 == 0 ? 1 : -1;
}

inline std::vector<int> divisors(int n) {
    if (n < 1) throw std::domain_error("divisors requires n >= 1");
    std::vector<int> small, large;
    for (int d = 1; static_cast<long>(d) * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline Integer factorial(int n) {
    if (n < 0) throw std::domain_error("factorial of a negative integer");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Integer int_pow(const Integer& base, int e) {
    if (e < 0) throw std::domain_error("negative integer power");
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// total! / (parts[0]! * parts[1]! * ...), requiring sum(parts) == total.
inline Integer multinomial(int total, const std::vector<int>& parts) {
    long sum = 0;
    for (int p : parts) {
        if (p < 0) throw std::domain_error("negative multinomial part");
        sum += p;
    }
    if (sum != total)
        throw std::domain_error("multinomial parts do not sum to the total");
    Integer r = factorial(total);
    for (int p : parts) r /= factorial(p);
    return r;
}

// |conjugacy class| of cycle type p in S_n: n! / prod_j j^{k_j} k_j!.
inline Integer sn_class_size(const Partition& p) {
    Integer centralizer = 1;
    for (const auto& [size, mult] : p.parts())
        centralizer *= int_pow(size, mult) * factorial(mult);
    return factorial(p.total()) / centralizer;
}

// |conjugacy class| of signed cycle type [a,b] in the hyperoctahedral group
// of order 2^n n!; the centralizer of a signed cycle type is
// prod_i (2i)^{a_i} a_i! * prod_j (2j)^{b_j} b_j!.
inline Integer hyperoct_class_size(const Bipartition& bp) {
    int n = bp.total();
    Integer centralizer = 1;
    for (const auto& [size, mult] : bp.a.parts())
        centralizer *= int_pow(2 * size, mult) * factorial(mult);
    for (const auto& [size, mult] : bp.b.parts())
        centralizer *= int_pow(2 * size, mult) * factorial(mult);
    return (int_pow(2, n) * factorial(n)) / centralizer;
}

} // namespace chvar
