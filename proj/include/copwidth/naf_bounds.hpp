#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "copwidth/errors.hpp"
#include "copwidth/graph.hpp"
#include "copwidth/minors.hpp"

namespace copwidth {

// ---------------------------------------------------------------------------
// Minimal unbounded natural number: exactly the operations Reitwiesner's
// recoding and the g(k) threshold need (parity, mod 4, ±small, shift, order).
// ---------------------------------------------------------------------------

class BigNat {
public:
    BigNat() = default;
    BigNat(uint64_t v) {
        if (v) limbs_.push_back(v);
    }
    /// Number with the given bit positions set.
    static BigNat with_bits(const std::vector<int>& bits) {
        BigNat out;
        int hi = 0;
        for (int b : bits) hi = std::max(hi, b);
        out.limbs_.assign(hi / 64 + 1, 0);
        for (int b : bits) out.limbs_[b / 64] |= uint64_t(1) << (b % 64);
        out.trim();
        return out;
    }

    bool is_zero() const { return limbs_.empty(); }
    int mod4() const { return limbs_.empty() ? 0 : int(limbs_[0] & 3); }
    bool odd() const { return !limbs_.empty() && (limbs_[0] & 1); }

    void add_small(uint64_t v) {
        unsigned __int128 carry = v;
        for (size_t i = 0; i < limbs_.size() && carry; ++i) {
            carry += limbs_[i];
            limbs_[i] = uint64_t(carry);
            carry >>= 64;
        }
        if (carry) limbs_.push_back(uint64_t(carry));
    }
    /// Requires *this >= v.
    void sub_small(uint64_t v) {
        if (limbs_.empty()) {
            if (v) throw std::invalid_argument("BigNat: negative result");
            return;
        }
        if (limbs_[0] >= v) {
            limbs_[0] -= v;
        } else {
            limbs_[0] = limbs_[0] + (~v + 1);  // wraps; borrow from above
            size_t i = 1;
            while (i < limbs_.size() && limbs_[i] == 0) limbs_[i++] = ~uint64_t(0);
            if (i >= limbs_.size()) throw std::invalid_argument("BigNat: negative result");
            --limbs_[i];
        }
        trim();
    }
    void shr1() {
        for (size_t i = 0; i < limbs_.size(); ++i) {
            limbs_[i] >>= 1;
            if (i + 1 < limbs_.size()) limbs_[i] |= limbs_[i + 1] << 63;
        }
        trim();
    }

    int compare(const BigNat& o) const {
        if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size() ? -1 : 1;
        for (size_t i = limbs_.size(); i-- > 0;)
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
        return 0;
    }
    bool operator<=(const BigNat& o) const { return compare(o) <= 0; }
    bool operator==(const BigNat& o) const { return compare(o) == 0; }

    int bit_length() const {
        if (limbs_.empty()) return 0;
        return int(64 * (limbs_.size() - 1) + 64 - __builtin_clzll(limbs_.back()));
    }
    bool fits_u64() const { return limbs_.size() <= 1; }
    uint64_t as_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }

    std::string to_string() const {
        if (limbs_.empty()) return "0";
        std::vector<uint64_t> work = limbs_;
        std::string digits;
        while (!work.empty()) {
            unsigned __int128 rem = 0;
            for (size_t i = work.size(); i-- > 0;) {
                unsigned __int128 cur = (rem << 64) | work[i];
                work[i] = uint64_t(cur / 10);
                rem = cur % 10;
            }
            digits.push_back(char('0' + int(rem)));
            while (!work.empty() && work.back() == 0) work.pop_back();
        }
        return std::string(digits.rbegin(), digits.rend());
    }

private:
    std::vector<uint64_t> limbs_;  // little-endian, no trailing zeros

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
};

// ---------------------------------------------------------------------------
// Non-adjacent form
// ---------------------------------------------------------------------------

/// NAF of an integer: digits over {-1,0,1}, least significant first, no two
/// adjacent nonzeros. Weight = number of nonzero digits; w(0) = 0.
struct NafForm {
    long long value = 0;
    std::vector<int8_t> digits;
    int weight = 0;
};

inline NafForm naf(long long k) {
    NafForm f;
    f.value = k;
    __int128 x = k;
    while (x != 0) {
        int8_t d = 0;
        if (x & 1) {
            int r = int(((x % 4) + 4) % 4);
            d = (r == 1) ? 1 : -1;
            x -= d;
            ++f.weight;
        }
        f.digits.push_back(d);
        x >>= 1;
    }
    return f;
}

inline int naf_weight(long long k) { return naf(k).weight; }

/// NAF weight of a big natural, via the same recoding on limbs.
inline int naf_weight(BigNat x) {
    int w = 0;
    while (!x.is_zero()) {
        if (x.odd()) {
            ++w;
            if (x.mod4() == 1)
                x.sub_small(1);
            else
                x.add_small(1);
        }
        x.shr1();
    }
    return w;
}

/// W(k) = max NAF weight over |C'| <= 4k = floor((log2(12k-1)+1)/2).
inline int naf_weight_cap(long long k) {
    if (k <= 0) throw std::invalid_argument("naf_weight_cap: k must be positive");
    unsigned long long x = 12ull * k - 1;
    int bitlen = 64 - __builtin_clzll(x);
    return bitlen / 2;
}

/// The threshold g(k) = 2^0 + 2^2 + ... + 2^{2(3k+W(k))} = (4^{3k+W(k)+1}-1)/3.
inline BigNat g_of_k(long long k) {
    if (k <= 0) throw std::invalid_argument("g_of_k: k must be positive");
    int top = int(3 * k + naf_weight_cap(k));
    std::vector<int> bits;
    for (int j = 0; j <= top; ++j) bits.push_back(2 * j);
    return BigNat::with_bits(bits);
}

struct NafLemmaReport {
    bool ok = false;              // overall verdict
    bool sufficient_ok = false;   // w(g(k)+C') > 3k for all |C'| <= 4k
    bool oracle_ran = false;
    bool oracle_ok = false;       // brute force found no sum in [g-k, g+k]
    long long oracle_exponent_cap = 0;
    long long oracle_combinations = 0;
};

/// Checks that no integer in [g(k)-k, g(k)+k] is a sum of at most 3k terms
/// ±(2^ℓ - 1). The weight-based sufficient condition is exact and
/// authoritative; the brute-force oracle (feasible for small k) additionally
/// enumerates all such sums up to an exponent cap as a sanity layer.
inline NafLemmaReport naf_lemma_check(long long k, bool run_oracle = true,
                                      long long max_combinations = 50'000'000) {
    if (k <= 0) throw std::invalid_argument("naf_lemma_check: k must be positive");
    NafLemmaReport rep;
    BigNat g = g_of_k(k);

    rep.sufficient_ok = true;
    for (long long c = -4 * k; c <= 4 * k; ++c) {
        BigNat x = g;
        if (c >= 0)
            x.add_small(uint64_t(c));
        else
            x.sub_small(uint64_t(-c));
        if (naf_weight(x) <= 3 * k) {
            rep.sufficient_ok = false;
            break;
        }
    }

    if (run_oracle) {
        if (!g.fits_u64() || g.as_u64() > (uint64_t(1) << 56))
            throw ResourceLimitError("naf_lemma_check: oracle infeasible for this k");
        long long gv = (long long)g.as_u64();
        // exponent bound: heuristic, documented as such; terms with larger
        // exponents overshoot any cancellation pattern the interval allows
        int L = 0;
        while ((1ll << (L + 1)) - 1 <= gv + k + 1 && L < 62) ++L;
        L = int(std::min<long long>(62, L + 6 * k + 2));
        rep.oracle_exponent_cap = L;
        std::vector<long long> terms;
        for (int l = 1; l <= L; ++l) terms.push_back((1ll << l) - 1);
        bool hit = false;
        long long combos = 0;
        // multisets of at most 3k signed terms, nondecreasing exponents
        auto dfs = [&](auto&& self, size_t start, int remaining, long long sum) -> void {
            if (hit) return;
            if (++combos > max_combinations)
                throw ResourceLimitError("naf_lemma_check: oracle combination cap exceeded");
            if (sum >= gv - k && sum <= gv + k) {
                hit = true;
                return;
            }
            if (remaining == 0) return;
            for (size_t i = start; i < terms.size(); ++i) {
                self(self, i, remaining - 1, sum + terms[i]);
                self(self, i, remaining - 1, sum - terms[i]);
                if (hit) return;
            }
        };
        long long zero = 0;
        // the empty sum (value 0) is also a legal "sum of at most 3k terms"
        dfs(dfs, 0, int(3 * k), zero);
        rep.oracle_ran = true;
        rep.oracle_ok = !hit;
        rep.oracle_combinations = combos;
    }
    rep.ok = rep.sufficient_ok && (!rep.oracle_ran || rep.oracle_ok);
    return rep;
}

/// |V(T')| for a subtree T' of a complete binary tree, from the minimum
/// leaf-distance h(u) of its topmost vertex and the h-values of the
/// downward neighbors: 2^{h(u)+1} - 1 - Σ_w (2^{h(w)+1} - 1).
inline long long subtree_count(int h_u, const std::vector<int>& neighbor_depths) {
    if (h_u < 0 || h_u > 61) throw std::invalid_argument("subtree_count: h out of range");
    long long total = (1ll << (h_u + 1)) - 1;
    for (int h : neighbor_depths) {
        if (h < 0 || h >= h_u) throw std::invalid_argument("subtree_count: neighbor depth out of range");
        total -= (1ll << (h + 1)) - 1;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Lower-bound certificates
// ---------------------------------------------------------------------------

struct ExpansionCertificate {
    bool certified = false;
    int a = 0, k = 0;
    std::vector<int> violating_set;  // colex-first A with |N(A)| < k on failure
};

/// Certifies bcw_1(G) > k by checking |N_G(A)| >= k for every a-subset A.
/// Enumerates a-subsets in colex order and short-circuits at the first
/// violation, which is returned as the witness.
inline ExpansionCertificate expansion_certificate(const Graph& g, int a, int k,
                                                  uint64_t max_subsets = 100'000'000) {
    if (a < 1 || a > g.n()) throw std::invalid_argument("expansion_certificate: need 1 <= a <= n");
    if (k < 1) throw std::invalid_argument("expansion_certificate: need k >= 1");
    ExpansionCertificate cert;
    cert.a = a;
    cert.k = k;
    std::vector<int> idx(a);
    for (int i = 0; i < a; ++i) idx[i] = i;
    uint64_t count = 0;
    while (true) {
        if (++count > max_subsets) throw ResourceLimitError("expansion_certificate: subset cap exceeded");
        VertexSet set = VertexSet::from(g.n(), idx);
        if (neighborhood(g, set).count() < k) {
            cert.certified = false;
            cert.violating_set = idx;
            return cert;
        }
        // colex successor
        int i = 0;
        while (i < a && idx[i] + 1 == (i + 1 < a ? idx[i + 1] : g.n())) ++i;
        if (i == a) break;
        ++idx[i];
        for (int j = 0; j < i; ++j) idx[j] = j;
    }
    cert.certified = true;
    return cert;
}

/// Lower bound from a verified balanced K_h minor model:
/// bcw_1(G) >= ceil(min(h, (h+3)/2)).
inline int lb_balanced_clique(const Graph& pattern, const Graph& host, const MinorModel& model) {
    ModelCheck chk = verify_model(pattern, host, model);
    if (!chk.ok) throw std::invalid_argument("lb_balanced_clique: invalid model: " + chk.violation);
    if (!is_balanced(model)) throw std::invalid_argument("lb_balanced_clique: model is not balanced");
    int h = pattern.n();
    if (pattern.m() != h * (h - 1) / 2) throw std::invalid_argument("lb_balanced_clique: pattern is not complete");
    return std::min(h, (h + 4) / 2);  // ceil((h+3)/2)
}

/// Shape check used by the binary-tree certificate: is G a complete binary
/// tree (for some root), and of which height?
inline bool is_complete_binary_tree(const Graph& g, int* height_out = nullptr) {
    int n = g.n();
    int h = 0;
    while ((1 << (h + 1)) - 1 < n) ++h;
    if ((1 << (h + 1)) - 1 != n || g.m() != n - 1) return false;
    if (n == 1) {
        if (height_out) *height_out = 0;
        return true;
    }
    for (int root = 0; root < n; ++root) {
        if (g.degree(root) != 2) continue;
        std::vector<int> depth(n, -1);
        depth[root] = 0;
        std::vector<int> order{root};
        bool ok = true;
        for (size_t qi = 0; qi < order.size() && ok; ++qi) {
            int u = order[qi];
            int kids = 0;
            for (int w : g.neighbors(u))
                if (depth[w] < 0) {
                    depth[w] = depth[u] + 1;
                    order.push_back(w);
                    ++kids;
                }
            if (depth[u] < h && kids != 2) ok = false;
            if (depth[u] == h && kids != 0) ok = false;
        }
        if (ok && int(order.size()) == n) {
            if (height_out) *height_out = h;
            return true;
        }
    }
    return false;
}

/// Bound as a function of the node count alone: 1 + max{k >= 1 : g(k) <= nodes}
/// (just 1 when no k qualifies).
inline int lb_bintree_nodes(long long nodes) {
    BigNat n{uint64_t(nodes)};
    int best = 0;
    for (long long k = 1;; ++k) {
        if (!(g_of_k(k) <= n)) break;
        best = int(k);
    }
    return 1 + best;
}

/// Lower bound from a verified balanced model of a complete binary tree with
/// `nodes` vertices: bcw_1 > k whenever g(k) <= nodes.
inline int lb_balanced_bintree(const Graph& pattern, const Graph& host, const MinorModel& model) {
    ModelCheck chk = verify_model(pattern, host, model);
    if (!chk.ok) throw std::invalid_argument("lb_balanced_bintree: invalid model: " + chk.violation);
    if (!is_balanced(model)) throw std::invalid_argument("lb_balanced_bintree: model is not balanced");
    if (!is_complete_binary_tree(pattern))
        throw std::invalid_argument("lb_balanced_bintree: pattern is not a complete binary tree");
    return lb_bintree_nodes(pattern.n());
}

/// One-line text record for certificates, plus optional witness files.
inline std::string certificate_record(int k, const std::string& method, int a = -1) {
    std::string s = "LB bcw1 > " + std::to_string(k) + " via " + method;
    if (a >= 0) s += " a=" + std::to_string(a);
    return s;
}

}  // namespace copwidth
