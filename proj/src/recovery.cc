// Copyright 2026 The subsys Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "subsys/recovery.h"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "subsys/errors.h"
#include "subsys/gf2.h"

namespace subsys {

namespace {

void check_grid(const SubsystemCode &code, const PauliGrid &op, const char *what) {
    if (op.n1() != code.n1() || op.n2() != code.n2()) {
        throw DimensionMismatch(std::string(what) + ": operator grid " + shape_str(op.n1(), op.n2()) +
                                " on code grid " + shape_str(code.n1(), code.n2()));
    }
}

// Flattened per-site contribution to (syndrome, logical) content; the
// search XORs these instead of rebuilding operators.
struct SiteSignatures {
    std::size_t words = 0;
    std::vector<std::uint64_t> syndrome_mask;
    std::vector<std::uint64_t> data;  // [site][pauli 0..2][word]

    const std::uint64_t *at(std::size_t site, std::size_t pauli) const {
        return data.data() + (site * 3 + pauli) * words;
    }
};

void append_bits(const BitMatrix &m, std::vector<bool> &out) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out.push_back(m.get(r, c));
        }
    }
}

SiteSignatures site_signatures(const SubsystemCode &code) {
    static constexpr char kPaulis[] = {'X', 'Z', 'Y'};
    SiteSignatures sig;
    const auto syndrome_bits = code.counts().stabilizers();
    const auto total_bits = syndrome_bits + 2 * code.k();
    sig.words = words_for_bits(total_bits);
    sig.syndrome_mask.assign(sig.words, 0);
    for (std::size_t i = 0; i < syndrome_bits; ++i) {
        sig.syndrome_mask[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
    }
    sig.data.assign(code.n() * 3 * sig.words, 0);
    for (std::size_t r = 0; r < code.n1(); ++r) {
        for (std::size_t c = 0; c < code.n2(); ++c) {
            const auto site = r * code.n2() + c;
            for (std::size_t p = 0; p < 3; ++p) {
                auto d = decompose(code, PauliGrid::single(code.n1(), code.n2(), r, c, kPaulis[p]));
                std::vector<bool> bits;
                append_bits(d.v_c, bits);
                append_bits(d.u_c, bits);
                append_bits(d.u, bits);
                append_bits(d.v, bits);
                auto *dst = sig.data.data() + (site * 3 + p) * sig.words;
                for (std::size_t i = 0; i < bits.size(); ++i) {
                    if (bits[i]) {
                        dst[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
                    }
                }
            }
        }
    }
    return sig;
}

// Depth-first search over site subsets of exactly `weight` sites with
// increasing site index, three Paulis per site.
class WeightSearch {
   public:
    WeightSearch(const SiteSignatures &sig, std::size_t sites, std::size_t weight, const std::atomic<bool> &stop)
        : sig_(sig), sites_(sites), weight_(weight), stop_(stop), stack_((weight + 1) * sig.words, 0) {}

    bool run_from(std::size_t first_site) { return visit(0, first_site, true); }

   private:
    bool visit(std::size_t depth, std::size_t start, bool fixed_first) {
        if (depth == weight_) {
            return nontrivial_logical(level(depth));
        }
        if (stop_.load(std::memory_order_relaxed)) {
            return false;
        }
        const auto end = fixed_first ? start + 1 : sites_ - (weight_ - depth - 1);
        for (std::size_t site = start; site < end; ++site) {
            for (std::size_t p = 0; p < 3; ++p) {
                const auto *src = sig_.at(site, p);
                const auto *cur = level(depth);
                auto *next = level(depth + 1);
                for (std::size_t w = 0; w < sig_.words; ++w) {
                    next[w] = cur[w] ^ src[w];
                }
                if (visit(depth + 1, site + 1, false)) {
                    return true;
                }
            }
        }
        return false;
    }

    bool nontrivial_logical(const std::uint64_t *acc) const {
        bool any_logical = false;
        for (std::size_t w = 0; w < sig_.words; ++w) {
            if ((acc[w] & sig_.syndrome_mask[w]) != 0) {
                return false;
            }
            any_logical |= (acc[w] & ~sig_.syndrome_mask[w]) != 0;
        }
        return any_logical;
    }

    std::uint64_t *level(std::size_t depth) { return stack_.data() + depth * sig_.words; }

    const SiteSignatures &sig_;
    std::size_t sites_;
    std::size_t weight_;
    const std::atomic<bool> &stop_;
    std::vector<std::uint64_t> stack_;
};

bool exists_at_weight(const SiteSignatures &sig, std::size_t sites, std::size_t weight, std::size_t workers) {
    std::atomic<bool> found{false};
    const auto first_sites = sites - weight + 1;
    auto work = [&](std::size_t worker) {
        WeightSearch search(sig, sites, weight, found);
        for (std::size_t first = worker; first < first_sites && !found.load(); first += workers) {
            if (search.run_from(first)) {
                found.store(true);
            }
        }
    };
    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t i = 0; i < workers; ++i) {
            threads.emplace_back(work, i);
        }
        for (auto &t : threads) {
            t.join();
        }
    }
    return found.load();
}

}  // namespace

Syndrome extract_syndrome(const SubsystemCode &code, const PauliGrid &error) {
    check_grid(code, error, "extract_syndrome");
    return {mat_mul(mat_mul(code.c1().parity(), error.x_part()), code.g2_transposed()),
            mat_mul(mat_mul(code.c1().generator(), error.z_part()), code.p2_transposed())};
}

Syndrome syndrome_by_commutation(const SubsystemCode &code, const PauliGrid &error) {
    check_grid(code, error, "syndrome_by_commutation");
    const auto k1 = code.c1().k();
    const auto k2 = code.c2().k();
    Syndrome s{BitMatrix(code.c1().redundancy(), k2), BitMatrix(k1, code.c2().redundancy())};
    auto zs = code.z_stabilizers();
    for (std::size_t i = 0; i < zs.size(); ++i) {
        s.s_z.set(i / k2, i % k2, !commutes(zs[i], error));
    }
    auto xs = code.x_stabilizers();
    const auto r2 = code.c2().redundancy();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        s.s_x.set(i / r2, i % r2, !commutes(xs[i], error));
    }
    return s;
}

PauliGrid decode_bitflip(const SubsystemCode &code, const BitMatrix &s_z) {
    const auto &c1 = code.c1();
    const auto k2 = code.c2().k();
    if (s_z.rows() != c1.redundancy() || s_z.cols() != k2) {
        throw DimensionMismatch("decode_bitflip: syndrome " + shape_str(s_z.rows(), s_z.cols()) + ", expected " +
                                shape_str(c1.redundancy(), k2));
    }
    BitMatrix columns(c1.n(), k2);
    for (std::size_t b = 0; b < k2; ++b) {
        columns.set_col(b, c1.decode(s_z.col(b)));
    }
    return PauliGrid::x_type(mat_mul(columns, code.c2().parity_complement()));
}

PauliGrid decode_phaseflip(const SubsystemCode &code, const BitMatrix &s_x) {
    const auto &c2 = code.c2();
    const auto k1 = code.c1().k();
    if (s_x.rows() != k1 || s_x.cols() != c2.redundancy()) {
        throw DimensionMismatch("decode_phaseflip: syndrome " + shape_str(s_x.rows(), s_x.cols()) +
                                ", expected " + shape_str(k1, c2.redundancy()));
    }
    BitMatrix rows(k1, c2.n());
    for (std::size_t a = 0; a < k1; ++a) {
        rows.set_row(a, c2.decode(s_x.row(a)));
    }
    return PauliGrid::z_type(mat_mul(code.c1().parity_complement().transposed(), rows));
}

RecoveryOutcome recover(const SubsystemCode &code, const PauliGrid &error) {
    check_grid(code, error, "recover");
    auto syndrome = extract_syndrome(code, error);
    auto correction = multiply(decode_bitflip(code, syndrome.s_z), decode_phaseflip(code, syndrome.s_x));
    auto residual = multiply(error, correction);
    // Only the logical blocks of decompose(residual) are needed here.
    auto u = mat_mul(mat_mul(code.c1().generator(), residual.z_part()), code.p2c_transposed());
    auto v = mat_mul(mat_mul(code.c1().parity_complement(), residual.x_part()), code.g2_transposed());
    bool ok = u.is_zero() && v.is_zero();
    return {std::move(correction), std::move(u), std::move(v), ok};
}

RecoveryOutcome recover_shor(const ShorCode &code, const PauliGrid &error) {
    const auto &c1 = code.c1();
    const auto &c2 = code.c2();
    if (error.n1() != c1.n() || error.n2() != c2.n()) {
        throw DimensionMismatch("recover_shor: operator grid " + shape_str(error.n1(), error.n2()) +
                                " on code grid " + shape_str(c1.n(), c2.n()));
    }
    auto column_syndromes = mat_mul(c1.parity(), error.x_part());
    BitMatrix x_fix(c1.n(), c2.n());
    for (std::size_t j = 0; j < c2.n(); ++j) {
        x_fix.set_col(j, c1.decode(column_syndromes.col(j)));
    }
    auto s_x = mat_mul(mat_mul(c1.generator(), error.z_part()), c2.parity().transposed());
    BitMatrix z_rows(c1.k(), c2.n());
    for (std::size_t a = 0; a < c1.k(); ++a) {
        z_rows.set_row(a, c2.decode(s_x.row(a)));
    }
    auto correction = PauliGrid(mat_mul(c1.parity_complement().transposed(), z_rows), std::move(x_fix));
    auto residual = multiply(error, correction);
    auto u = mat_mul(mat_mul(c1.generator(), residual.z_part()), c2.parity_complement().transposed());
    auto v = mat_mul(mat_mul(c1.parity_complement(), residual.x_part()), c2.generator().transposed());
    bool ok = u.is_zero() && v.is_zero();
    return {std::move(correction), std::move(u), std::move(v), ok};
}

std::uint64_t distance_candidate_count(std::size_t n, std::size_t w_max) {
    constexpr auto kSaturate = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    std::uint64_t term = 1;  // C(n, w) 3^w
    for (std::size_t w = 0; w <= std::min(w_max, n); ++w) {
        if (w > 0) {
            // C(n, w) 3^w = C(n, w-1) 3^{w-1} * 3 (n-w+1) / w, exact in this order.
            const auto factor = 3 * static_cast<std::uint64_t>(n - w + 1);
            if (term > kSaturate / factor) {
                return kSaturate;
            }
            term = term * factor / w;
        }
        if (total > kSaturate - term) {
            return kSaturate;
        }
        total += term;
    }
    return total;
}

std::optional<std::size_t> distance_bruteforce(const SubsystemCode &code, std::size_t w_max, std::size_t workers) {
    const auto candidates = distance_candidate_count(code.n(), w_max);
    if (candidates > kMaxDistanceCandidates) {
        throw SearchLimitExceeded("distance_bruteforce: " + std::to_string(candidates) +
                                  " candidates for w_max = " + std::to_string(w_max) + " exceeds limit " +
                                  std::to_string(kMaxDistanceCandidates));
    }
    if (code.k() == 0) {
        return std::nullopt;
    }
    const auto sig = site_signatures(code);
    workers = std::max<std::size_t>(workers, 1);
    for (std::size_t w = 1; w <= std::min(w_max, code.n()); ++w) {
        if (exists_at_weight(sig, code.n(), w, workers)) {
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace subsys
