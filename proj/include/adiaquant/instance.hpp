// Copyright 2026 The adiaquant Authors
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

/**
 * @file
 * Satisfiability instances over a small clause vocabulary, their classical
 * energy function, an exhaustive ground-truth solver and the `p asat` text
 * format.
 *
 * Bits are labelled 1..n. Basis index convention used across the library:
 * index(z) = sum_k z_k * 2^(n-k), i.e. bit 1 is the most significant.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "adiaquant/common.hpp"

namespace adiaquant {

using BasisIndex = std::uint64_t;

/// Mask selecting 1-based bit `k` of an n-bit basis index.
constexpr BasisIndex bit_mask(unsigned n, unsigned k) { return BasisIndex{1} << (n - k); }

/// Value of 1-based bit `k` in basis index `z`.
constexpr unsigned bit_value(unsigned n, BasisIndex z, unsigned k) {
    return static_cast<unsigned>((z >> (n - k)) & 1u);
}

namespace clause {

struct Agree {
    unsigned i = 0, j = 0;
    bool operator==(const Agree &) const = default;
};

struct Disagree {
    unsigned i = 0, j = 0;
    bool operator==(const Disagree &) const = default;
};

/// premise -> conclusion; violated only by premise=1, conclusion=0.
struct Imply {
    unsigned premise = 0, conclusion = 0;
    bool operator==(const Imply &) const = default;
};

/// Disjunction of up to three signed literals (+i is z_i, -i is its negation).
struct Or {
    std::vector<int> literals;
    bool operator==(const Or &) const = default;
};

/// Satisfied iff z_i == value.
struct OneBit {
    unsigned i = 0;
    unsigned value = 0;
    bool operator==(const OneBit &) const = default;
};

/// Satisfied only by the n-bit target string; must be the sole clause.
struct GroverOracle {
    std::vector<std::uint8_t> target;
    bool operator==(const GroverOracle &) const = default;
};

} // namespace clause

using ClauseKind = std::variant<clause::Agree, clause::Disagree, clause::Imply, clause::Or,
                                clause::OneBit, clause::GroverOracle>;

/// Distinct bits touched by a clause, ascending. GroverOracle touches all n.
inline std::vector<unsigned> clause_bits(const ClauseKind &c, unsigned n) {
    std::vector<unsigned> bits = std::visit(
        [n](const auto &cl) -> std::vector<unsigned> {
            using T = std::decay_t<decltype(cl)>;
            if constexpr (std::is_same_v<T, clause::Agree> || std::is_same_v<T, clause::Disagree>) {
                return {cl.i, cl.j};
            } else if constexpr (std::is_same_v<T, clause::Imply>) {
                return {cl.premise, cl.conclusion};
            } else if constexpr (std::is_same_v<T, clause::Or>) {
                std::vector<unsigned> out;
                for (int lit : cl.literals) {
                    out.push_back(static_cast<unsigned>(lit < 0 ? -lit : lit));
                }
                return out;
            } else if constexpr (std::is_same_v<T, clause::OneBit>) {
                return {cl.i};
            } else {
                std::vector<unsigned> out(n);
                for (unsigned k = 0; k < n; ++k) {
                    out[k] = k + 1;
                }
                return out;
            }
        },
        c);
    std::sort(bits.begin(), bits.end());
    bits.erase(std::unique(bits.begin(), bits.end()), bits.end());
    return bits;
}

/// Throws InvalidClause unless the clause is well formed for an n-bit instance.
inline void validate_clause(const ClauseKind &c, unsigned n) {
    auto in_range = [n](long long b) { return b >= 1 && b <= static_cast<long long>(n); };
    auto fail = [](const std::string &msg) { throw Error(ErrorKind::InvalidClause, msg); };
    std::visit(
        [&](const auto &cl) {
            using T = std::decay_t<decltype(cl)>;
            if constexpr (std::is_same_v<T, clause::Agree> || std::is_same_v<T, clause::Disagree>) {
                if (!in_range(cl.i) || !in_range(cl.j)) fail("bit index out of range");
                if (cl.i == cl.j) fail("two-bit clause must reference distinct bits");
            } else if constexpr (std::is_same_v<T, clause::Imply>) {
                if (!in_range(cl.premise) || !in_range(cl.conclusion)) fail("bit index out of range");
                if (cl.premise == cl.conclusion) fail("imply must reference distinct bits");
            } else if constexpr (std::is_same_v<T, clause::Or>) {
                if (cl.literals.empty() || cl.literals.size() > 3) fail("or takes one to three literals");
                for (int lit : cl.literals) {
                    if (lit == 0 || !in_range(lit < 0 ? -static_cast<long long>(lit) : lit)) {
                        fail("literal out of range");
                    }
                }
            } else if constexpr (std::is_same_v<T, clause::OneBit>) {
                if (!in_range(cl.i)) fail("bit index out of range");
                if (cl.value > 1) fail("one-bit clause value must be 0 or 1");
            } else {
                if (cl.target.size() != n) fail("grover target must have n bits");
                for (auto b : cl.target) {
                    if (b > 1) fail("grover target must be a bit string");
                }
            }
        },
        c);
}

/// Clause energy on basis index z of an n-bit register: 0 if satisfied, else 1.
inline unsigned clause_energy_index(const ClauseKind &c, unsigned n, BasisIndex z) {
    return std::visit(
        [n, z](const auto &cl) -> unsigned {
            using T = std::decay_t<decltype(cl)>;
            if constexpr (std::is_same_v<T, clause::Agree>) {
                return bit_value(n, z, cl.i) != bit_value(n, z, cl.j) ? 1u : 0u;
            } else if constexpr (std::is_same_v<T, clause::Disagree>) {
                return bit_value(n, z, cl.i) == bit_value(n, z, cl.j) ? 1u : 0u;
            } else if constexpr (std::is_same_v<T, clause::Imply>) {
                return (bit_value(n, z, cl.premise) == 1 && bit_value(n, z, cl.conclusion) == 0) ? 1u : 0u;
            } else if constexpr (std::is_same_v<T, clause::Or>) {
                for (int lit : cl.literals) {
                    unsigned b = bit_value(n, z, static_cast<unsigned>(lit < 0 ? -lit : lit));
                    if ((lit > 0 && b == 1) || (lit < 0 && b == 0)) {
                        return 0u;
                    }
                }
                return 1u;
            } else if constexpr (std::is_same_v<T, clause::OneBit>) {
                return bit_value(n, z, cl.i) == cl.value ? 0u : 1u;
            } else {
                for (unsigned k = 1; k <= n; ++k) {
                    if (bit_value(n, z, k) != cl.target[k - 1]) {
                        return 1u;
                    }
                }
                return 0u;
            }
        },
        c);
}

/// A classical bit assignment z_1..z_n.
struct Assignment {
    std::vector<std::uint8_t> bits;

    static Assignment from_index(unsigned n, BasisIndex z) {
        Assignment a;
        a.bits.resize(n);
        for (unsigned k = 1; k <= n; ++k) {
            a.bits[k - 1] = static_cast<std::uint8_t>(bit_value(n, z, k));
        }
        return a;
    }

    static Assignment from_string(std::string_view s) {
        Assignment a;
        for (char ch : s) {
            if (ch != '0' && ch != '1') {
                throw Error(ErrorKind::InvalidArgument, "assignment must be a bit string");
            }
            a.bits.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
        return a;
    }

    [[nodiscard]] unsigned size() const { return static_cast<unsigned>(bits.size()); }

    [[nodiscard]] BasisIndex index() const {
        BasisIndex z = 0;
        for (auto b : bits) {
            z = (z << 1) | b;
        }
        return z;
    }

    [[nodiscard]] std::string str() const {
        std::string s;
        s.reserve(bits.size());
        for (auto b : bits) {
            s.push_back(static_cast<char>('0' + b));
        }
        return s;
    }

    bool operator==(const Assignment &) const = default;
    auto operator<=>(const Assignment &) const = default;
};

inline std::string bitstring(unsigned n, BasisIndex z) { return Assignment::from_index(n, z).str(); }

/// Energy of a single clause on an assignment.
inline unsigned clause_energy(const ClauseKind &c, const Assignment &a) {
    validate_clause(c, a.size());
    return clause_energy_index(c, a.size(), a.index());
}

/**
 * An n-bit instance: an ordered clause list whose total energy counts
 * violated clauses. Immutable once built; the constructor validates every
 * clause.
 */
class SatInstance {
  public:
    SatInstance() = default;

    SatInstance(unsigned n, std::vector<ClauseKind> clauses) : n_(n), clauses_(std::move(clauses)) {
        if (n_ < 1) {
            throw Error(ErrorKind::InvalidArgument, "instance needs at least one bit");
        }
        std::size_t grover = 0;
        for (const auto &c : clauses_) {
            validate_clause(c, n_);
            grover += std::holds_alternative<clause::GroverOracle>(c) ? 1 : 0;
        }
        if (grover > 0 && clauses_.size() != 1) {
            throw Error(ErrorKind::InvalidClause, "a grover oracle must be the only clause");
        }
    }

    [[nodiscard]] unsigned n() const { return n_; }
    [[nodiscard]] std::size_t m() const { return clauses_.size(); }
    [[nodiscard]] const std::vector<ClauseKind> &clauses() const { return clauses_; }

    [[nodiscard]] bool is_grover() const {
        return clauses_.size() == 1 && std::holds_alternative<clause::GroverOracle>(clauses_.front());
    }

    /// Number of clauses containing each bit (index 0 holds d_1).
    [[nodiscard]] std::vector<unsigned> degrees() const {
        std::vector<unsigned> d(n_, 0);
        for (const auto &c : clauses_) {
            for (unsigned b : clause_bits(c, n_)) {
                ++d[b - 1];
            }
        }
        return d;
    }

    [[nodiscard]] unsigned energy_index(BasisIndex z) const {
        unsigned e = 0;
        for (const auto &c : clauses_) {
            e += clause_energy_index(c, n_, z);
        }
        return e;
    }

    bool operator==(const SatInstance &) const = default;

  private:
    unsigned n_ = 1;
    std::vector<ClauseKind> clauses_;
};

/// Sum of clause energies, i.e. the number of violated clauses.
inline unsigned total_energy(const SatInstance &inst, const Assignment &a) {
    if (a.size() != inst.n()) {
        throw Error(ErrorKind::DimensionMismatch, "assignment length differs from instance size");
    }
    return inst.energy_index(a.index());
}

struct SolveResult {
    unsigned min_energy = 0;
    std::vector<Assignment> minimizers;  // lexicographic order
};

/// Exhaustive scan over all 2^n assignments.
inline SolveResult brute_force_solve(const SatInstance &inst, const Limits &limits = {}) {
    const unsigned n = inst.n();
    require_qubits(n, limits.max_brute_force_qubits, "brute_force_solve");
    const BasisIndex dim = BasisIndex{1} << n;

    struct Partial {
        unsigned best = std::numeric_limits<unsigned>::max();
        std::vector<BasisIndex> hits;
    };
    const std::size_t chunks = std::min<std::size_t>(64, dim);
    const BasisIndex step = (dim + chunks - 1) / chunks;
    std::vector<Partial> partial(chunks);
    parallel_for(chunks, [&](std::size_t c) {
        Partial &p = partial[c];
        BasisIndex end = std::min<BasisIndex>(dim, (c + 1) * step);
        for (BasisIndex z = c * step; z < end; ++z) {
            unsigned e = inst.energy_index(z);
            if (e < p.best) {
                p.best = e;
                p.hits.clear();
            }
            if (e == p.best) {
                p.hits.push_back(z);
            }
        }
    });

    SolveResult result;
    result.min_energy = std::numeric_limits<unsigned>::max();
    for (const auto &p : partial) {
        result.min_energy = std::min(result.min_energy, p.best);
    }
    for (const auto &p : partial) {
        if (p.best == result.min_energy) {
            for (BasisIndex z : p.hits) {
                result.minimizers.push_back(Assignment::from_index(n, z));
            }
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Text format
//
//   # comment
//   p asat <n> <m>
//   agree i j | disagree i j | imply i j | or l1 [l2 [l3]] | one i v | grover <bits>

namespace detail {

inline std::vector<std::string> split_words(std::string_view line) {
    std::vector<std::string> words;
    std::istringstream in{std::string(line)};
    std::string w;
    while (in >> w) {
        words.push_back(w);
    }
    return words;
}

inline long long parse_int(const std::string &word, std::size_t line) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(word, &used);
    } catch (const std::exception &) {
        throw ParseError(line, "expected an integer, got '" + word + "'");
    }
    if (used != word.size()) {
        throw ParseError(line, "expected an integer, got '" + word + "'");
    }
    return v;
}

} // namespace detail

inline SatInstance parse_instance(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    bool have_header = false;
    long long n = 0;
    long long m = 0;
    std::vector<ClauseKind> clauses;

    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        auto words = detail::split_words(raw);
        if (words.empty()) {
            continue;
        }
        const std::string &op = words[0];
        auto arity = [&](std::size_t expected) {
            if (words.size() != expected + 1) {
                throw ParseError(line, "'" + op + "' expects " + std::to_string(expected) + " argument(s)");
            }
        };
        auto bit_arg = [&](std::size_t pos) -> unsigned {
            long long b = detail::parse_int(words[pos], line);
            if (b < 1 || b > n) {
                throw Error(ErrorKind::InvalidClause,
                            "line " + std::to_string(line) + ": bit index " + words[pos] + " out of range 1.." +
                                std::to_string(n));
            }
            return static_cast<unsigned>(b);
        };

        if (op == "p") {
            if (have_header) {
                throw ParseError(line, "duplicate header");
            }
            if (words.size() != 4 || words[1] != "asat") {
                throw ParseError(line, "header must read 'p asat <n> <m>'");
            }
            n = detail::parse_int(words[2], line);
            m = detail::parse_int(words[3], line);
            if (n < 1 || n > 63) {
                throw ParseError(line, "bit count must be in 1..63");
            }
            if (m < 0) {
                throw ParseError(line, "clause count must be nonnegative");
            }
            have_header = true;
            continue;
        }
        if (!have_header) {
            throw ParseError(line, "clause before 'p asat' header");
        }

        ClauseKind c;
        if (op == "agree" || op == "disagree" || op == "imply") {
            arity(2);
            unsigned i = bit_arg(1);
            unsigned j = bit_arg(2);
            if (op == "agree") {
                c = clause::Agree{i, j};
            } else if (op == "disagree") {
                c = clause::Disagree{i, j};
            } else {
                c = clause::Imply{i, j};
            }
        } else if (op == "or") {
            if (words.size() < 2 || words.size() > 4) {
                throw ParseError(line, "'or' expects one to three literals");
            }
            clause::Or o;
            for (std::size_t k = 1; k < words.size(); ++k) {
                long long lit = detail::parse_int(words[k], line);
                if (lit == 0 || lit < -n || lit > n) {
                    throw Error(ErrorKind::InvalidClause,
                                "line " + std::to_string(line) + ": literal " + words[k] + " out of range");
                }
                o.literals.push_back(static_cast<int>(lit));
            }
            c = std::move(o);
        } else if (op == "one") {
            arity(2);
            unsigned i = bit_arg(1);
            long long v = detail::parse_int(words[2], line);
            if (v != 0 && v != 1) {
                throw ParseError(line, "one-bit clause value must be 0 or 1");
            }
            c = clause::OneBit{i, static_cast<unsigned>(v)};
        } else if (op == "grover") {
            arity(1);
            const std::string &bits = words[1];
            if (bits.size() != static_cast<std::size_t>(n) ||
                bits.find_first_not_of("01") != std::string::npos) {
                throw ParseError(line, "grover target must be a bit string of length " + std::to_string(n));
            }
            for (const auto &prev : clauses) {
                if (std::holds_alternative<clause::GroverOracle>(prev)) {
                    throw ParseError(line, "duplicate grover oracle");
                }
            }
            clause::GroverOracle g;
            for (char ch : bits) {
                g.target.push_back(static_cast<std::uint8_t>(ch - '0'));
            }
            c = std::move(g);
        } else {
            throw ParseError(line, "unknown directive '" + op + "'");
        }
        clauses.push_back(std::move(c));
    }

    if (!have_header) {
        throw ParseError(line + 1, "missing 'p asat' header");
    }
    if (static_cast<long long>(clauses.size()) != m) {
        throw ParseError(line + 1, "header declares " + std::to_string(m) + " clauses, found " +
                                       std::to_string(clauses.size()));
    }
    return SatInstance(static_cast<unsigned>(n), std::move(clauses));
}

inline std::string serialize_clause(const ClauseKind &c) {
    return std::visit(
        [](const auto &cl) -> std::string {
            using T = std::decay_t<decltype(cl)>;
            if constexpr (std::is_same_v<T, clause::Agree>) {
                return "agree " + std::to_string(cl.i) + " " + std::to_string(cl.j);
            } else if constexpr (std::is_same_v<T, clause::Disagree>) {
                return "disagree " + std::to_string(cl.i) + " " + std::to_string(cl.j);
            } else if constexpr (std::is_same_v<T, clause::Imply>) {
                return "imply " + std::to_string(cl.premise) + " " + std::to_string(cl.conclusion);
            } else if constexpr (std::is_same_v<T, clause::Or>) {
                std::string s = "or";
                for (int lit : cl.literals) {
                    s += " " + std::to_string(lit);
                }
                return s;
            } else if constexpr (std::is_same_v<T, clause::OneBit>) {
                return "one " + std::to_string(cl.i) + " " + std::to_string(cl.value);
            } else {
                std::string s = "grover ";
                for (auto b : cl.target) {
                    s.push_back(static_cast<char>('0' + b));
                }
                return s;
            }
        },
        c);
}

inline std::string serialize_instance(const SatInstance &inst) {
    std::string out = "p asat " + std::to_string(inst.n()) + " " + std::to_string(inst.m()) + "\n";
    for (const auto &c : inst.clauses()) {
        out += serialize_clause(c);
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Structured families

/// n clauses on (j, j+1), bit n+1 identified with bit 1. disagree[j-1] marks clause j.
inline SatInstance make_ring(unsigned n, const std::vector<bool> &disagree = {}) {
    if (n < 3) {
        throw Error(ErrorKind::InvalidArgument, "a ring needs at least three bits");
    }
    if (!disagree.empty() && disagree.size() != n) {
        throw Error(ErrorKind::InvalidArgument, "disagree mask must have one entry per clause");
    }
    std::vector<ClauseKind> clauses;
    for (unsigned j = 1; j <= n; ++j) {
        unsigned next = j % n + 1;
        if (!disagree.empty() && disagree[j - 1]) {
            clauses.emplace_back(clause::Disagree{j, next});
        } else {
            clauses.emplace_back(clause::Agree{j, next});
        }
    }
    return SatInstance(n, std::move(clauses));
}

/// Single oracle clause with the given target (all zeros by default).
inline SatInstance make_grover(unsigned n, std::vector<std::uint8_t> target = {}) {
    if (target.empty()) {
        target.assign(n, 0);
    }
    return SatInstance(n, {clause::GroverOracle{std::move(target)}});
}

/**
 * n+1 bits: bit 1 plays the hub. One clause requires the hub to be 1 and
 * each of the n leaves is implied by it.
 */
inline SatInstance make_bush(unsigned n) {
    if (n < 1) {
        throw Error(ErrorKind::InvalidArgument, "bush needs at least one leaf");
    }
    std::vector<ClauseKind> clauses;
    clauses.emplace_back(clause::OneBit{1, 1});
    for (unsigned j = 2; j <= n + 1; ++j) {
        clauses.emplace_back(clause::Imply{1, j});
    }
    return SatInstance(n + 1, std::move(clauses));
}

/// One agree clause on every pair j < k.
inline SatInstance make_overconstrained(unsigned n) {
    if (n < 2) {
        throw Error(ErrorKind::InvalidArgument, "overconstrained family needs n >= 2");
    }
    std::vector<ClauseKind> clauses;
    for (unsigned j = 1; j <= n; ++j) {
        for (unsigned k = j + 1; k <= n; ++k) {
            clauses.emplace_back(clause::Agree{j, k});
        }
    }
    return SatInstance(n, std::move(clauses));
}

/// imply(1,2), disagree(1,3), agree(2,3): unique solution 011.
inline SatInstance make_three_bit_example() {
    return SatInstance(3, {clause::Imply{1, 2}, clause::Disagree{1, 3}, clause::Agree{2, 3}});
}

} // namespace adiaquant
