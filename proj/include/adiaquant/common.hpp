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
 * Error types, resource limits and the small thread pool shared by every
 * module.
 */

#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace adiaquant {

using cplx = std::complex<double>;

enum class ErrorKind {
    InvalidClause,
    Parse,
    Capacity,
    DimensionMismatch,
    InvalidArgument,
    Unsupported,
    NoSatisfyingAssignment,
    NumericalFailure,
    InvalidState,
    StepSize,
    UndefinedEstimate,
};

inline const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidClause: return "invalid-clause";
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Capacity: return "capacity";
        case ErrorKind::DimensionMismatch: return "dimension-mismatch";
        case ErrorKind::InvalidArgument: return "invalid-argument";
        case ErrorKind::Unsupported: return "unsupported";
        case ErrorKind::NoSatisfyingAssignment: return "no-satisfying-assignment";
        case ErrorKind::NumericalFailure: return "numerical-failure";
        case ErrorKind::InvalidState: return "invalid-state";
        case ErrorKind::StepSize: return "step-size";
        case ErrorKind::UndefinedEstimate: return "undefined-estimate";
    }
    return "unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

/// Parse failures remember the 1-based line they occurred on.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string &message)
        : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + message), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// Eigensolver non-convergence; keeps the residual norms of the requested pairs.
class NumericalFailure : public Error {
  public:
    NumericalFailure(const std::string &message, std::vector<double> residuals)
        : Error(ErrorKind::NumericalFailure, message), residuals_(std::move(residuals)) {}

    [[nodiscard]] const std::vector<double> &residuals() const noexcept { return residuals_; }

  private:
    std::vector<double> residuals_;
};

/// Configurable resource limits.
struct Limits {
    /// Largest n for which a 2^n-dimensional vector may be allocated.
    unsigned max_qubits = 24;
    /// Largest n accepted by the exhaustive classical oracle.
    unsigned max_brute_force_qubits = 24;
};

inline void require_qubits(unsigned n, unsigned cap, const char *what) {
    if (n > cap) {
        throw Error(ErrorKind::Capacity, std::string(what) + ": n=" + std::to_string(n) +
                                             " exceeds the dimension cap of " + std::to_string(cap));
    }
}

/// Worker count: hardware concurrency, capped by ADIAQUANT_THREADS when set.
inline unsigned thread_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("ADIAQUANT_THREADS")) {
        char *end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1) {
            hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
        }
    }
    return hw;
}

/**
 * Runs body(i) for i in [0, count). Each index is handled by exactly one
 * worker, so results written to slot i are deterministic. The first
 * exception thrown by any worker is rethrown on the calling thread.
 */
template <class Body>
void parallel_for(std::size_t count, Body &&body, unsigned max_workers = 0) {
    unsigned workers = max_workers == 0 ? thread_count() : std::min(max_workers, thread_count());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                    return;
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

/// Splits [0, count) into contiguous chunks and runs body(begin, end) on each.
template <class Body>
void parallel_chunks(std::size_t count, std::size_t min_chunk, Body &&body) {
    std::size_t chunks = std::min<std::size_t>(thread_count(), (count + min_chunk - 1) / min_chunk);
    if (chunks <= 1) {
        body(std::size_t{0}, count);
        return;
    }
    std::size_t step = (count + chunks - 1) / chunks;
    parallel_for(chunks, [&](std::size_t c) {
        std::size_t begin = c * step;
        std::size_t end = std::min(count, begin + step);
        if (begin < end) {
            body(begin, end);
        }
    });
}

} // namespace adiaquant
