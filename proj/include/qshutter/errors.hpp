#pragma once
#include <complex>
#include <stdexcept>
#include <string>

namespace qshutter {

// process exit contract: 0 ok, 1 bad arguments, 2 domain/precondition, 3 verification failed
enum class exit_code : int { ok = 0, usage = 1, domain = 2, verification = 3 };

// malformed user input (bad grid string, unknown format name, ...)
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// precondition violations (nonpositive time, singular frame, nu = 0, ...)
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// quadrature could not meet its tolerance; carries the best value seen
struct quadrature_error : std::runtime_error {
    std::complex<double> best;
    double estimate;
    quadrature_error(const std::string& what, std::complex<double> best_, double est)
        : std::runtime_error(what), best(best_), estimate(est) {}
};

} // namespace qshutter
